// Copyright 2026 The cpanchor Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cpanchor/io.h"

#include <gtest/gtest.h>

#include "support/oracles.h"

namespace cpanchor {
namespace {

using testing::fixture;

ErrorKind kind_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.kind();
    }
    return ErrorKind::InternalConsistency;
}

TEST(MatrixJson, RoundTrip) {
    Rng rng(1);
    const CMatrix m = rng.ginibre(2, 3);
    EXPECT_EQ(io::matrix_from_json(io::to_json(m)), m);
}

TEST(MatrixJson, RealEntriesAccepted) {
    const auto j = io::json::parse(R"({"rows": 1, "cols": 2, "entries": [1.5, [0, 2]]})");
    const CMatrix m = io::matrix_from_json(j);
    EXPECT_EQ(m(0, 0), cplx(1.5, 0.0));
    EXPECT_EQ(m(0, 1), cplx(0.0, 2.0));
}

TEST(MatrixJson, MalformedInputIsParseError) {
    EXPECT_EQ(kind_of([] { io::matrix_from_json(io::json::parse(R"({"rows": 2, "cols": 2, "entries": [1]})")); }),
              ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { io::matrix_from_json(io::json::parse(R"([1, 2])")); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { io::load_file("/nonexistent/file.json"); }), ErrorKind::ParseError);
}

TEST(ChannelJson, RoundTrip) {
    const Channel ch = random_channel(3, 2, RandomChannelKind::TracePreservingCP, 3);
    const Channel back = io::channel_from_json(io::to_json(ch));
    ASSERT_EQ(back.size(), 2u);
    EXPECT_EQ(back[1], ch[1]);
}

TEST(ChannelJson, DimensionMismatchIsParseError) {
    const auto j = io::json::parse(R"({"dim": 3, "kraus": [{"rows": 2, "cols": 2, "entries": [1, 0, 0, 1]}]})");
    EXPECT_EQ(kind_of([&] { io::channel_from_json(j); }), ErrorKind::ParseError);
}

TEST(SuperoperatorJson, FixturesLoad) {
    const Superoperator eg = io::superoperator_from_json(io::load_file(fixture("wavelet3_superoperator.json")));
    EXPECT_EQ(eg.basis.kind(), BasisKind::MatrixUnitsCustomOrder);
    EXPECT_EQ(eg.dim(), 3);
    const auto doc = io::map_from_json(io::load_file(fixture("arveson_k4.json")));
    ASSERT_TRUE(std::holds_alternative<Superoperator>(doc));
    EXPECT_EQ(std::get<Superoperator>(doc).dim(), 4);
    const auto kraus_doc = io::map_from_json(io::load_file(fixture("phase_damping.json")));
    EXPECT_TRUE(std::holds_alternative<Channel>(kraus_doc));
}

TEST(SuperoperatorJson, RoundTripCustomBasis) {
    const Superoperator eg = io::superoperator_from_json(io::load_file(fixture("wavelet3_superoperator.json")));
    const Superoperator back = io::superoperator_from_json(io::to_json(eg));
    EXPECT_EQ(back.matrix, eg.matrix);
    EXPECT_EQ(back.basis.order(), eg.basis.order());
}

TEST(SuperoperatorJson, BadBasisIsParseError) {
    const io::json j = {{"basis", {{"kind", "pauli"}}}, {"matrix", io::to_json(CMatrix::Identity(9, 9))}};
    EXPECT_EQ(kind_of([&] { io::superoperator_from_json(j); }), ErrorKind::ParseError);
    const auto unknown = io::json::parse(
        R"({"basis": {"kind": "spherical"}, "matrix": {"rows": 1, "cols": 1, "entries": [1]}})");
    EXPECT_EQ(kind_of([&] { io::superoperator_from_json(unknown); }), ErrorKind::ParseError);
}

TEST(FilterBankJson, HaarFixture) {
    const wavelet::FilterBank fb = io::filterbank_from_json(io::load_file(fixture("haar_filterbank.json")));
    const wavelet::FilterBank ref = wavelet::FilterBank::haar();
    ASSERT_EQ(fb.filters.size(), 2u);
    for (std::size_t i = 0; i < 2; ++i) {
        for (const auto &[e, c] : ref.filters[i]) EXPECT_LT(std::abs(fb.filters[i].at(e) - c), 1e-15);
    }
    const auto bad = io::json::parse(R"({"scale": 3, "filters": [[]]})");
    EXPECT_EQ(kind_of([&] { io::filterbank_from_json(bad); }), ErrorKind::ParseError);
}

TEST(ProjectionJson, BareAndWrapped) {
    EXPECT_EQ(io::projection_from_json(io::load_file(fixture("arveson_E00.json"))).rank(), 1);
    const auto bare = io::to_json(CMatrix::Identity(2, 2));
    EXPECT_EQ(io::projection_from_json(bare).rank(), 2);
    const auto not_projection = io::to_json(CMatrix(2.0 * CMatrix::Identity(2, 2)));
    EXPECT_EQ(kind_of([&] { io::projection_from_json(not_projection); }), ErrorKind::ParseError);
}

}  // namespace
}  // namespace cpanchor
