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

#include "cpanchor/channel.h"

#include <gtest/gtest.h>

#include "cpanchor/io.h"
#include "support/oracles.h"

namespace cpanchor {
namespace {

using testing::arveson_kraus;
using testing::diag_matrix;
using testing::fixture;
using testing::gauss_rank;
using testing::jacobi_eigenvalues;
using testing::naive_apply;
using testing::naive_choi;

Superoperator wavelet3() { return io::superoperator_from_json(io::load_file(fixture("wavelet3_superoperator.json"))); }

TEST(ChannelType, ValidatesShapes) {
    EXPECT_THROW(Channel({}), Error);
    EXPECT_THROW(Channel({CMatrix::Identity(2, 3)}), Error);
    EXPECT_THROW(Channel({CMatrix::Identity(2, 2), CMatrix::Identity(3, 3)}), Error);
}

TEST(Apply, IdentityChannel) {
    Rng rng(1);
    const CMatrix x = rng.ginibre(3, 3);
    EXPECT_LT((cpanchor::apply(Channel::identity(3), x) - x).norm(), 1e-14);
}

TEST(Apply, MatchesNaiveLoops) {
    const Channel ch = random_channel(3, 3, RandomChannelKind::TracePreservingCP, 4);
    Rng rng(8);
    const CMatrix x = rng.ginibre(3, 3);
    EXPECT_LT((cpanchor::apply(ch, x) - naive_apply(ch.kraus(), x)).norm(), 1e-12);
}

TEST(Apply, ThreeLevelWaveletMapFixesDiagonalBlocks) {
    const Superoperator s = wavelet3();
    CMatrix e00 = CMatrix::Zero(3, 3);
    e00(0, 0) = 1.0;
    EXPECT_LT((s.apply(e00) - e00).norm(), 1e-10);
    const CMatrix lower = diag_matrix({0.0, 1.0, 1.0});
    EXPECT_LT((s.apply(lower) - lower).norm(), 1e-10);
}

TEST(DualApply, InvertsUnitaryConjugation) {
    Rng rng(2);
    const Channel ch = Channel::unitary(rng.haar_unitary(3));
    const CMatrix x = rng.ginibre(3, 3);
    EXPECT_LT((dual_apply(ch, cpanchor::apply(ch, x)) - x).norm(), 1e-12);
    EXPECT_LT((dual_apply(Channel::identity(3), x) - x).norm(), 1e-14);
}

TEST(DualApply, TracePairing) {
    const Channel ch = random_channel(4, 3, RandomChannelKind::UnitalCP, 6);
    Rng rng(6);
    const CMatrix x = rng.ginibre(4, 4);
    const CMatrix y = rng.ginibre(4, 4);
    const cplx lhs = (cpanchor::apply(ch, x).adjoint() * y).trace();
    const cplx rhs = (x.adjoint() * dual_apply(ch, y)).trace();
    EXPECT_LT(std::abs(lhs - rhs), 1e-10);
}

TEST(Flags, UnitalAndTracePreserving) {
    EXPECT_TRUE(is_unital(Channel::identity(3)));
    EXPECT_TRUE(is_trace_preserving(Channel::identity(3)));
    const Channel arveson(arveson_kraus(3));
    EXPECT_TRUE(is_unital(arveson));
    EXPECT_FALSE(is_trace_preserving(arveson));
    const Channel mixed = random_channel(3, 4, RandomChannelKind::UnitalTracePreserving, 3);
    EXPECT_TRUE(is_trace_preserving(mixed));
    EXPECT_TRUE(is_unital(mixed));
}

TEST(Flags, ThreeLevelWaveletMapTraceOfColumns) {
    // tr Phi(E_{-1,-1}) is the sum of the stored column for E_{-1,-1}: s + s = sqrt(2).
    const Superoperator s = wavelet3();
    CMatrix e11 = CMatrix::Zero(3, 3);
    e11(1, 1) = 1.0;
    EXPECT_NEAR(s.apply(e11).trace().real(), std::sqrt(2.0), 1e-12);
    const MapProperties props = map_properties(s);
    EXPECT_TRUE(props.unital);
    EXPECT_FALSE(props.trace_preserving);
}

TEST(Choi, IdentityIsMaximallyEntangledProjector) {
    const ChoiMatrix c = to_choi(Channel::identity(2));
    CVector omega = CVector::Zero(4);
    omega(0) = 1.0;
    omega(3) = 1.0;
    EXPECT_LT((c.matrix - omega * omega.adjoint()).norm(), 1e-14);
}

TEST(Choi, RankBoundedByKrausCount) {
    Rng rng(3);
    const Channel single({rng.ginibre(3, 3)});
    EXPECT_EQ(gauss_rank(to_choi(single).matrix), 1);
    const Channel ch = random_channel(3, 3, RandomChannelKind::TracePreservingCP, 9);
    const ChoiMatrix c = to_choi(ch);
    EXPECT_LT((c.matrix - naive_choi(ch.kraus(), 3)).norm(), 1e-12);
    EXPECT_LE(gauss_rank(c.matrix), 3);
    EXPECT_GT(jacobi_eigenvalues(c.matrix).front(), -1e-10);
}

TEST(ChoiToKraus, IdentityGivesIdentity) {
    const Channel k = choi_to_kraus(to_choi(Channel::identity(3)));
    ASSERT_EQ(k.size(), 1u);
    EXPECT_LT((k[0] - CMatrix::Identity(3, 3)).norm(), 1e-12);
}

TEST(ChoiToKraus, TransposeIsRejected) {
    const Superoperator t = io::superoperator_from_json(io::load_file(fixture("transpose_d2.json")));
    const ChoiMatrix c = to_choi(t);
    EXPECT_NEAR(jacobi_eigenvalues(c.matrix).front(), -1.0, 1e-12);
    try {
        choi_to_kraus(c);
        FAIL() << "transpose map accepted";
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotCP);
    }
}

TEST(ChoiToKraus, ThreeLevelWaveletMatrixIsNotCompletelyPositive) {
    // The fixture matrix sends the Hermitian E_{-2,-2} to a matrix with
    // eigenvalues {1 - sqrt(2), 0, 1}; this is checked here directly.
    const Superoperator s = wavelet3();
    CMatrix e22 = CMatrix::Zero(3, 3);
    e22(2, 2) = 1.0;
    const CMatrix image = s.apply(e22);
    EXPECT_NEAR(jacobi_eigenvalues(image).front(), 1.0 - std::sqrt(2.0), 1e-12);
    EXPECT_THROW(superoperator_to_channel(s), Error);
}

TEST(ChoiToKraus, RoundTripReproducesMap) {
    const Channel ch = random_channel(3, 2, RandomChannelKind::UnitalCP, 12);
    const Channel back = choi_to_kraus(to_choi(ch));
    for (Eigen::Index i = 0; i < 3; ++i) {
        for (Eigen::Index j = 0; j < 3; ++j) {
            const CMatrix e = matrix_unit(3, i, j);
            EXPECT_LT((naive_apply(back.kraus(), e) - naive_apply(ch.kraus(), e)).norm(), 1e-10);
        }
    }
}

TEST(Superoperator, IdentityInEveryBasis) {
    const Channel id = Channel::identity(2);
    for (const OperatorBasis &b : {OperatorBasis::matrix_units_row_major(2), OperatorBasis::pauli()}) {
        EXPECT_LT((to_superoperator(id, b).matrix - CMatrix::Identity(4, 4)).norm(), 1e-12);
    }
}

TEST(Superoperator, PauliDiagonalForm) {
    // Phase flip with p = 1/4: lambda = (1/2, 1/2, 1).
    const Channel ch({std::sqrt(0.75) * CMatrix::Identity(2, 2), 0.5 * testing::pauli_z()});
    const Superoperator s = to_superoperator(ch, OperatorBasis::pauli());
    EXPECT_LT((s.matrix - diag_matrix({1.0, 0.5, 0.5, 1.0})).norm(), 1e-12);
}

TEST(Superoperator, ColumnsAreImages) {
    const Channel ch = random_channel(2, 2, RandomChannelKind::TracePreservingCP, 5);
    const OperatorBasis b = OperatorBasis::matrix_units_row_major(2);
    const Superoperator s = to_superoperator(ch, b);
    for (Eigen::Index j = 0; j < 4; ++j) {
        const CMatrix image = naive_apply(ch.kraus(), b.elements()[static_cast<std::size_t>(j)]);
        EXPECT_LT((b.compose(s.matrix.col(j)) - image).norm(), 1e-12);
    }
}

TEST(Superoperator, CustomOrderRoundTrip) {
    const Channel ch(arveson_kraus(3));
    const OperatorBasis b = wavelet3().basis;
    const Superoperator s = to_superoperator(ch, b);
    const Channel back = superoperator_to_channel(s);
    Rng rng(1);
    const CMatrix x = rng.ginibre(3, 3);
    EXPECT_LT((cpanchor::apply(back, x) - cpanchor::apply(ch, x)).norm(), 1e-10);
}

TEST(Superoperator, CompletelyDepolarizing) {
    const Superoperator s{OperatorBasis::pauli(), diag_matrix({1.0, 0.0, 0.0, 0.0})};
    const Channel ch = superoperator_to_channel(s);
    EXPECT_LT(cpanchor::apply(ch, testing::pauli_x()).norm(), 1e-12);
    EXPECT_LT((cpanchor::apply(ch, CMatrix::Identity(2, 2)) - CMatrix::Identity(2, 2)).norm(), 1e-12);
}

TEST(OperatorBasis, CustomLabelsMapNaturally) {
    const OperatorBasis b = wavelet3().basis;
    EXPECT_EQ(b.label_index(0), 0);
    EXPECT_EQ(b.label_index(-1), 1);
    EXPECT_EQ(b.label_index(-2), 2);
    EXPECT_THROW(OperatorBasis::matrix_units_custom({{0, 0}, {0, 0}, {1, 1}, {1, 0}}), Error);
}

TEST(RandomChannel, ConstructorGuarantees) {
    const Channel u = random_channel(2, 1, RandomChannelKind::UnitalTracePreserving, 1);
    ASSERT_EQ(u.size(), 1u);
    EXPECT_LT((u[0].adjoint() * u[0] - CMatrix::Identity(2, 2)).norm(), 1e-12);
    EXPECT_TRUE(is_unital(random_channel(3, 2, RandomChannelKind::UnitalCP, 2)));
    EXPECT_TRUE(is_trace_preserving(random_channel(3, 2, RandomChannelKind::TracePreservingCP, 2)));
}

}  // namespace
}  // namespace cpanchor
