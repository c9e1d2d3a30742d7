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

#include "cpanchor/matcore.h"

#include <limits>

#include <gtest/gtest.h>

#include "support/oracles.h"

namespace cpanchor {
namespace {

using testing::diag_matrix;
using testing::gauss_rank;
using testing::jacobi_eigenvalues;

TEST(HermitianEig, IdentityHasUnitEigenvalues) {
    const HermitianEigen e = hermitian_eig(CMatrix::Identity(3, 3));
    for (Eigen::Index i = 0; i < 3; ++i) EXPECT_NEAR(e.values(i), 1.0, 1e-14);
    EXPECT_LT((e.vectors.adjoint() * e.vectors - CMatrix::Identity(3, 3)).norm(), 1e-12);
}

TEST(HermitianEig, DiagonalValuesAscend) {
    const HermitianEigen e = hermitian_eig(diag_matrix({1.0, 0.0, -1.0}));
    EXPECT_NEAR(e.values(0), -1.0, 1e-14);
    EXPECT_NEAR(e.values(1), 0.0, 1e-14);
    EXPECT_NEAR(e.values(2), 1.0, 1e-14);
}

TEST(HermitianEig, RandomReconstructsAndMatchesJacobi) {
    Rng rng(7);
    const CMatrix r = rng.ginibre(5, 5);
    const CMatrix h = 0.5 * (r + r.adjoint());
    const HermitianEigen e = hermitian_eig(h);
    const CMatrix rebuilt = e.vectors * e.values.cast<cplx>().asDiagonal() * e.vectors.adjoint();
    EXPECT_LT((h - rebuilt).norm(), 1e-10);
    const std::vector<double> ref = jacobi_eigenvalues(h);
    for (Eigen::Index i = 0; i < 5; ++i) EXPECT_NEAR(e.values(i), ref[static_cast<std::size_t>(i)], 1e-10);
}

TEST(HermitianEig, RejectsNonHermitian) {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 1) = 1.0;
    EXPECT_THROW(hermitian_eig(m), Error);
    EXPECT_THROW(hermitian_eig(CMatrix::Zero(2, 3)), Error);
}

TEST(IsPsd, Basics) {
    EXPECT_TRUE(is_psd(CMatrix::Zero(3, 3)));
    EXPECT_FALSE(is_psd(diag_matrix({1.0, -0.5})));
    Rng rng(3);
    const CMatrix a = rng.ginibre(4, 4);
    EXPECT_TRUE(is_psd(a * a.adjoint()));
}

TEST(IsPsd, SlackIsRelativeToNorm) {
    EXPECT_TRUE(is_psd(diag_matrix({1e6, -1e-4})));
    EXPECT_FALSE(is_psd(diag_matrix({1.0, -1e-6})));
}

TEST(EigenspaceProjection, PicksMatchingEigenvalue) {
    const Projection p = eigenspace_projection(diag_matrix({1.0, 1.0, 0.0}), 1.0);
    EXPECT_EQ(p.rank(), 2);
    EXPECT_LT((p.matrix() - diag_matrix({1.0, 1.0, 0.0})).norm(), 1e-12);
    EXPECT_EQ(eigenspace_projection(diag_matrix({1.0, 1.0, 0.0}), 0.5).rank(), 0);
}

TEST(EigenspaceProjection, DoubledTopEigenvalue) {
    Rng rng(11);
    const CMatrix u = rng.haar_unitary(4);
    const CMatrix m = u * diag_matrix({3.0, 3.0, 1.0, -2.0}) * u.adjoint();
    const Projection p = eigenspace_projection(m, 3.0);
    EXPECT_EQ(p.rank(), 2);
    EXPECT_LT((p.matrix() * m - m * p.matrix()).norm(), 1e-9);
    EXPECT_LT((m * p.matrix() - 3.0 * p.matrix()).norm(), 1e-9);
}

TEST(Orthonormalize, DropsDependentVectors) {
    const CVector e1 = CVector::Unit(3, 0);
    const CVector e2 = CVector::Unit(3, 1);
    EXPECT_EQ(orthonormalize({e1, e1}, 3).cols(), 1);
    const CMatrix q = orthonormalize({e1, e2}, 3);
    EXPECT_EQ(q.cols(), 2);
    EXPECT_LT(std::abs(q.col(0).dot(q.col(1))), 1e-14);
    EXPECT_LT(containment_sine(q, CMatrix::Identity(3, 2)), 1e-12);
}

TEST(Orthonormalize, RandomVectorsSpanTheSpace) {
    Rng rng(5);
    std::vector<CVector> vs;
    for (int i = 0; i < 5; ++i) vs.push_back(rng.random_vector(3));
    const CMatrix q = orthonormalize(vs, 3);
    CMatrix stacked(3, 5);
    for (int i = 0; i < 5; ++i) stacked.col(i) = vs[static_cast<std::size_t>(i)];
    EXPECT_EQ(q.cols(), gauss_rank(stacked));
    EXPECT_LT((q.adjoint() * q - CMatrix::Identity(3, 3)).norm(), 1e-12);
}

TEST(NullSpace, MatchesRank) {
    Rng rng(9);
    const CMatrix a = rng.ginibre(3, 2) * rng.ginibre(2, 5);
    const CMatrix n = null_space(a);
    EXPECT_EQ(n.cols(), 5 - gauss_rank(a));
    EXPECT_LT((a * n).norm(), 1e-10);
}

TEST(SubspaceSine, DetectsEqualityAndOrthogonality) {
    const CMatrix q = CMatrix::Identity(3, 2);
    Rng rng(2);
    const CMatrix rotated = q * rng.haar_unitary(2);
    EXPECT_LT(subspace_sine(q, rotated), 1e-12);
    const CMatrix other = CMatrix::Identity(3, 3).rightCols(1);
    EXPECT_NEAR(containment_sine(other, q), 1.0, 1e-12);
}

TEST(Vec, ColumnStacking) {
    CMatrix x(2, 2);
    x << 1.0, 2.0, 3.0, 4.0;
    const CVector v = vec(x);
    EXPECT_EQ(v(1), cplx(3.0));
    EXPECT_EQ(v(2), cplx(2.0));
    EXPECT_EQ(unvec(v, 2), x);
}

TEST(Vec, KronIdentity) {
    Rng rng(4);
    const CMatrix a = rng.ginibre(3, 3);
    const CMatrix b = rng.ginibre(3, 3);
    const CMatrix x = rng.ginibre(3, 3);
    EXPECT_LT((vec(a * x * b) - kron(b.transpose(), a) * vec(x)).norm(), 1e-10);
}

TEST(ProjectionType, ValidatesInput) {
    EXPECT_EQ(Projection::from_matrix(diag_matrix({1.0, 0.0, 1.0})).rank(), 2);
    EXPECT_THROW(Projection::from_matrix(diag_matrix({0.5, 0.0})), Error);
    EXPECT_EQ(Projection::identity(3).complement().rank(), 0);
}

TEST(CanonicalRangeBasis, UsesCoordinateOrder) {
    const CMatrix q = canonical_range_basis(diag_matrix({0.0, 1.0, 1.0}));
    ASSERT_EQ(q.cols(), 2);
    EXPECT_LT((q - CMatrix::Identity(3, 3).rightCols(2)).norm(), 1e-14);
    EXPECT_EQ(first_support_index(diag_matrix({0.0, 1.0, 1.0})), 1);
}

TEST(ToleranceCheck, RejectsNonsense) {
    Tolerance t;
    t.rel_eps = -1.0;
    EXPECT_THROW(t.validate(), Error);
    Tolerance inf;
    inf.psd_slack = std::numeric_limits<double>::infinity();
    EXPECT_THROW(inf.validate(), Error);
    Tolerance nan;
    nan.abs_eps = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(nan.validate(), Error);
    Tolerance ok;
    EXPECT_NO_THROW(ok.validate());
}

TEST(RngDeterminism, SameSeedSameDraws) {
    Rng a(42);
    Rng b(42);
    EXPECT_EQ(a.haar_unitary(3), b.haar_unitary(3));
    Rng c(1);
    const CMatrix u = c.haar_unitary(4);
    EXPECT_LT((u.adjoint() * u - CMatrix::Identity(4, 4)).norm(), 1e-12);
}

}  // namespace
}  // namespace cpanchor
