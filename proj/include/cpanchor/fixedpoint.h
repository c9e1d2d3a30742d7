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

#ifndef CPANCHOR_FIXEDPOINT_H
#define CPANCHOR_FIXEDPOINT_H

#include <optional>
#include <vector>

#include "cpanchor/channel.h"

namespace cpanchor {

/// Subspace of M_d stored as orthonormal column-stacked vectors (trace
/// pairing), i.e. a d^2 x k matrix with orthonormal columns.
struct SubspaceBasis {
    Eigen::Index op_dim = 0;
    CMatrix columns;

    Eigen::Index size() const noexcept { return columns.cols(); }
    CMatrix element(Eigen::Index k) const { return unvec(columns.col(k), op_dim); }
    std::vector<CMatrix> elements() const;
    /// ||X - P_span X||_F for an operator X.
    double distance(const CMatrix &x) const;
    bool contains(const CMatrix &x, double bound) const { return distance(x) <= bound; }
};

struct AlgebraClosure {
    std::vector<CMatrix> generators;
    SubspaceBasis basis;
    bool star_closed = false;
    double star_residual = 0.0;
};

/// Null space of (Phi - id) on M_d.
SubspaceBasis fixed_point_space(const Channel &ch, const Tolerance &tol = {});

/// {X : G X = X G for every generator}. An empty generator list gives M_d,
/// which requires `dim`.
SubspaceBasis commutant(const std::vector<CMatrix> &generators, const Tolerance &tol = {}, Eigen::Index dim = -1);

/// Unital algebra spanned by all words in the generators (and their adjoints
/// when requested), grown breadth first until the span stops growing.
AlgebraClosure algebra_closure(const std::vector<CMatrix> &generators, const Tolerance &tol = {},
                               bool include_adjoints = false);

struct ClosureCheck {
    bool closed = true;
    double max_residual = 0.0;
    /// Pair (X, Y) from the basis with XY farthest from the span.
    std::optional<std::pair<CMatrix, CMatrix>> witness;
};

/// Whether every product of basis elements stays in the span.
ClosureCheck multiplicative_closure(const SubspaceBasis &space, const Tolerance &tol = {});

struct FixedCommutantReport {
    bool equal = false;
    Eigen::Index dim = 0;
    Eigen::Index commutant_dim = 0;
    /// Largest principal-angle sine between the two spaces.
    double max_residual = 0.0;
    bool multiplicatively_closed = false;
    double closure_residual = 0.0;
};

/// Compares the fixed space with the commutant of the Kraus operators.
/// Throws NotUnitalChannel unless the channel is unital and trace preserving.
FixedCommutantReport verify_fixed_equals_commutant(const Channel &ch, const Tolerance &tol = {});

enum class MonotoneCase {
    Increasing,  // Phi(p) >= p: the limit is the infimum of fixed X >= p
    Decreasing,  // Phi(p) <= p: the limit is the supremum of fixed X <= p
    Fixed,       // Phi(p) = p
};

struct PhiInfinityResult {
    CMatrix limit;
    MonotoneCase direction = MonotoneCase::Fixed;
    std::size_t iterations = 0;
    double residual = 0.0;
    /// Every step X_{k+1} - X_k stayed semidefinite in the expected direction.
    bool monotone = true;
};

/// Iterates X <- Phi(X) from X = p. Requires a unital channel and a projection
/// comparable with Phi(p) (else NotMonotone); NoConvergence after max_iter.
PhiInfinityResult phi_infinity(const Channel &ch, const Projection &p, const Tolerance &tol = {},
                               std::size_t max_iter = 100000);

/// Unitary W with A_i W = W B_i (and A_i^* W = W B_i^*) for all i, or nullopt
/// when the families are inequivalent or of different dimension.
std::optional<CMatrix> find_intertwiner(const std::vector<CMatrix> &block_a, const std::vector<CMatrix> &block_b,
                                        const Tolerance &tol = {});

}  // namespace cpanchor

#endif  // CPANCHOR_FIXEDPOINT_H
