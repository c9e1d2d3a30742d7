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

#ifndef CPANCHOR_STRUCTURE_H
#define CPANCHOR_STRUCTURE_H

#include <cstdint>
#include <vector>

#include "cpanchor/channel.h"
#include "cpanchor/fixedpoint.h"

namespace cpanchor {

/// Both routes of the projection test: order relations between Phi(p) and p,
/// and range inclusions under the Kraus operators. The routes are required to
/// agree; a disagreement raises InternalConsistency.
struct InvarianceVerdict {
    bool phi_ge_p = false;           // Phi(p) - p >= 0
    bool phi_le_p = false;           // p - Phi(p) >= 0
    bool phi_eq_p = false;
    bool adjoint_invariant = false;  // Ran p is A_i^*-invariant
    bool invariant = false;          // Ran p is A_i-invariant
    bool reducing = false;
    /// {min eig(Phi(p) - p), min eig(p - Phi(p)), max ||(I-p) A_i^* p||, max ||(I-p) A_i p||}
    std::vector<double> residuals;
};

InvarianceVerdict invariance_verdict(const Channel &ch, const Projection &p, const Tolerance &tol = {});

/// Checks that the top eigenspace of X (0 <= X <= Phi(X)) is A_i^*-invariant.
/// Throws PreconditionFailed when X is not PSD or X <= Phi(X) fails.
bool top_eigenspace_check(const Channel &ch, const CMatrix &x, const Tolerance &tol = {});

/// Pairwise orthogonal minimal reducing projections summing to I.
std::vector<Projection> minimal_reducing_decomposition(const Channel &ch, std::uint64_t seed = 0,
                                                       const Tolerance &tol = {});

struct DecompositionReport {
    std::vector<Projection> anchors;
    std::size_t summand_count = 0;
    std::vector<Eigen::Index> anchor_dims;
    /// One orthonormal basis (columns) of each anchor range.
    std::vector<CMatrix> cyclic_vector_bases;
    /// Anchor indices grouped by unitary equivalence of the restricted Kraus
    /// families; filled only for unital trace-preserving channels.
    std::vector<std::vector<std::size_t>> equivalence_classes;
    /// Intertwiners W with A|_{class rep} W = W A|_{member}, keyed like equivalence_classes.
    std::vector<std::vector<CMatrix>> intertwiners;
    bool irreducible = false;
    /// Set when the exhaustive minimality pass ran and confirmed every anchor.
    bool exhaustive_minimality = false;
};

struct AnchorOptions {
    std::uint64_t seed = 0;
    bool exhaustive = false;
};

/// Maximal family of pairwise orthogonal minimal projections with p <= Phi(p),
/// i.e. minimal A_i^*-invariant subspaces. Throws NotUnital.
DecompositionReport anchor_projections(const Channel &ch, const AnchorOptions &options = {},
                                       const Tolerance &tol = {});

/// Smallest A_i^*-invariant subspace containing v, as orthonormal columns.
CMatrix adjoint_orbit_span(const Channel &ch, const CVector &v, const Tolerance &tol = {});

/// Property harness: every constructed projection with Phi(p) >= p also has
/// Phi(p) = p. Throws NotUnitalChannel unless unital and trace preserving.
bool unital_channel_invariant_is_reducing(const Channel &ch, std::size_t trials, std::uint64_t seed = 0,
                                          const Tolerance &tol = {});

/// Deterministic ordering: rank, first support index, then the rounded real
/// parts of the row at the first support index.
void sort_projections(std::vector<Projection> &projections, const Tolerance &tol = {});

}  // namespace cpanchor

#endif  // CPANCHOR_STRUCTURE_H
