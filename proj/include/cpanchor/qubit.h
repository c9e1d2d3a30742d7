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

#ifndef CPANCHOR_QUBIT_H
#define CPANCHOR_QUBIT_H

#include <array>
#include <optional>
#include <vector>

#include "cpanchor/channel.h"

namespace cpanchor::qubit {

/// A qubit map in the Pauli basis: Phi(I/2 + r.sigma/2) = I/2 + (t + T r).sigma/2.
struct PauliForm {
    Eigen::Vector3d t = Eigen::Vector3d::Zero();
    Eigen::Matrix3d T = Eigen::Matrix3d::Zero();
    std::optional<Eigen::Vector3d> diagonal_lambdas;
    /// Largest imaginary part seen in the Pauli-basis matrix.
    double imaginary_residual = 0.0;
};

PauliForm pauli_form(const Channel &ch, const Tolerance &tol = {});

enum class QubitCase { FullAlgebra, ScalarsOnly, TwoDiagonal };

struct QubitClass {
    QubitCase kind = QubitCase::ScalarsOnly;
    int fixed_dim = 1;
    std::optional<Eigen::Vector3d> lambdas;
    /// For TwoDiagonal: the two rank-one fixed projections, summing to I.
    std::vector<CMatrix> basis_projections;
};

/// Classification of a unital trace-preserving qubit channel by its fixed
/// points. Diagonal channels are classified by counting lambda_k = 1,
/// others by the fixed-space dimension.
QubitClass classify(const Channel &ch, const Tolerance &tol = {});
/// Counting route only; throws PreconditionFailed if the Pauli form is not diagonal.
QubitClass classify_by_lambdas(const Eigen::Vector3d &lambdas, const Tolerance &tol = {});
/// Fixed-space route only.
QubitClass classify_by_fixed_space(const Channel &ch, const Tolerance &tol = {});

/// Solutions p = I/2 + a sigma_x + b sigma_y + c sigma_z of Phi(p) = p for a
/// Pauli-diagonal map, subject to a^2 + b^2 + c^2 = 1/4.
struct FixedProjectionFamily {
    std::array<bool, 3> free_axes{false, false, false};
    int free_count = 0;
    bool nontrivial = false;
    /// Bloch half-vectors (a, b, c) when the family is finite (one free axis).
    std::vector<Eigen::Vector3d> isolated_points;
};

FixedProjectionFamily fixed_projection_solutions(const Eigen::Vector3d &lambdas, const Tolerance &tol = {});

/// Unital map with Pauli-basis superoperator diag(1, l1, l2, l3).
Superoperator pauli_diagonal_map(const Eigen::Vector3d &lambdas);

/// I/2 + a sigma_x + b sigma_y + c sigma_z.
CMatrix bloch_projection(const Eigen::Vector3d &abc);

std::string_view case_name(QubitCase kind);

}  // namespace cpanchor::qubit

#endif  // CPANCHOR_QUBIT_H
