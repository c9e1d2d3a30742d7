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

#include "cpanchor/qubit.h"

#include <algorithm>
#include <cmath>

#include "cpanchor/fixedpoint.h"
#include "cpanchor/structure.h"

namespace cpanchor::qubit {

namespace {

void require_qubit(const Channel &ch) {
    if (ch.dim() != 2) throw Error(ErrorKind::NotQubit, "expected a channel on C^2, got dimension " + std::to_string(ch.dim()));
}

const CMatrix &sigma(int axis) {
    static const std::vector<CMatrix> paulis = OperatorBasis::pauli().elements();
    return paulis[static_cast<std::size_t>(axis + 1)];
}

QubitClass two_diagonal(std::vector<CMatrix> projections) {
    QubitClass out;
    out.kind = QubitCase::TwoDiagonal;
    out.fixed_dim = 2;
    out.basis_projections = std::move(projections);
    return out;
}

}  // namespace

std::string_view case_name(QubitCase kind) {
    switch (kind) {
        case QubitCase::FullAlgebra: return "full";
        case QubitCase::ScalarsOnly: return "scalars";
        case QubitCase::TwoDiagonal: return "two_diagonal";
    }
    return "unknown";
}

CMatrix bloch_projection(const Eigen::Vector3d &abc) {
    CMatrix p = 0.5 * CMatrix::Identity(2, 2);
    for (int k = 0; k < 3; ++k) p += abc(k) * sigma(k);
    return p;
}

Superoperator pauli_diagonal_map(const Eigen::Vector3d &lambdas) {
    CMatrix m = CMatrix::Zero(4, 4);
    m(0, 0) = 1.0;
    for (int k = 0; k < 3; ++k) m(k + 1, k + 1) = lambdas(k);
    return {OperatorBasis::pauli(), m};
}

PauliForm pauli_form(const Channel &ch, const Tolerance &tol) {
    require_qubit(ch);
    const Superoperator s = to_superoperator(ch, OperatorBasis::pauli());
    PauliForm form;
    form.imaginary_residual = s.matrix.imag().cwiseAbs().maxCoeff();
    for (int i = 0; i < 3; ++i) {
        form.t(i) = s.matrix(i + 1, 0).real();
        for (int j = 0; j < 3; ++j) form.T(i, j) = s.matrix(i + 1, j + 1).real();
    }
    double off = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (i != j) off = std::max(off, std::abs(s.matrix(i + 1, j + 1)));
        }
    }
    if (off < tol.rel_eps) form.diagonal_lambdas = form.T.diagonal();
    return form;
}

QubitClass classify_by_lambdas(const Eigen::Vector3d &lambdas, const Tolerance &tol) {
    int ones = 0;
    int axis = -1;
    for (int k = 0; k < 3; ++k) {
        if (std::abs(lambdas(k) - 1.0) <= tol.rel_eps) {
            ++ones;
            axis = k;
        }
    }
    QubitClass out;
    switch (ones) {
        case 3:
            out.kind = QubitCase::FullAlgebra;
            out.fixed_dim = 4;
            break;
        case 0:
            out.kind = QubitCase::ScalarsOnly;
            out.fixed_dim = 1;
            break;
        case 1: {
            Eigen::Vector3d half = Eigen::Vector3d::Zero();
            half(axis) = 0.5;
            out = two_diagonal({bloch_projection(half), bloch_projection(-half)});
            break;
        }
        default:
            throw Error(ErrorKind::ToleranceConflict,
                        "exactly two lambdas equal 1 within tolerance, which no completely positive map allows");
    }
    out.lambdas = lambdas;
    return out;
}

QubitClass classify_by_fixed_space(const Channel &ch, const Tolerance &tol) {
    require_qubit(ch);
    const SubspaceBasis fixed = fixed_point_space(ch, tol);
    QubitClass out;
    switch (fixed.size()) {
        case 4:
            out.kind = QubitCase::FullAlgebra;
            out.fixed_dim = 4;
            return out;
        case 1:
            out.kind = QubitCase::ScalarsOnly;
            out.fixed_dim = 1;
            return out;
        case 2: {
            // The fixed algebra is span{I, H}; the spectral projections of a
            // non-scalar Hermitian element are its two minimal projections.
            CMatrix best;
            double best_norm = 0.0;
            // Basis elements may be complex multiples of Hermitian ones, so
            // look at both the Hermitian and the skew-Hermitian part.
            const cplx i_unit(0.0, 1.0);
            for (const CMatrix &f : fixed.elements()) {
                for (const CMatrix &part : {CMatrix(0.5 * (f + f.adjoint())), CMatrix(-0.5 * i_unit * (f - f.adjoint()))}) {
                    const CMatrix h = part - 0.5 * part.trace() * CMatrix::Identity(2, 2);
                    if (h.norm() > best_norm) {
                        best_norm = h.norm();
                        best = h;
                    }
                }
            }
            if (best_norm <= std::sqrt(tol.rel_eps)) break;
            const HermitianEigen eig = hermitian_eig(best, tol);
            std::vector<Projection> projections;
            for (int k = 0; k < 2; ++k) projections.push_back(Projection::onto_columns(eig.vectors.col(k)));
            sort_projections(projections, tol);
            return two_diagonal({projections[0].matrix(), projections[1].matrix()});
        }
        default:
            break;
    }
    throw Error(ErrorKind::ToleranceConflict,
                "fixed space of dimension " + std::to_string(fixed.size()) + " fits no qubit case");
}

QubitClass classify(const Channel &ch, const Tolerance &tol) {
    require_qubit(ch);
    if (!is_unital(ch, tol) || !is_trace_preserving(ch, tol)) {
        throw Error(ErrorKind::NotUnitalChannel, "qubit classification needs a unital trace-preserving channel");
    }
    const PauliForm form = pauli_form(ch, tol);
    if (form.diagonal_lambdas) return classify_by_lambdas(*form.diagonal_lambdas, tol);
    return classify_by_fixed_space(ch, tol);
}

FixedProjectionFamily fixed_projection_solutions(const Eigen::Vector3d &lambdas, const Tolerance &tol) {
    if (lambdas.cwiseAbs().maxCoeff() > 1.0 + tol.rel_eps) {
        throw Error(ErrorKind::PreconditionFailed, "Pauli eigenvalues of a unital channel satisfy |lambda| <= 1");
    }
    FixedProjectionFamily family;
    for (int k = 0; k < 3; ++k) {
        family.free_axes[static_cast<std::size_t>(k)] = std::abs(lambdas(k) - 1.0) <= tol.rel_eps;
        if (family.free_axes[static_cast<std::size_t>(k)]) ++family.free_count;
    }
    family.nontrivial = family.free_count > 0;
    if (family.free_count == 1) {
        for (int k = 0; k < 3; ++k) {
            if (!family.free_axes[static_cast<std::size_t>(k)]) continue;
            Eigen::Vector3d half = Eigen::Vector3d::Zero();
            half(k) = 0.5;
            family.isolated_points = {half, -half};
        }
    }
    return family;
}

}  // namespace cpanchor::qubit
