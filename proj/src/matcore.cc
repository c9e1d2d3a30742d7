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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace cpanchor {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonSquare: return "NonSquare";
        case ErrorKind::NotHermitian: return "NotHermitian";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotCP: return "NotCP";
        case ErrorKind::NotHermiticityPreserving: return "NotHermiticityPreserving";
        case ErrorKind::NotUnital: return "NotUnital";
        case ErrorKind::NotUnitalChannel: return "NotUnitalChannel";
        case ErrorKind::NotMonotone: return "NotMonotone";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::NotQubit: return "NotQubit";
        case ErrorKind::ToleranceConflict: return "ToleranceConflict";
        case ErrorKind::PreconditionFailed: return "PreconditionFailed";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InternalConsistency: return "InternalConsistency";
    }
    return "Unknown";
}

void Tolerance::validate() const {
    for (const double t : {abs_eps, rel_eps, psd_slack}) {
        if (!(t > 0.0) || !std::isfinite(t)) {
            throw Error(ErrorKind::InvalidArgument, "tolerances must be finite and strictly positive");
        }
    }
}

namespace {

void require_square(const CMatrix &m, const char *what) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorKind::NonSquare, std::string(what) + " must be square, got " + std::to_string(m.rows()) +
                                              "x" + std::to_string(m.cols()));
    }
}

void require_hermitian(const CMatrix &m, const Tolerance &tol) {
    require_square(m, "matrix");
    const double residual = hermitian_residual(m);
    const double bound = std::max(tol.rel_eps * m.norm(), tol.abs_eps);
    if (residual > bound) {
        throw Error(ErrorKind::NotHermitian, "symmetry residual " + std::to_string(residual) + " exceeds " +
                                                 std::to_string(bound));
    }
}

}  // namespace

Projection Projection::from_matrix(const CMatrix &matrix, const Tolerance &tol) {
    require_square(matrix, "projection");
    const double scale = std::max(1.0, matrix.norm());
    const double bound = tol.rel_eps * scale;
    if ((matrix * matrix - matrix).norm() > bound) {
        throw Error(ErrorKind::InvalidArgument, "matrix is not idempotent");
    }
    if (hermitian_residual(matrix) > bound) {
        throw Error(ErrorKind::InvalidArgument, "matrix is not self-adjoint");
    }
    const double trace = matrix.trace().real();
    const double rank = std::round(trace);
    if (std::abs(trace - rank) > tol.abs_eps * static_cast<double>(matrix.rows())) {
        throw Error(ErrorKind::InvalidArgument, "projection trace is not an integer");
    }
    return Projection(matrix, static_cast<Eigen::Index>(rank));
}

Projection Projection::onto_columns(const CMatrix &orthonormal_columns) {
    return Projection(orthonormal_columns * orthonormal_columns.adjoint(), orthonormal_columns.cols());
}

Projection Projection::zero(Eigen::Index dim) { return Projection(CMatrix::Zero(dim, dim), 0); }

Projection Projection::identity(Eigen::Index dim) { return Projection(CMatrix::Identity(dim, dim), dim); }

Projection Projection::complement() const {
    return Projection(CMatrix::Identity(dim(), dim()) - matrix_, dim() - rank_);
}

double hermitian_residual(const CMatrix &m) {
    if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
    return (m - m.adjoint()).norm();
}

HermitianEigen hermitian_eig(const CMatrix &m, const Tolerance &tol) {
    require_hermitian(m, tol);
    const CMatrix sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::InternalConsistency, "Hermitian eigensolver did not converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

double min_eigenvalue(const CMatrix &m, const Tolerance &tol) {
    if (m.rows() == 0) return 0.0;
    return hermitian_eig(m, tol).values(0);
}

bool is_psd(const CMatrix &m, const Tolerance &tol) {
    if (m.rows() == 0) return true;
    const HermitianEigen eig = hermitian_eig(m, tol);
    const double norm2 = std::max(std::abs(eig.values(0)), std::abs(eig.values(eig.values.size() - 1)));
    return eig.values(0) >= -tol.psd_slack * std::max(1.0, norm2);
}

Projection eigenspace_projection(const CMatrix &m, double lambda, const Tolerance &tol) {
    const HermitianEigen eig = hermitian_eig(m, tol);
    const double window = tol.rel_eps * std::max(1.0, std::abs(lambda));
    std::vector<Eigen::Index> picked;
    for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
        if (std::abs(eig.values(k) - lambda) <= window) picked.push_back(k);
    }
    CMatrix q(m.rows(), static_cast<Eigen::Index>(picked.size()));
    for (std::size_t c = 0; c < picked.size(); ++c) q.col(static_cast<Eigen::Index>(c)) = eig.vectors.col(picked[c]);
    return Projection::onto_columns(q);
}

CMatrix orthonormalize(const CMatrix &columns, const Tolerance &tol) {
    if (columns.cols() == 0 || columns.rows() == 0) return CMatrix(columns.rows(), 0);
    Eigen::JacobiSVD<CMatrix> svd(columns, Eigen::ComputeThinU);
    const RVector &sv = svd.singularValues();
    const double smax = sv.size() > 0 ? sv(0) : 0.0;
    if (smax <= tol.abs_eps) return CMatrix(columns.rows(), 0);
    Eigen::Index rank = 0;
    while (rank < sv.size() && sv(rank) > tol.rel_eps * smax) ++rank;
    return svd.matrixU().leftCols(rank);
}

CMatrix orthonormalize(const std::vector<CVector> &vectors, Eigen::Index dim, const Tolerance &tol) {
    CMatrix stacked(dim, static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t k = 0; k < vectors.size(); ++k) {
        if (vectors[k].size() != dim) {
            throw Error(ErrorKind::DimensionMismatch, "orthonormalize: vectors of differing dimension");
        }
        stacked.col(static_cast<Eigen::Index>(k)) = vectors[k];
    }
    return orthonormalize(stacked, tol);
}

CMatrix null_space(const CMatrix &a, const Tolerance &tol) {
    const Eigen::Index n = a.cols();
    if (n == 0) return CMatrix(0, 0);
    if (a.rows() == 0) return CMatrix::Identity(n, n);
    Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullV);
    const RVector &sv = svd.singularValues();
    const double smax = sv(0);
    if (smax <= tol.abs_eps) return CMatrix::Identity(n, n);
    Eigen::Index rank = 0;
    while (rank < sv.size() && sv(rank) > tol.rel_eps * smax) ++rank;
    return svd.matrixV().rightCols(n - rank);
}

double spectral_norm(const CMatrix &m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<CMatrix> svd(m);
    return svd.singularValues()(0);
}

double subspace_sine(const CMatrix &q1, const CMatrix &q2) {
    if (q1.cols() != q2.cols()) return 1.0;
    if (q1.cols() == 0) return 0.0;
    return std::max(containment_sine(q1, q2), containment_sine(q2, q1));
}

double containment_sine(const CMatrix &q_sub, const CMatrix &q_super) {
    if (q_sub.cols() == 0) return 0.0;
    if (q_super.cols() == 0) return 1.0;
    const CMatrix residual = q_sub - q_super * (q_super.adjoint() * q_sub);
    return spectral_norm(residual);
}

CVector vec(const CMatrix &x) {
    return Eigen::Map<const CVector>(x.data(), x.size());
}

CMatrix unvec(const CVector &v, Eigen::Index rows) {
    const Eigen::Index cols = rows == 0 ? 0 : v.size() / rows;
    return Eigen::Map<const CMatrix>(v.data(), rows, cols);
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

CMatrix matrix_unit(Eigen::Index d, Eigen::Index i, Eigen::Index j) {
    CMatrix e = CMatrix::Zero(d, d);
    e(i, j) = 1.0;
    return e;
}

CMatrix canonical_range_basis(const CMatrix &p, const Tolerance &tol) {
    const Eigen::Index d = p.rows();
    const auto target = static_cast<Eigen::Index>(std::llround(p.trace().real()));
    const double keep = std::sqrt(tol.rel_eps);
    CMatrix basis(d, 0);
    for (Eigen::Index j = 0; j < d && basis.cols() < target; ++j) {
        CVector r = p.col(j);
        for (int pass = 0; pass < 2; ++pass) r -= basis * (basis.adjoint() * r);
        const double norm = r.norm();
        if (norm <= keep) continue;
        basis.conservativeResize(d, basis.cols() + 1);
        basis.col(basis.cols() - 1) = r / norm;
    }
    return basis;
}

Eigen::Index first_support_index(const CMatrix &p, const Tolerance &tol) {
    for (Eigen::Index i = 0; i < p.rows(); ++i) {
        if (std::abs(p(i, i)) > std::sqrt(tol.abs_eps)) return i;
    }
    return p.rows();
}

double Rng::normal() { return normal_(engine_); }

double Rng::uniform() { return uniform_(engine_); }

std::uint64_t Rng::next_seed() { return engine_(); }

CMatrix Rng::ginibre(Eigen::Index rows, Eigen::Index cols) {
    const double s = std::sqrt(0.5);
    CMatrix g(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        for (Eigen::Index i = 0; i < rows; ++i) {
            const double re = normal();
            const double im = normal();
            g(i, j) = cplx(s * re, s * im);
        }
    }
    return g;
}

CVector Rng::random_vector(Eigen::Index dim) {
    CVector v = ginibre(dim, 1).col(0);
    return v / v.norm();
}

CMatrix Rng::haar_unitary(Eigen::Index dim) {
    const CMatrix g = ginibre(dim, dim);
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ() * CMatrix::Identity(dim, dim);
    const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index k = 0; k < dim; ++k) {
        const double mag = std::abs(r(k, k));
        if (mag > 0.0) q.col(k) *= r(k, k) / mag;
    }
    return q;
}

CMatrix Rng::random_hermitian(Eigen::Index dim) {
    const CMatrix g = ginibre(dim, dim);
    return 0.5 * (g + g.adjoint());
}

RVector Rng::probability_vector(Eigen::Index n) {
    RVector p(n);
    for (Eigen::Index k = 0; k < n; ++k) p(k) = -std::log(1.0 - uniform());
    return p / p.sum();
}

}  // namespace cpanchor
