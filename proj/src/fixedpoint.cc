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

#include "cpanchor/fixedpoint.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cpanchor {

std::vector<CMatrix> SubspaceBasis::elements() const {
    std::vector<CMatrix> out;
    for (Eigen::Index k = 0; k < size(); ++k) out.push_back(element(k));
    return out;
}

double SubspaceBasis::distance(const CMatrix &x) const {
    const CVector v = vec(x);
    if (size() == 0) return v.norm();
    return (v - columns * (columns.adjoint() * v)).norm();
}

SubspaceBasis fixed_point_space(const Channel &ch, const Tolerance &tol) {
    const Eigen::Index n = ch.dim() * ch.dim();
    const CMatrix shifted = liouville(ch) - CMatrix::Identity(n, n);
    return {ch.dim(), null_space(shifted, tol)};
}

SubspaceBasis commutant(const std::vector<CMatrix> &generators, const Tolerance &tol, Eigen::Index dim) {
    const Eigen::Index d = generators.empty() ? dim : generators.front().rows();
    if (d < 1) throw Error(ErrorKind::InvalidArgument, "commutant of an empty family needs a dimension");
    const Eigen::Index n = d * d;
    if (generators.empty()) return {d, CMatrix::Identity(n, n)};
    const CMatrix id = CMatrix::Identity(d, d);
    CMatrix system(n * static_cast<Eigen::Index>(generators.size()), n);
    for (std::size_t g = 0; g < generators.size(); ++g) {
        const CMatrix &a = generators[g];
        if (a.rows() != d || a.cols() != d) {
            throw Error(ErrorKind::DimensionMismatch, "commutant generators must share one square dimension");
        }
        // vec(AX - XA) = (I (x) A - A^T (x) I) vec(X)
        system.middleRows(static_cast<Eigen::Index>(g) * n, n) = kron(id, a) - kron(a.transpose(), id);
    }
    return {d, null_space(system, tol)};
}

AlgebraClosure algebra_closure(const std::vector<CMatrix> &generators, const Tolerance &tol, bool include_adjoints) {
    if (generators.empty()) throw Error(ErrorKind::InvalidArgument, "algebra_closure needs at least one generator");
    const Eigen::Index d = generators.front().rows();
    const Eigen::Index n = d * d;
    std::vector<CMatrix> gens;
    for (const CMatrix &g : generators) {
        if (g.rows() != d || g.cols() != d) {
            throw Error(ErrorKind::DimensionMismatch, "algebra generators must share one square dimension");
        }
        gens.push_back(g);
        if (include_adjoints) gens.push_back(g.adjoint());
    }

    CMatrix basis(n, 1);
    basis.col(0) = vec(CMatrix::Identity(d, d)) / std::sqrt(static_cast<double>(d));
    std::vector<CMatrix> frontier{CMatrix::Identity(d, d)};

    // Each level multiplies the previous level's new directions by every
    // generator; words of length L appear at level L, and L <= d^2.
    Eigen::Index level = 0;
    while (!frontier.empty() && basis.cols() < n) {
        if (++level > n) {
            throw Error(ErrorKind::InternalConsistency, "word closure did not stabilize within d^2 levels");
        }
        std::vector<CMatrix> next;
        for (const CMatrix &w : frontier) {
            for (const CMatrix &g : gens) {
                const CVector x = vec(g * w);
                const double xn = x.norm();
                if (xn <= tol.abs_eps) continue;
                CVector r = x;
                for (int pass = 0; pass < 2; ++pass) r -= basis * (basis.adjoint() * r);
                const double rn = r.norm();
                if (rn <= tol.rel_eps * std::max(1.0, xn)) continue;
                basis.conservativeResize(n, basis.cols() + 1);
                basis.col(basis.cols() - 1) = r / rn;
                next.push_back(unvec(r / rn, d));
                if (basis.cols() == n) break;
            }
            if (basis.cols() == n) break;
        }
        frontier = std::move(next);
    }

    AlgebraClosure out;
    out.generators = generators;
    out.basis = {d, basis};
    CMatrix adjoints(n, basis.cols());
    for (Eigen::Index k = 0; k < basis.cols(); ++k) adjoints.col(k) = vec(unvec(basis.col(k), d).adjoint());
    out.star_residual = subspace_sine(adjoints, basis);
    out.star_closed = out.star_residual < tol.rel_eps;
    return out;
}

ClosureCheck multiplicative_closure(const SubspaceBasis &space, const Tolerance &tol) {
    ClosureCheck check;
    const std::vector<CMatrix> elems = space.elements();
    for (const CMatrix &x : elems) {
        for (const CMatrix &y : elems) {
            const CMatrix prod = x * y;
            const double residual = space.distance(prod);
            if (residual > check.max_residual) {
                check.max_residual = residual;
                check.witness = std::make_pair(x, y);
            }
        }
    }
    check.closed = check.max_residual <= tol.rel_eps;
    if (check.closed) check.witness.reset();
    return check;
}

FixedCommutantReport verify_fixed_equals_commutant(const Channel &ch, const Tolerance &tol) {
    if (!is_unital(ch, tol) || !is_trace_preserving(ch, tol)) {
        throw Error(ErrorKind::NotUnitalChannel, "fixed space equals commutant only for unital trace-preserving maps");
    }
    const SubspaceBasis fixed = fixed_point_space(ch, tol);
    const SubspaceBasis comm = commutant(ch.kraus(), tol);
    FixedCommutantReport report;
    report.dim = fixed.size();
    report.commutant_dim = comm.size();
    report.max_residual = subspace_sine(fixed.columns, comm.columns);
    report.equal = report.max_residual < tol.rel_eps;
    const ClosureCheck closure = multiplicative_closure(fixed, tol);
    report.multiplicatively_closed = closure.closed;
    report.closure_residual = closure.max_residual;
    return report;
}

PhiInfinityResult phi_infinity(const Channel &ch, const Projection &p, const Tolerance &tol, std::size_t max_iter) {
    if (p.dim() != ch.dim()) throw Error(ErrorKind::DimensionMismatch, "projection and channel dimensions differ");
    if (!is_unital(ch, tol)) throw Error(ErrorKind::NotUnital, "Phi^infinity(p) needs a unital map");

    const CMatrix first = cpanchor::apply(ch, p.matrix());
    const CMatrix gap = first - p.matrix();
    const bool up = is_psd(gap, tol);
    const bool down = is_psd(-gap, tol);
    if (!up && !down) throw Error(ErrorKind::NotMonotone, "p is not comparable with Phi(p)");

    PhiInfinityResult result;
    result.direction = up && down ? MonotoneCase::Fixed : (up ? MonotoneCase::Increasing : MonotoneCase::Decreasing);
    const double sign = result.direction == MonotoneCase::Decreasing ? -1.0 : 1.0;

    // Convergence is linear, so a small step alone does not mean the iterate
    // is close to the limit: the remaining distance is about
    // step * r / (1 - r) for contraction rate r. Both must be below abs_eps.
    CMatrix current = p.matrix();
    CMatrix next = first;
    double previous = 0.0;
    for (std::size_t k = 1; k <= max_iter; ++k) {
        const CMatrix step = next - current;
        if (result.monotone && result.direction != MonotoneCase::Fixed && !is_psd(sign * step, tol)) {
            result.monotone = false;
        }
        result.residual = step.norm();
        result.iterations = k;
        current = next;
        double tail = 0.0;
        // With no previous step there is no rate; a first step below abs_eps
        // means p itself is fixed within tolerance.
        if (result.residual > 0.0 && k > 1) {
            const double rate = previous > 0.0 ? result.residual / previous : 1.0;
            tail = rate < 1.0 ? result.residual * rate / (1.0 - rate) : std::numeric_limits<double>::infinity();
        }
        previous = result.residual;
        if (result.residual < tol.abs_eps && tail < tol.abs_eps) {
            result.limit = 0.5 * (current + current.adjoint());
            return result;
        }
        next = cpanchor::apply(ch, current);
    }
    throw Error(ErrorKind::NoConvergence, "Phi^k(p) still moving by " + std::to_string(result.residual) +
                                              " after " + std::to_string(max_iter) + " iterations");
}

std::optional<CMatrix> find_intertwiner(const std::vector<CMatrix> &block_a, const std::vector<CMatrix> &block_b,
                                        const Tolerance &tol) {
    if (block_a.size() != block_b.size() || block_a.empty()) {
        throw Error(ErrorKind::InvalidArgument, "intertwiner search needs two non-empty families of equal length");
    }
    const Eigen::Index da = block_a.front().rows();
    const Eigen::Index db = block_b.front().rows();
    if (da != db) return std::nullopt;
    const Eigen::Index d = da;
    const Eigen::Index n = d * d;
    const CMatrix id = CMatrix::Identity(d, d);

    CMatrix system(2 * n * static_cast<Eigen::Index>(block_a.size()), n);
    Eigen::Index row = 0;
    for (std::size_t i = 0; i < block_a.size(); ++i) {
        const CMatrix &a = block_a[i];
        const CMatrix &b = block_b[i];
        if (a.rows() != d || a.cols() != d || b.rows() != d || b.cols() != d) {
            throw Error(ErrorKind::DimensionMismatch, "intertwiner families must be square of a common size");
        }
        // vec(A W - W B) = (I (x) A - B^T (x) I) vec(W), and the same for adjoints.
        system.middleRows(row, n) = kron(id, a) - kron(b.transpose(), id);
        row += n;
        system.middleRows(row, n) = kron(id, CMatrix(a.adjoint())) - kron(b.conjugate(), id);
        row += n;
    }
    const CMatrix solutions = null_space(system, tol);
    if (solutions.cols() == 0) return std::nullopt;

    double scale = 1.0;
    for (std::size_t i = 0; i < block_a.size(); ++i) {
        scale = std::max({scale, block_a[i].norm(), block_b[i].norm()});
    }

    Rng rng(0);
    const int attempts = solutions.cols() == 1 ? 1 : 8;
    for (int attempt = 0; attempt < attempts; ++attempt) {
        CVector coeffs = solutions.cols() == 1 ? CVector::Ones(1) : CVector(rng.random_vector(solutions.cols()));
        const CMatrix w = unvec(solutions * coeffs, d);
        Eigen::JacobiSVD<CMatrix> svd(w, Eigen::ComputeFullU | Eigen::ComputeFullV);
        const RVector &sv = svd.singularValues();
        if (sv(d - 1) <= std::sqrt(tol.rel_eps) * sv(0)) continue;
        CMatrix u = svd.matrixU() * svd.matrixV().adjoint();
        const cplx tr = u.trace();
        if (std::abs(tr) > tol.abs_eps) u *= std::conj(tr) / std::abs(tr);
        double residual = 0.0;
        for (std::size_t i = 0; i < block_a.size(); ++i) {
            residual = std::max(residual, (block_a[i] * u - u * block_b[i]).norm());
        }
        if (residual < tol.rel_eps * scale) return u;
    }
    return std::nullopt;
}

}  // namespace cpanchor
