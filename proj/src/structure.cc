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

#include "cpanchor/structure.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <tuple>

namespace cpanchor {

namespace {

void require_unital(const Channel &ch, const Tolerance &tol) {
    if (!is_unital(ch, tol)) {
        throw Error(ErrorKind::NotUnital,
                    "sum A_i A_i^* deviates from I by " + std::to_string(unitality_defect(ch)));
    }
}

// Range inclusions are first order in the defect while the order relations are
// second order (p Phi(I-p) p = sum |(I-p) A_i^* p|^2), so the range route uses
// the square root of the semidefinite slack.
double range_threshold(const Tolerance &tol) { return std::sqrt(tol.psd_slack); }

double relative_psd_margin(const CMatrix &m, const Tolerance &tol) {
    return -tol.psd_slack * std::max(1.0, spectral_norm(m));
}

CMatrix hstack(const std::vector<CMatrix> &blocks, Eigen::Index rows) {
    Eigen::Index cols = 0;
    for (const CMatrix &b : blocks) cols += b.cols();
    CMatrix out(rows, cols);
    Eigen::Index at = 0;
    for (const CMatrix &b : blocks) {
        out.middleCols(at, b.cols()) = b;
        at += b.cols();
    }
    return out;
}

// Dimension of span{Q^* b Q : b in algebra}; equals rank^2 exactly when the
// algebra acts irreducibly on Ran Q (Burnside).
Eigen::Index restricted_algebra_dim(const std::vector<CMatrix> &algebra, const CMatrix &q, const Tolerance &tol) {
    const Eigen::Index r = q.cols();
    CMatrix stacked(r * r, static_cast<Eigen::Index>(algebra.size()));
    for (std::size_t k = 0; k < algebra.size(); ++k) {
        stacked.col(static_cast<Eigen::Index>(k)) = vec(CMatrix(q.adjoint() * algebra[k] * q));
    }
    return orthonormalize(stacked, tol).cols();
}

// Span of the algebra applied to the columns of Q.
CMatrix algebra_orbit(const std::vector<CMatrix> &algebra, const CMatrix &q, const Tolerance &tol) {
    std::vector<CMatrix> pieces;
    for (const CMatrix &b : algebra) pieces.push_back(b * q);
    return orthonormalize(hstack(pieces, q.rows()), tol);
}

CMatrix random_algebra_element(const std::vector<CMatrix> &algebra, Rng &rng) {
    CMatrix b = CMatrix::Zero(algebra.front().rows(), algebra.front().cols());
    for (const CMatrix &e : algebra) b += cplx(rng.normal(), rng.normal()) * e;
    return b;
}

std::vector<CVector> eigenvector_candidates(const std::vector<CMatrix> &algebra, const CMatrix &space, Rng &rng,
                                            int draws) {
    std::vector<CVector> out;
    for (int t = 0; t < draws; ++t) {
        const CMatrix restricted = space.adjoint() * random_algebra_element(algebra, rng) * space;
        Eigen::ComplexEigenSolver<CMatrix> solver(restricted);
        if (solver.info() != Eigen::Success) continue;
        for (Eigen::Index k = 0; k < restricted.cols(); ++k) out.push_back(space * solver.eigenvectors().col(k));
    }
    return out;
}

struct MinimalSearch {
    const std::vector<CMatrix> &algebra;
    const Tolerance &tol;
    Rng &rng;

    // Minimal invariant subspace inside the invariant subspace spanned by `space`.
    CMatrix operator()(const CMatrix &space, int depth = 0) {
        const Eigen::Index dim = space.cols();
        if (dim == 1 || restricted_algebra_dim(algebra, space, tol) == dim * dim) return space;
        if (depth > 4 * space.rows() + 8) {
            throw Error(ErrorKind::InternalConsistency, "minimal invariant subspace search did not terminate");
        }
        std::vector<CVector> candidates = eigenvector_candidates(algebra, space, rng, 2);
        for (Eigen::Index k = 0; k < 8 * space.rows(); ++k) candidates.push_back(space * rng.random_vector(dim));
        CMatrix best = space;
        for (const CVector &v : candidates) {
            const CMatrix orbit = algebra_orbit(algebra, v / v.norm(), tol);
            if (orbit.cols() >= 1 && orbit.cols() < best.cols()) best = orbit;
        }
        return (*this)(best, depth + 1);
    }
};

}  // namespace

InvarianceVerdict invariance_verdict(const Channel &ch, const Projection &p, const Tolerance &tol) {
    require_unital(ch, tol);
    if (p.dim() != ch.dim()) throw Error(ErrorKind::DimensionMismatch, "projection and channel dimensions differ");
    const CMatrix &pm = p.matrix();
    const CMatrix gap = cpanchor::apply(ch, pm) - pm;
    const double ge = min_eigenvalue(gap, tol);
    const double le = min_eigenvalue(-gap, tol);
    const double margin = relative_psd_margin(gap, tol);

    const CMatrix q = CMatrix::Identity(ch.dim(), ch.dim()) - pm;
    double adjoint_leak = 0.0;
    double leak = 0.0;
    for (const CMatrix &a : ch.kraus()) {
        adjoint_leak = std::max(adjoint_leak, spectral_norm(q * a.adjoint() * pm));
        leak = std::max(leak, spectral_norm(q * a * pm));
    }

    InvarianceVerdict v;
    v.phi_ge_p = ge >= margin;
    v.phi_le_p = le >= margin;
    v.phi_eq_p = v.phi_ge_p && v.phi_le_p;
    v.adjoint_invariant = adjoint_leak <= range_threshold(tol);
    v.invariant = leak <= range_threshold(tol);
    v.reducing = v.adjoint_invariant && v.invariant;
    v.residuals = {ge, le, adjoint_leak, leak};
    if (v.phi_ge_p != v.adjoint_invariant || v.phi_le_p != v.invariant) {
        throw Error(ErrorKind::InternalConsistency,
                    "order and range tests disagree (min eig " + std::to_string(ge) + "/" + std::to_string(le) +
                        ", leaks " + std::to_string(adjoint_leak) + "/" + std::to_string(leak) + ")");
    }
    return v;
}

bool top_eigenspace_check(const Channel &ch, const CMatrix &x, const Tolerance &tol) {
    require_unital(ch, tol);
    if (x.rows() != ch.dim() || x.cols() != ch.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "operator and channel dimensions differ");
    }
    if (!is_psd(x, tol)) throw Error(ErrorKind::PreconditionFailed, "X is not positive semidefinite");
    if (!is_psd(cpanchor::apply(ch, x) - x, tol)) throw Error(ErrorKind::PreconditionFailed, "X <= Phi(X) fails");
    const HermitianEigen eig = hermitian_eig(x, tol);
    const double top = eig.values(eig.values.size() - 1);
    const CMatrix q = eigenspace_projection(x, top, tol).matrix();
    const CMatrix rest = CMatrix::Identity(ch.dim(), ch.dim()) - q;
    double scale = 1.0;
    double leak = 0.0;
    for (const CMatrix &a : ch.kraus()) {
        scale = std::max(scale, spectral_norm(a));
        leak = std::max(leak, spectral_norm(rest * a.adjoint() * q));
    }
    return leak < tol.rel_eps * scale;
}

std::vector<Projection> minimal_reducing_decomposition(const Channel &ch, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    std::vector<Projection> out;
    const double cluster_gap = std::sqrt(tol.rel_eps);

    std::function<void(const CMatrix &)> split = [&](const CMatrix &q) {
        std::vector<CMatrix> family;
        for (const CMatrix &a : ch.kraus()) {
            const CMatrix r = q.adjoint() * a * q;
            family.push_back(r);
            family.push_back(r.adjoint());
        }
        const SubspaceBasis comm = commutant(family, tol);
        if (comm.size() <= 1) {
            out.push_back(Projection::onto_columns(q));
            return;
        }
        const std::vector<CMatrix> elements = comm.elements();
        for (int attempt = 0; attempt < 16; ++attempt) {
            CMatrix h = CMatrix::Zero(q.cols(), q.cols());
            for (const CMatrix &c : elements) h += rng.normal() * (c + c.adjoint());
            const HermitianEigen eig = hermitian_eig(h, tol);
            const double scale = std::max(1.0, eig.values.cwiseAbs().maxCoeff());
            std::vector<std::pair<Eigen::Index, Eigen::Index>> clusters;
            Eigen::Index start = 0;
            for (Eigen::Index k = 1; k <= eig.values.size(); ++k) {
                if (k == eig.values.size() || eig.values(k) - eig.values(k - 1) > cluster_gap * scale) {
                    clusters.emplace_back(start, k);
                    start = k;
                }
            }
            if (clusters.size() < 2) continue;
            for (const auto &[lo, hi] : clusters) split(q * eig.vectors.middleCols(lo, hi - lo));
            return;
        }
        throw Error(ErrorKind::InternalConsistency, "random commutant element failed to split a reducible block");
    };

    split(CMatrix::Identity(ch.dim(), ch.dim()));
    sort_projections(out, tol);
    return out;
}

CMatrix adjoint_orbit_span(const Channel &ch, const CVector &v, const Tolerance &tol) {
    const Eigen::Index d = ch.dim();
    if (v.size() != d) throw Error(ErrorKind::DimensionMismatch, "vector and channel dimensions differ");
    const double vn = v.norm();
    if (vn <= tol.abs_eps) return CMatrix(d, 0);
    CMatrix basis(d, 1);
    basis.col(0) = v / vn;
    std::vector<CVector> frontier{basis.col(0)};
    while (!frontier.empty() && basis.cols() < d) {
        std::vector<CVector> next;
        for (const CVector &w : frontier) {
            for (const CMatrix &a : ch.kraus()) {
                const CVector x = a.adjoint() * w;
                const double xn = x.norm();
                if (xn <= tol.abs_eps) continue;
                CVector r = x;
                for (int pass = 0; pass < 2; ++pass) r -= basis * (basis.adjoint() * r);
                const double rn = r.norm();
                if (rn <= tol.rel_eps * std::max(1.0, xn)) continue;
                basis.conservativeResize(d, basis.cols() + 1);
                basis.col(basis.cols() - 1) = r / rn;
                next.push_back(r / rn);
            }
        }
        frontier = std::move(next);
    }
    return basis;
}

DecompositionReport anchor_projections(const Channel &ch, const AnchorOptions &options, const Tolerance &tol) {
    require_unital(ch, tol);
    const Eigen::Index d = ch.dim();
    Rng rng(options.seed);
    const std::vector<CMatrix> algebra = algebra_closure(ch.adjoint_kraus(), tol).basis.elements();
    MinimalSearch search{algebra, tol, rng};

    std::vector<CMatrix> family;
    while (true) {
        // Largest invariant subspace orthogonal to the family: vectors v with
        // W^* b v = 0 for every algebra element b (b = I keeps v in W-perp).
        CMatrix room;
        if (family.empty()) {
            room = CMatrix::Identity(d, d);
        } else {
            const CMatrix w = hstack(family, d);
            CMatrix system(w.cols() * static_cast<Eigen::Index>(algebra.size()), d);
            for (std::size_t k = 0; k < algebra.size(); ++k) {
                system.middleRows(static_cast<Eigen::Index>(k) * w.cols(), w.cols()) = w.adjoint() * algebra[k];
            }
            room = null_space(system, tol);
        }
        if (room.cols() == 0) break;
        const CMatrix anchor = search(room);
        const CMatrix p = anchor * anchor.adjoint();
        if (!is_psd(cpanchor::apply(ch, p) - p, tol)) {
            throw Error(ErrorKind::InternalConsistency, "accepted anchor violates p <= Phi(p)");
        }
        family.push_back(anchor);
    }

    DecompositionReport report;
    for (const CMatrix &q : family) report.anchors.push_back(Projection::onto_columns(q));
    sort_projections(report.anchors, tol);
    report.summand_count = report.anchors.size();
    for (const Projection &p : report.anchors) {
        report.anchor_dims.push_back(p.rank());
        report.cyclic_vector_bases.push_back(canonical_range_basis(p.matrix(), tol));
    }

    if (options.exhaustive) {
        for (const CMatrix &q : report.cyclic_vector_bases) {
            std::vector<CVector> candidates = eigenvector_candidates(algebra, q, rng, 4);
            for (Eigen::Index k = 0; k < q.cols(); ++k) candidates.push_back(q.col(k));
            for (const CVector &v : candidates) {
                if (algebra_orbit(algebra, v / v.norm(), tol).cols() < q.cols()) {
                    throw Error(ErrorKind::InternalConsistency, "exhaustive pass found a smaller invariant subspace");
                }
            }
        }
        report.exhaustive_minimality = true;
    }

    if (report.summand_count == 1) {
        const std::vector<CMatrix> forward = algebra_closure(ch.kraus(), tol).basis.elements();
        report.irreducible = algebra_orbit(forward, report.cyclic_vector_bases.front(), tol).cols() == d;
    }

    if (is_trace_preserving(ch, tol)) {
        std::vector<std::vector<CMatrix>> blocks;
        for (const CMatrix &q : report.cyclic_vector_bases) {
            std::vector<CMatrix> block;
            for (const CMatrix &a : ch.kraus()) block.push_back(q.adjoint() * a * q);
            blocks.push_back(std::move(block));
        }
        for (std::size_t j = 0; j < blocks.size(); ++j) {
            bool placed = false;
            for (std::size_t c = 0; c < report.equivalence_classes.size() && !placed; ++c) {
                const std::size_t rep = report.equivalence_classes[c].front();
                if (report.anchor_dims[rep] != report.anchor_dims[j]) continue;
                if (auto w = find_intertwiner(blocks[rep], blocks[j], tol)) {
                    report.equivalence_classes[c].push_back(j);
                    report.intertwiners[c].push_back(*w);
                    placed = true;
                }
            }
            if (!placed) {
                report.equivalence_classes.push_back({j});
                report.intertwiners.push_back({CMatrix::Identity(report.anchor_dims[j], report.anchor_dims[j])});
            }
        }
    }
    return report;
}

bool unital_channel_invariant_is_reducing(const Channel &ch, std::size_t trials, std::uint64_t seed,
                                          const Tolerance &tol) {
    if (!is_unital(ch, tol) || !is_trace_preserving(ch, tol)) {
        throw Error(ErrorKind::NotUnitalChannel, "the harness applies to unital trace-preserving channels");
    }
    const Eigen::Index d = ch.dim();
    Rng rng(seed);
    std::vector<Projection> candidates{Projection::identity(d)};

    AnchorOptions options;
    options.seed = rng.next_seed();
    const DecompositionReport report = anchor_projections(ch, options, tol);
    for (const Projection &p : report.anchors) candidates.push_back(p);

    const std::vector<CMatrix> algebra = algebra_closure(ch.adjoint_kraus(), tol).basis.elements();
    for (std::size_t t = 0; t < trials; ++t) {
        // Sum of a random subset of anchors, an orbit of a random vector and
        // an orbit of an eigenvector of a random algebra element.
        CMatrix subset = CMatrix::Zero(d, d);
        for (const Projection &p : report.anchors) {
            if (rng.uniform() < 0.5) subset += p.matrix();
        }
        candidates.push_back(Projection::onto_columns(orthonormalize(subset, tol)));
        candidates.push_back(Projection::onto_columns(adjoint_orbit_span(ch, rng.random_vector(d), tol)));
        const std::vector<CVector> eigvecs = eigenvector_candidates(algebra, CMatrix::Identity(d, d), rng, 1);
        if (eigvecs.empty()) continue;
        const CVector &v = eigvecs[static_cast<std::size_t>(rng.uniform() * static_cast<double>(eigvecs.size()))];
        candidates.push_back(Projection::onto_columns(adjoint_orbit_span(ch, v, tol)));
    }

    for (const Projection &p : candidates) {
        const InvarianceVerdict v = invariance_verdict(ch, p, tol);
        if (!v.phi_ge_p || !v.phi_eq_p) return false;
    }
    return true;
}

void sort_projections(std::vector<Projection> &projections, const Tolerance &tol) {
    auto key_row = [&](const Projection &p) {
        std::vector<double> row;
        const Eigen::Index idx = first_support_index(p.matrix(), tol);
        if (idx < p.dim()) {
            for (Eigen::Index j = 0; j < p.dim(); ++j) row.push_back(std::round(p.matrix()(idx, j).real() * 1e8));
        }
        return std::make_tuple(p.rank(), idx, row);
    };
    std::stable_sort(projections.begin(), projections.end(),
                     [&](const Projection &a, const Projection &b) { return key_row(a) < key_row(b); });
}

}  // namespace cpanchor
