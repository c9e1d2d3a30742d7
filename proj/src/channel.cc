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

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace cpanchor {

Channel::Channel(std::vector<CMatrix> kraus, ChannelFlags flags) : dim_(0), kraus_(std::move(kraus)), flags_(flags) {
    if (kraus_.empty()) throw Error(ErrorKind::InvalidArgument, "a channel needs at least one Kraus operator");
    dim_ = kraus_.front().rows();
    if (dim_ == 0) throw Error(ErrorKind::InvalidArgument, "Kraus operators must be non-empty");
    for (const CMatrix &a : kraus_) {
        if (a.rows() != a.cols()) throw Error(ErrorKind::NonSquare, "Kraus operators must be square");
        if (a.rows() != dim_) throw Error(ErrorKind::DimensionMismatch, "Kraus operators differ in dimension");
    }
}

Channel Channel::identity(Eigen::Index dim) {
    return Channel({CMatrix::Identity(dim, dim)}, {true, true});
}

Channel Channel::unitary(const CMatrix &u) { return Channel({u}); }

std::vector<CMatrix> Channel::adjoint_kraus() const {
    std::vector<CMatrix> out;
    out.reserve(kraus_.size());
    for (const CMatrix &a : kraus_) out.push_back(a.adjoint());
    return out;
}

// ---------------------------------------------------------------------------
// OperatorBasis

OperatorBasis::OperatorBasis(BasisKind kind, Eigen::Index dim, std::vector<CMatrix> elements)
    : kind_(kind), dim_(dim), elements_(std::move(elements)) {
    const Eigen::Index n = dim * dim;
    if (static_cast<Eigen::Index>(elements_.size()) != n) {
        throw Error(ErrorKind::InvalidArgument, "an operator basis of M_d needs d^2 elements");
    }
    CMatrix stacked(n, n);
    for (Eigen::Index j = 0; j < n; ++j) stacked.col(j) = vec(elements_[static_cast<std::size_t>(j)]);
    const CMatrix gram = stacked.adjoint() * stacked;
    Eigen::JacobiSVD<CMatrix> svd(gram);
    const RVector &sv = svd.singularValues();
    if (sv(n - 1) <= 1e-12 * sv(0)) {
        throw Error(ErrorKind::InvalidArgument, "operator basis elements are linearly dependent");
    }
    gram_inverse_ = gram.inverse();
}

OperatorBasis OperatorBasis::matrix_units_row_major(Eigen::Index dim) {
    std::vector<CMatrix> elements;
    std::vector<LabelPair> order;
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            elements.push_back(matrix_unit(dim, i, j));
            order.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }
    OperatorBasis basis(BasisKind::MatrixUnitsRowMajor, dim, std::move(elements));
    basis.order_ = std::move(order);
    basis.labels_.resize(static_cast<std::size_t>(dim));
    std::iota(basis.labels_.begin(), basis.labels_.end(), 0);
    return basis;
}

OperatorBasis OperatorBasis::matrix_units_custom(std::vector<LabelPair> order, std::vector<int> labels) {
    if (labels.empty()) {
        std::set<int> distinct;
        for (const auto &[r, c] : order) {
            distinct.insert(r);
            distinct.insert(c);
        }
        labels.assign(distinct.begin(), distinct.end());
        std::sort(labels.begin(), labels.end(), [](int a, int b) {
            if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
            return a > b;
        });
    }
    const auto dim = static_cast<Eigen::Index>(labels.size());
    if (static_cast<Eigen::Index>(order.size()) != dim * dim) {
        throw Error(ErrorKind::InvalidArgument, "custom order must list every matrix unit exactly once");
    }
    std::map<int, Eigen::Index> index;
    for (std::size_t k = 0; k < labels.size(); ++k) {
        if (!index.emplace(labels[k], static_cast<Eigen::Index>(k)).second) {
            throw Error(ErrorKind::InvalidArgument, "duplicate basis label");
        }
    }
    std::set<LabelPair> seen;
    std::vector<CMatrix> elements;
    for (const LabelPair &pair : order) {
        const auto r = index.find(pair.first);
        const auto c = index.find(pair.second);
        if (r == index.end() || c == index.end()) {
            throw Error(ErrorKind::InvalidArgument, "basis order uses an undeclared label");
        }
        if (!seen.insert(pair).second) throw Error(ErrorKind::InvalidArgument, "basis order repeats a matrix unit");
        elements.push_back(matrix_unit(dim, r->second, c->second));
    }
    OperatorBasis basis(BasisKind::MatrixUnitsCustomOrder, dim, std::move(elements));
    basis.order_ = std::move(order);
    basis.labels_ = std::move(labels);
    return basis;
}

OperatorBasis OperatorBasis::pauli() {
    CMatrix id = CMatrix::Identity(2, 2);
    CMatrix sx(2, 2), sy(2, 2), sz(2, 2);
    sx << 0, 1, 1, 0;
    sy << 0, cplx(0, -1), cplx(0, 1), 0;
    sz << 1, 0, 0, -1;
    return OperatorBasis(BasisKind::Pauli, 2, {id, sx, sy, sz});
}

Eigen::Index OperatorBasis::label_index(int label) const {
    for (std::size_t k = 0; k < labels_.size(); ++k) {
        if (labels_[k] == label) return static_cast<Eigen::Index>(k);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown basis label " + std::to_string(label));
}

CVector OperatorBasis::coordinates(const CMatrix &x) const {
    if (x.rows() != dim_ || x.cols() != dim_) {
        throw Error(ErrorKind::DimensionMismatch, "operator does not match basis dimension");
    }
    const Eigen::Index n = dim_ * dim_;
    CVector pairing(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        pairing(i) = (elements_[static_cast<std::size_t>(i)].adjoint() * x).trace();
    }
    return gram_inverse_ * pairing;
}

CMatrix OperatorBasis::compose(const CVector &coords) const {
    CMatrix out = CMatrix::Zero(dim_, dim_);
    for (Eigen::Index i = 0; i < coords.size(); ++i) out += coords(i) * elements_[static_cast<std::size_t>(i)];
    return out;
}

CMatrix Superoperator::apply(const CMatrix &x) const { return basis.compose(matrix * basis.coordinates(x)); }

// ---------------------------------------------------------------------------
// Application and properties

namespace {

void require_operator(const Channel &ch, const CMatrix &x) {
    if (x.rows() != ch.dim() || x.cols() != ch.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "operator is " + std::to_string(x.rows()) + "x" +
                                                      std::to_string(x.cols()) + ", channel acts on dimension " +
                                                      std::to_string(ch.dim()));
    }
}

double defect_bound(Eigen::Index dim, const Tolerance &tol) {
    return tol.rel_eps * std::sqrt(static_cast<double>(dim));
}

// D(l, k) = tr Phi(E_kl); equals sum A_i^* A_i for a Kraus map.
template <typename ApplyFn>
CMatrix trace_dual_of_identity(Eigen::Index d, ApplyFn &&phi) {
    CMatrix out(d, d);
    for (Eigen::Index k = 0; k < d; ++k) {
        for (Eigen::Index l = 0; l < d; ++l) out(l, k) = phi(matrix_unit(d, k, l)).trace();
    }
    return out;
}

}  // namespace

CMatrix apply(const Channel &ch, const CMatrix &x) {
    require_operator(ch, x);
    CMatrix out = CMatrix::Zero(ch.dim(), ch.dim());
    for (const CMatrix &a : ch.kraus()) out.noalias() += a * x * a.adjoint();
    return out;
}

CMatrix dual_apply(const Channel &ch, const CMatrix &x) {
    require_operator(ch, x);
    CMatrix out = CMatrix::Zero(ch.dim(), ch.dim());
    for (const CMatrix &a : ch.kraus()) out.noalias() += a.adjoint() * x * a;
    return out;
}

double unitality_defect(const Channel &ch) {
    CMatrix sum = CMatrix::Zero(ch.dim(), ch.dim());
    for (const CMatrix &a : ch.kraus()) sum.noalias() += a * a.adjoint();
    return (sum - CMatrix::Identity(ch.dim(), ch.dim())).norm();
}

double trace_preservation_defect(const Channel &ch) {
    CMatrix sum = CMatrix::Zero(ch.dim(), ch.dim());
    for (const CMatrix &a : ch.kraus()) sum.noalias() += a.adjoint() * a;
    return (sum - CMatrix::Identity(ch.dim(), ch.dim())).norm();
}

bool is_unital(const Channel &ch, const Tolerance &tol) {
    return unitality_defect(ch) <= defect_bound(ch.dim(), tol);
}

bool is_trace_preserving(const Channel &ch, const Tolerance &tol) {
    return trace_preservation_defect(ch) <= defect_bound(ch.dim(), tol);
}

// ---------------------------------------------------------------------------
// Representations

ChoiMatrix to_choi(const Channel &ch) {
    const Eigen::Index n = ch.dim() * ch.dim();
    CMatrix c = CMatrix::Zero(n, n);
    for (const CMatrix &a : ch.kraus()) {
        const CVector v = vec(a);
        c.noalias() += v * v.adjoint();
    }
    return {ch.dim(), c};
}

ChoiMatrix to_choi(const Superoperator &s) {
    const Eigen::Index d = s.dim();
    CMatrix c(d * d, d * d);
    for (Eigen::Index k = 0; k < d; ++k) {
        for (Eigen::Index l = 0; l < d; ++l) c.block(k * d, l * d, d, d) = s.apply(matrix_unit(d, k, l));
    }
    return {d, c};
}

Channel choi_to_kraus(const ChoiMatrix &choi, const Tolerance &tol) {
    const Eigen::Index d = choi.dim;
    if (choi.matrix.rows() != d * d || choi.matrix.cols() != d * d) {
        throw Error(ErrorKind::DimensionMismatch, "Choi matrix must be d^2 x d^2");
    }
    const double residual = hermitian_residual(choi.matrix);
    if (residual > tol.rel_eps * std::max(1.0, choi.matrix.norm())) {
        throw Error(ErrorKind::NotHermiticityPreserving,
                    "Choi matrix is not Hermitian (residual " + std::to_string(residual) + ")");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (choi.matrix + choi.matrix.adjoint()));
    const RVector &values = solver.eigenvalues();
    const double scale = std::max({1.0, std::abs(values(0)), std::abs(values(values.size() - 1))});
    if (values(0) < -tol.psd_slack * scale) {
        throw Error(ErrorKind::NotCP, "Choi matrix has eigenvalue " + std::to_string(values(0)));
    }

    struct Term {
        double lambda;
        CVector v;
    };
    std::vector<Term> terms;
    for (Eigen::Index k = values.size() - 1; k >= 0; --k) {
        if (values(k) <= tol.psd_slack * scale) continue;
        CVector v = solver.eigenvectors().col(k);
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            if (std::abs(v(i)) > std::sqrt(tol.abs_eps)) {
                v *= std::conj(v(i)) / std::abs(v(i));
                break;
            }
        }
        terms.push_back({values(k), std::move(v)});
    }

    // Eigenvalues arrive descending; reorder ties lexicographically.
    const double tie = tol.rel_eps * scale;
    auto lex_less = [](const CVector &a, const CVector &b) {
        for (Eigen::Index i = 0; i < a.size(); ++i) {
            const double ar = std::round(a(i).real() * 1e12), br = std::round(b(i).real() * 1e12);
            if (ar != br) return ar < br;
            const double ai = std::round(a(i).imag() * 1e12), bi = std::round(b(i).imag() * 1e12);
            if (ai != bi) return ai < bi;
        }
        return false;
    };
    for (std::size_t start = 0; start < terms.size();) {
        std::size_t stop = start + 1;
        while (stop < terms.size() && terms[start].lambda - terms[stop].lambda <= tie) ++stop;
        std::stable_sort(terms.begin() + static_cast<std::ptrdiff_t>(start),
                         terms.begin() + static_cast<std::ptrdiff_t>(stop),
                         [&](const Term &a, const Term &b) { return lex_less(a.v, b.v); });
        start = stop;
    }

    std::vector<CMatrix> kraus;
    for (const Term &t : terms) kraus.push_back(std::sqrt(t.lambda) * unvec(t.v, d));
    if (kraus.empty()) kraus.push_back(CMatrix::Zero(d, d));
    return Channel(std::move(kraus));
}

Superoperator to_superoperator(const Channel &ch, const OperatorBasis &basis) {
    if (basis.dim() != ch.dim()) throw Error(ErrorKind::DimensionMismatch, "basis and channel dimensions differ");
    const Eigen::Index n = ch.dim() * ch.dim();
    CMatrix m(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        m.col(j) = basis.coordinates(cpanchor::apply(ch, basis.elements()[static_cast<std::size_t>(j)]));
    }
    return {basis, m};
}

Channel superoperator_to_channel(const Superoperator &s, const Tolerance &tol) {
    const Eigen::Index n = s.dim() * s.dim();
    if (s.matrix.rows() != n || s.matrix.cols() != n) {
        throw Error(ErrorKind::DimensionMismatch, "superoperator matrix must be d^2 x d^2");
    }
    return choi_to_kraus(to_choi(s), tol);
}

CMatrix liouville(const Channel &ch) {
    const Eigen::Index n = ch.dim() * ch.dim();
    CMatrix l = CMatrix::Zero(n, n);
    for (const CMatrix &a : ch.kraus()) l += kron(a.conjugate(), a);
    return l;
}

MapProperties map_properties(const Superoperator &s, const Tolerance &tol) {
    const Eigen::Index d = s.dim();
    MapProperties props;
    const ChoiMatrix choi = to_choi(s);
    props.hermiticity_residual = hermitian_residual(choi.matrix);
    props.hermiticity_preserving = props.hermiticity_residual <= tol.rel_eps * std::max(1.0, choi.matrix.norm());
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (choi.matrix + choi.matrix.adjoint()), Eigen::EigenvaluesOnly);
    const RVector &values = solver.eigenvalues();
    props.choi_min_eigenvalue = values(0);
    const double scale = std::max({1.0, std::abs(values(0)), std::abs(values(values.size() - 1))});
    props.cp = props.hermiticity_preserving && values(0) >= -tol.psd_slack * scale;
    const CMatrix id = CMatrix::Identity(d, d);
    props.unitality_defect = (s.apply(id) - id).norm();
    props.unital = props.unitality_defect <= defect_bound(d, tol);
    props.trace_preservation_defect =
        (trace_dual_of_identity(d, [&](const CMatrix &x) { return s.apply(x); }) - id).norm();
    props.trace_preserving = props.trace_preservation_defect <= defect_bound(d, tol);
    return props;
}

MapProperties map_properties(const Channel &ch, const Tolerance &tol) {
    MapProperties props;
    props.hermiticity_preserving = true;
    props.hermiticity_residual = 0.0;
    const ChoiMatrix choi = to_choi(ch);
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(choi.matrix, Eigen::EigenvaluesOnly);
    props.choi_min_eigenvalue = solver.eigenvalues()(0);
    props.cp = true;
    props.unitality_defect = unitality_defect(ch);
    props.unital = props.unitality_defect <= defect_bound(ch.dim(), tol);
    props.trace_preservation_defect = trace_preservation_defect(ch);
    props.trace_preserving = props.trace_preservation_defect <= defect_bound(ch.dim(), tol);
    return props;
}

Channel random_channel(Eigen::Index dim, std::size_t n, RandomChannelKind kind, std::uint64_t seed) {
    if (dim < 1 || n < 1) throw Error(ErrorKind::InvalidArgument, "random_channel needs d >= 1 and n >= 1");
    Rng rng(seed);
    const auto count = static_cast<Eigen::Index>(n);
    std::vector<CMatrix> kraus;
    kraus.reserve(n);
    switch (kind) {
        case RandomChannelKind::UnitalCP: {
            // Rows 0..d-1 of a Haar unitary: W W^* = I, A_i are its column blocks.
            const CMatrix u = rng.haar_unitary(dim * count);
            for (Eigen::Index i = 0; i < count; ++i) kraus.push_back(u.block(0, i * dim, dim, dim));
            return Channel(std::move(kraus), {true, std::nullopt});
        }
        case RandomChannelKind::TracePreservingCP: {
            const CMatrix u = rng.haar_unitary(dim * count);
            for (Eigen::Index i = 0; i < count; ++i) kraus.push_back(u.block(i * dim, 0, dim, dim));
            return Channel(std::move(kraus), {std::nullopt, true});
        }
        case RandomChannelKind::UnitalTracePreserving: {
            const RVector p = rng.probability_vector(count);
            for (Eigen::Index i = 0; i < count; ++i) kraus.push_back(std::sqrt(p(i)) * rng.haar_unitary(dim));
            return Channel(std::move(kraus), {true, true});
        }
    }
    throw Error(ErrorKind::InvalidArgument, "unknown random channel kind");
}

}  // namespace cpanchor
