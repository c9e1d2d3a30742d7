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

#include "cpanchor/wavelet.h"

#include <cmath>
#include <numbers>

namespace cpanchor::wavelet {

cplx evaluate(const LaurentPolynomial &m, cplx z) {
    cplx sum = 0.0;
    for (const auto &[e, c] : m) sum += c * std::pow(z, e);
    return sum;
}

void FilterBank::validate() const {
    if (scale < 2) throw Error(ErrorKind::InvalidArgument, "wavelet scale must be at least 2");
    if (static_cast<int>(filters.size()) != scale) {
        throw Error(ErrorKind::InvalidArgument, "a scale-" + std::to_string(scale) + " bank needs " +
                                                    std::to_string(scale) + " filters, got " +
                                                    std::to_string(filters.size()));
    }
}

FilterBank FilterBank::haar() {
    const double s = 1.0 / std::sqrt(2.0);
    return {2, {{{0, s}, {1, s}}, {{0, s}, {1, -s}}}};
}

std::vector<int> CompressionSpace::exponents() const {
    std::vector<int> out;
    for (Eigen::Index k = 0; k < dim; ++k) out.push_back(-static_cast<int>(k));
    return out;
}

Compression compress(const FilterBank &fb, const CompressionSpace &space, const Tolerance &tol) {
    fb.validate();
    if (space.dim < 1) throw Error(ErrorKind::InvalidArgument, "compression space needs dimension >= 1");
    const std::vector<int> exps = space.exponents();
    const Eigen::Index d = space.dim;
    std::vector<CMatrix> kraus;
    for (const LaurentPolynomial &m : fb.filters) {
        CMatrix a = CMatrix::Zero(d, d);
        for (Eigen::Index r = 0; r < d; ++r) {
            for (Eigen::Index c = 0; c < d; ++c) {
                const auto it = m.find(exps[static_cast<std::size_t>(r)] - fb.scale * exps[static_cast<std::size_t>(c)]);
                if (it != m.end()) a(r, c) = it->second;
            }
        }
        kraus.push_back(std::move(a));
    }
    Channel ch(std::move(kraus));
    const double defect = unitality_defect(ch);
    const bool warn = defect > tol.rel_eps * std::sqrt(static_cast<double>(d));
    return {std::move(ch), defect, warn};
}

UnitarityReport check_filter_unitarity(const FilterBank &fb, int samples, const Tolerance &tol) {
    fb.validate();
    if (samples < 1) throw Error(ErrorKind::InvalidArgument, "need at least one sample point");
    const int n = fb.scale;
    const double two_pi = 2.0 * std::numbers::pi;
    // Offset by a non-rational fraction of a step so no sample is a root of unity.
    const double offset = 0.3819660112501051;
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    UnitarityReport report;
    for (int s = 0; s < samples; ++s) {
        const cplx z = std::polar(1.0, two_pi * (s + offset) / samples);
        CMatrix m(n, n);
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                const cplx rho_k = std::polar(1.0, two_pi * k / n);
                m(i, k) = norm * evaluate(fb.filters[static_cast<std::size_t>(i)], rho_k * z);
            }
        }
        const double defect = (m.adjoint() * m - CMatrix::Identity(n, n)).norm();
        report.max_defect = std::max(report.max_defect, defect);
    }
    report.pass = report.max_defect < tol.rel_eps;
    return report;
}

}  // namespace cpanchor::wavelet
