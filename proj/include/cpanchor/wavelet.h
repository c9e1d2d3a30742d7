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

#ifndef CPANCHOR_WAVELET_H
#define CPANCHOR_WAVELET_H

#include <map>
#include <vector>

#include "cpanchor/channel.h"

namespace cpanchor::wavelet {

/// Laurent polynomial m(z) = sum_e coeff[e] z^e.
using LaurentPolynomial = std::map<int, cplx>;

cplx evaluate(const LaurentPolynomial &m, cplx z);

/// Filters m_1..m_n of a scale-n wavelet; n = scale filters are required.
struct FilterBank {
    int scale = 2;
    std::vector<LaurentPolynomial> filters;

    /// Throws InvalidArgument unless scale >= 2 and there are `scale` filters.
    void validate() const;

    /// (1 + z)/sqrt(2), (1 - z)/sqrt(2).
    static FilterBank haar();
};

/// span{z^0, z^-1, ..., z^-(d-1)} inside L^2(T).
struct CompressionSpace {
    Eigen::Index dim = 1;

    std::vector<int> exponents() const;
};

struct Compression {
    Channel channel;
    double unitality_defect = 0.0;
    /// Set when sum A_i A_i^* != I, i.e. the space is too small to be co-invariant.
    bool unital_warning = false;
};

/// A_i(row j, col k) = coefficient of z^j in m_i(z) z^{n k}, exponents
/// j, k in {0, -1, ..., -(d-1)}.
Compression compress(const FilterBank &fb, const CompressionSpace &space, const Tolerance &tol = {});

struct UnitarityReport {
    double max_defect = 0.0;
    bool pass = false;
};

/// max over sample points z of ||M(z)^* M(z) - I||_F with
/// M(z) = (m_i(rho^k z))_{i,k} / sqrt(n).
UnitarityReport check_filter_unitarity(const FilterBank &fb, int samples = 257, const Tolerance &tol = {});

}  // namespace cpanchor::wavelet

#endif  // CPANCHOR_WAVELET_H
