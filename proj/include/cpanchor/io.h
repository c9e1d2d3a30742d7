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

#ifndef CPANCHOR_IO_H
#define CPANCHOR_IO_H

#include <string>
#include <variant>

#include <json.hpp>

#include "cpanchor/channel.h"
#include "cpanchor/fixedpoint.h"
#include "cpanchor/qubit.h"
#include "cpanchor/structure.h"
#include "cpanchor/wavelet.h"

namespace cpanchor::io {

using json = nlohmann::json;

// Matrices: {"rows": r, "cols": c, "entries": [[re, im], ...]} in row-major order.
json to_json(const CMatrix &m);
CMatrix matrix_from_json(const json &j);

// Channel: {"dim": d, "kraus": [matrix, ...]}.
json to_json(const Channel &ch);
Channel channel_from_json(const json &j);

// Superoperator: {"basis": {"kind": ..., "order": [[r, c], ...]}, "matrix": matrix}.
// kind is one of "matrix_units_row_major", "matrix_units_custom", "pauli".
json to_json(const Superoperator &s);
Superoperator superoperator_from_json(const json &j);

/// A channel file holds either representation.
using MapDocument = std::variant<Channel, Superoperator>;
MapDocument map_from_json(const json &j);

// FilterBank: {"scale": n, "filters": [[{"exponent": e, "coeff": [re, im]}, ...], ...]}.
json to_json(const wavelet::FilterBank &fb);
wavelet::FilterBank filterbank_from_json(const json &j);

/// Accepts a bare matrix or {"projection": matrix}.
Projection projection_from_json(const json &j, const Tolerance &tol = {});

json to_json(const DecompositionReport &report);
json to_json(const FixedCommutantReport &report);
json to_json(const qubit::QubitClass &cls);

/// Reads and parses a JSON file; failures raise ParseError.
json load_file(const std::string &path);

}  // namespace cpanchor::io

#endif  // CPANCHOR_IO_H
