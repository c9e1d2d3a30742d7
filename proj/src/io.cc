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

#include "cpanchor/io.h"

#include <fstream>
#include <sstream>

namespace cpanchor::io {

namespace {

[[noreturn]] void parse_fail(const std::string &what) { throw Error(ErrorKind::ParseError, what); }

template <typename Fn>
auto guarded(const char *context, Fn &&fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const json::exception &e) {
        parse_fail(std::string(context) + ": " + e.what());
    }
}

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json &j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        parse_fail("complex numbers are [re, im] pairs");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

json vector_to_json(const CVector &v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
    return out;
}

std::string basis_kind_name(BasisKind kind) {
    switch (kind) {
        case BasisKind::MatrixUnitsRowMajor: return "matrix_units_row_major";
        case BasisKind::MatrixUnitsCustomOrder: return "matrix_units_custom";
        case BasisKind::Pauli: return "pauli";
    }
    return "unknown";
}

}  // namespace

json to_json(const CMatrix &m) {
    json entries = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) entries.push_back(complex_to_json(m(i, j)));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

CMatrix matrix_from_json(const json &j) {
    return guarded("matrix", [&] {
        if (!j.is_object()) parse_fail("a matrix must be an object with rows, cols and entries");
        const auto rows = j.at("rows").get<long long>();
        const auto cols = j.at("cols").get<long long>();
        const json &entries = j.at("entries");
        if (rows < 1 || cols < 1) parse_fail("matrix dimensions must be positive");
        if (!entries.is_array() || static_cast<long long>(entries.size()) != rows * cols) {
            parse_fail("matrix entries must have rows*cols elements");
        }
        CMatrix m(rows, cols);
        for (long long i = 0; i < rows; ++i) {
            for (long long k = 0; k < cols; ++k) m(i, k) = complex_from_json(entries[static_cast<std::size_t>(i * cols + k)]);
        }
        return m;
    });
}

json to_json(const Channel &ch) {
    json kraus = json::array();
    for (const CMatrix &a : ch.kraus()) kraus.push_back(to_json(a));
    return {{"dim", ch.dim()}, {"kraus", kraus}};
}

Channel channel_from_json(const json &j) {
    return guarded("channel", [&] {
        std::vector<CMatrix> kraus;
        for (const json &m : j.at("kraus")) kraus.push_back(matrix_from_json(m));
        if (kraus.empty()) parse_fail("channel needs at least one Kraus operator");
        const auto dim = j.contains("dim") ? j.at("dim").get<long long>() : kraus.front().rows();
        for (const CMatrix &a : kraus) {
            if (a.rows() != dim || a.cols() != dim) parse_fail("Kraus operator shape does not match dim");
        }
        return Channel(std::move(kraus));
    });
}

json to_json(const Superoperator &s) {
    json basis = {{"kind", basis_kind_name(s.basis.kind())}};
    if (s.basis.kind() == BasisKind::MatrixUnitsCustomOrder) {
        json order = json::array();
        for (const auto &[r, c] : s.basis.order()) order.push_back({r, c});
        basis["order"] = order;
        basis["labels"] = s.basis.labels();
    }
    return {{"basis", basis}, {"matrix", to_json(s.matrix)}};
}

Superoperator superoperator_from_json(const json &j) {
    return guarded("superoperator", [&] {
        const CMatrix m = matrix_from_json(j.at("matrix"));
        if (m.rows() != m.cols()) parse_fail("superoperator matrix must be square");
        const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(m.rows()))));
        if (d * d != m.rows()) parse_fail("superoperator size must be a perfect square");
        const json &basis = j.at("basis");
        const std::string kind = basis.at("kind").get<std::string>();
        if (kind == "matrix_units_row_major") return Superoperator{OperatorBasis::matrix_units_row_major(d), m};
        if (kind == "pauli") {
            if (d != 2) parse_fail("the Pauli basis is only defined for d = 2");
            return Superoperator{OperatorBasis::pauli(), m};
        }
        if (kind == "matrix_units_custom") {
            std::vector<OperatorBasis::LabelPair> order;
            for (const json &pair : basis.at("order")) {
                if (!pair.is_array() || pair.size() != 2) parse_fail("basis order entries are [row, col] pairs");
                order.emplace_back(pair[0].get<int>(), pair[1].get<int>());
            }
            std::vector<int> labels;
            if (basis.contains("labels")) labels = basis.at("labels").get<std::vector<int>>();
            try {
                OperatorBasis b = OperatorBasis::matrix_units_custom(std::move(order), std::move(labels));
                if (b.dim() != d) parse_fail("basis order does not match the matrix size");
                return Superoperator{std::move(b), m};
            } catch (const Error &e) {
                if (e.kind() == ErrorKind::ParseError) throw;
                parse_fail(e.what());
            }
        }
        parse_fail("unknown basis kind '" + kind + "'");
    });
}

MapDocument map_from_json(const json &j) {
    if (j.is_object() && j.contains("kraus")) return channel_from_json(j);
    if (j.is_object() && j.contains("basis") && j.contains("matrix")) return superoperator_from_json(j);
    parse_fail("expected a channel ({\"kraus\": ...}) or a superoperator ({\"basis\": ..., \"matrix\": ...})");
}

json to_json(const wavelet::FilterBank &fb) {
    json filters = json::array();
    for (const auto &m : fb.filters) {
        json terms = json::array();
        for (const auto &[e, c] : m) terms.push_back({{"exponent", e}, {"coeff", complex_to_json(c)}});
        filters.push_back(terms);
    }
    return {{"scale", fb.scale}, {"filters", filters}};
}

wavelet::FilterBank filterbank_from_json(const json &j) {
    return guarded("filter bank", [&] {
        wavelet::FilterBank fb;
        fb.scale = j.at("scale").get<int>();
        for (const json &terms : j.at("filters")) {
            wavelet::LaurentPolynomial m;
            for (const json &t : terms) m[t.at("exponent").get<int>()] += complex_from_json(t.at("coeff"));
            fb.filters.push_back(std::move(m));
        }
        try {
            fb.validate();
        } catch (const Error &e) {
            parse_fail(e.what());
        }
        return fb;
    });
}

Projection projection_from_json(const json &j, const Tolerance &tol) {
    const json &m = j.is_object() && j.contains("projection") ? j.at("projection") : j;
    const CMatrix matrix = matrix_from_json(m);
    try {
        return Projection::from_matrix(matrix, tol);
    } catch (const Error &e) {
        parse_fail(std::string("not a projection: ") + e.what());
    }
}

json to_json(const DecompositionReport &report) {
    json anchors = json::array();
    for (const Projection &p : report.anchors) anchors.push_back(to_json(p.matrix()));
    json cyclic = json::array();
    for (const CMatrix &q : report.cyclic_vector_bases) {
        json vectors = json::array();
        for (Eigen::Index k = 0; k < q.cols(); ++k) vectors.push_back(vector_to_json(q.col(k)));
        cyclic.push_back(vectors);
    }
    json out = {{"anchors", anchors},
                {"summand_count", report.summand_count},
                {"anchor_dims", report.anchor_dims},
                {"cyclic_vectors", cyclic},
                {"equivalence_classes", report.equivalence_classes},
                {"irreducible", report.irreducible}};
    if (report.exhaustive_minimality) out["exhaustive_minimality"] = true;
    return out;
}

json to_json(const FixedCommutantReport &report) {
    return {{"equal", report.equal},
            {"dim", report.dim},
            {"max_residual", report.max_residual},
            {"multiplicatively_closed", report.multiplicatively_closed}};
}

json to_json(const qubit::QubitClass &cls) {
    json out;
    if (cls.lambdas) {
        out["lambdas"] = {(*cls.lambdas)(0), (*cls.lambdas)(1), (*cls.lambdas)(2)};
    } else {
        out["lambdas"] = nullptr;
    }
    out["case"] = std::string(qubit::case_name(cls.kind));
    out["fixed_dim"] = cls.fixed_dim;
    if (!cls.basis_projections.empty()) {
        json projections = json::array();
        for (const CMatrix &p : cls.basis_projections) projections.push_back(to_json(p));
        out["projections"] = projections;
    }
    return out;
}

json load_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) parse_fail("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return json::parse(buffer.str());
    } catch (const json::exception &e) {
        parse_fail("'" + path + "': " + e.what());
    }
}

}  // namespace cpanchor::io
