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

#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cpanchor/channel.h"
#include "cpanchor/cli.h"
#include "cpanchor/fixedpoint.h"
#include "cpanchor/qubit.h"
#include "cpanchor/structure.h"
#include "cpanchor/wavelet.h"

namespace py = pybind11;

namespace cpanchor {
namespace {

Tolerance make_tolerance(double abs_eps, double rel_eps, double psd_slack) {
    Tolerance tol{abs_eps, rel_eps, psd_slack};
    tol.validate();
    return tol;
}

py::dict properties_dict(const MapProperties &p) {
    py::dict out;
    out["hermiticity_preserving"] = p.hermiticity_preserving;
    out["cp"] = p.cp;
    out["unital"] = p.unital;
    out["trace_preserving"] = p.trace_preserving;
    out["hermiticity_residual"] = p.hermiticity_residual;
    out["choi_min_eigenvalue"] = p.choi_min_eigenvalue;
    out["unitality_defect"] = p.unitality_defect;
    out["trace_preservation_defect"] = p.trace_preservation_defect;
    return out;
}

py::dict decomposition_dict(const DecompositionReport &r) {
    std::vector<CMatrix> anchors;
    for (const Projection &p : r.anchors) anchors.push_back(p.matrix());
    py::dict out;
    out["anchors"] = anchors;
    out["summand_count"] = r.summand_count;
    out["anchor_dims"] = r.anchor_dims;
    out["cyclic_vector_bases"] = r.cyclic_vector_bases;
    out["equivalence_classes"] = r.equivalence_classes;
    out["irreducible"] = r.irreducible;
    return out;
}

}  // namespace
}  // namespace cpanchor

PYBIND11_MODULE(_core, m) {
    using namespace cpanchor;
    m.doc() = "Completely positive maps: properties, fixed points and anchor decompositions";

    // Library errors surface as CpanchorError (a ValueError) with a `kind` attribute.
    m.attr("CpanchorError") =
        py::reinterpret_steal<py::object>(PyErr_NewException("cpanchor._core.CpanchorError", PyExc_ValueError, nullptr));
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error &e) {
            const py::object type = py::module_::import("cpanchor._core").attr("CpanchorError");
            py::object exc = type(e.what());
            exc.attr("kind") = std::string(error_kind_name(e.kind()));
            PyErr_SetObject(type.ptr(), exc.ptr());
        }
    });

    py::class_<Tolerance>(m, "Tolerance")
        .def(py::init(&make_tolerance), py::arg("abs_eps") = 1e-10, py::arg("rel_eps") = 1e-9,
             py::arg("psd_slack") = 1e-9)
        .def_readonly("abs_eps", &Tolerance::abs_eps)
        .def_readonly("rel_eps", &Tolerance::rel_eps)
        .def_readonly("psd_slack", &Tolerance::psd_slack);

    py::class_<Channel>(m, "Channel")
        .def(py::init([](std::vector<CMatrix> kraus) { return Channel(std::move(kraus)); }), py::arg("kraus"))
        .def_static("identity", &Channel::identity, py::arg("dim"))
        .def_static("unitary", &Channel::unitary, py::arg("u"))
        .def_property_readonly("dim", &Channel::dim)
        .def_property_readonly("kraus", &Channel::kraus)
        .def("__len__", &Channel::size)
        .def("__call__", [](const Channel &ch, const CMatrix &x) { return cpanchor::apply(ch, x); }, py::arg("x"));

    m.def("apply", [](const Channel &ch, const CMatrix &x) { return cpanchor::apply(ch, x); }, py::arg("channel"),
          py::arg("x"));
    m.def("dual_apply", &dual_apply, py::arg("channel"), py::arg("x"));
    m.def("choi", [](const Channel &ch) { return to_choi(ch).matrix; }, py::arg("channel"));
    m.def(
        "choi_to_kraus",
        [](const CMatrix &choi, const Tolerance &tol) {
            const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(choi.rows()))));
            return choi_to_kraus({n, choi}, tol);
        },
        py::arg("choi"), py::arg("tol") = Tolerance{});
    m.def("liouville", &liouville, py::arg("channel"));
    m.def(
        "map_properties", [](const Channel &ch, const Tolerance &tol) { return properties_dict(map_properties(ch, tol)); },
        py::arg("channel"), py::arg("tol") = Tolerance{});
    m.def(
        "random_channel",
        [](Eigen::Index dim, std::size_t n, const std::string &kind, std::uint64_t seed) {
            RandomChannelKind k = RandomChannelKind::UnitalTracePreserving;
            if (kind == "unital") {
                k = RandomChannelKind::UnitalCP;
            } else if (kind == "trace_preserving") {
                k = RandomChannelKind::TracePreservingCP;
            } else if (kind != "unital_trace_preserving") {
                throw Error(ErrorKind::InvalidArgument, "kind must be unital, trace_preserving or unital_trace_preserving");
            }
            return random_channel(dim, n, k, seed);
        },
        py::arg("dim"), py::arg("n"), py::arg("kind") = "unital_trace_preserving", py::arg("seed") = 0);

    m.def(
        "fixed_point_space",
        [](const Channel &ch, const Tolerance &tol) { return fixed_point_space(ch, tol).elements(); },
        py::arg("channel"), py::arg("tol") = Tolerance{});
    m.def(
        "commutant",
        [](const std::vector<CMatrix> &gens, const Tolerance &tol) { return commutant(gens, tol).elements(); },
        py::arg("generators"), py::arg("tol") = Tolerance{});
    m.def(
        "phi_infinity",
        [](const Channel &ch, const CMatrix &p, const Tolerance &tol, std::size_t max_iter) {
            const PhiInfinityResult r = phi_infinity(ch, Projection::from_matrix(p, tol), tol, max_iter);
            const char *names[] = {"increasing", "decreasing", "fixed"};
            py::dict out;
            out["limit"] = r.limit;
            out["iterations"] = r.iterations;
            out["residual"] = r.residual;
            out["direction"] = names[static_cast<int>(r.direction)];
            return out;
        },
        py::arg("channel"), py::arg("p"), py::arg("tol") = Tolerance{}, py::arg("max_iter") = 100000);
    m.def(
        "find_intertwiner",
        [](const std::vector<CMatrix> &a, const std::vector<CMatrix> &b, const Tolerance &tol) {
            return find_intertwiner(a, b, tol);
        },
        py::arg("block_a"), py::arg("block_b"), py::arg("tol") = Tolerance{});

    m.def(
        "anchor_projections",
        [](const Channel &ch, std::uint64_t seed, bool exhaustive, const Tolerance &tol) {
            return decomposition_dict(anchor_projections(ch, {seed, exhaustive}, tol));
        },
        py::arg("channel"), py::arg("seed") = 0, py::arg("exhaustive") = false, py::arg("tol") = Tolerance{});
    m.def(
        "top_eigenspace_check",
        [](const Channel &ch, const CMatrix &x, const Tolerance &tol) { return top_eigenspace_check(ch, x, tol); },
        py::arg("channel"), py::arg("x"), py::arg("tol") = Tolerance{});

    m.def(
        "classify_qubit",
        [](const Channel &ch, const Tolerance &tol) {
            const qubit::QubitClass c = qubit::classify(ch, tol);
            py::dict out;
            out["case"] = std::string(qubit::case_name(c.kind));
            out["fixed_dim"] = c.fixed_dim;
            if (c.lambdas) {
                out["lambdas"] = std::vector<double>{(*c.lambdas)(0), (*c.lambdas)(1), (*c.lambdas)(2)};
            } else {
                out["lambdas"] = py::none();
            }
            out["projections"] = c.basis_projections;
            return out;
        },
        py::arg("channel"), py::arg("tol") = Tolerance{});

    m.def(
        "compress_filter_bank",
        [](int scale, const std::vector<std::map<int, cplx>> &filters, Eigen::Index dim, const Tolerance &tol) {
            const wavelet::Compression c = wavelet::compress({scale, filters}, {dim}, tol);
            py::dict out;
            out["channel"] = c.channel;
            out["unitality_defect"] = c.unitality_defect;
            out["unital_warning"] = c.unital_warning;
            return out;
        },
        py::arg("scale"), py::arg("filters"), py::arg("dim"), py::arg("tol") = Tolerance{});
    m.def(
        "filter_unitarity_defect",
        [](int scale, const std::vector<std::map<int, cplx>> &filters, int samples) {
            return wavelet::check_filter_unitarity({scale, filters}, samples).max_defect;
        },
        py::arg("scale"), py::arg("filters"), py::arg("samples") = 257);

    m.def(
        "run_cli",
        [](const std::vector<std::string> &args) {
            std::ostringstream out;
            std::ostringstream err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs one command-line invocation; returns (exit_code, stdout, stderr).");
}
