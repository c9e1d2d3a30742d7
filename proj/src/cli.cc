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

#include "cpanchor/cli.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cpanchor/channel.h"
#include "cpanchor/fixedpoint.h"
#include "cpanchor/io.h"
#include "cpanchor/qubit.h"
#include "cpanchor/structure.h"
#include "cpanchor/wavelet.h"

namespace cpanchor::cli {

using json = nlohmann::json;

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ParseError:
        case ErrorKind::InvalidArgument:
        case ErrorKind::DimensionMismatch:
        case ErrorKind::NonSquare:
        case ErrorKind::NotHermitian:
            return 2;
        case ErrorKind::NotCP:
        case ErrorKind::NotHermiticityPreserving:
        case ErrorKind::NotUnital:
        case ErrorKind::NotUnitalChannel:
        case ErrorKind::NotMonotone:
        case ErrorKind::NoConvergence:
        case ErrorKind::NotQubit:
        case ErrorKind::ToleranceConflict:
        case ErrorKind::PreconditionFailed:
            return 3;
        case ErrorKind::InternalConsistency:
            return 1;
    }
    return 1;
}

namespace {

bool is_matrix(const json &v) {
    return v.is_object() && v.size() == 3 && v.contains("rows") && v.contains("cols") && v.contains("entries");
}

bool is_scalar_array(const json &v) {
    return v.is_array() && std::all_of(v.begin(), v.end(), [](const json &e) { return e.is_primitive(); });
}

void render(const json &v, int indent, std::ostringstream &os);

void render_matrix(const json &m, int indent, std::ostringstream &os) {
    const auto rows = m.at("rows").get<std::size_t>();
    const auto cols = m.at("cols").get<std::size_t>();
    const json &entries = m.at("entries");
    os << rows << "x" << cols << "\n";
    for (std::size_t i = 0; i < rows; ++i) {
        os << std::string(static_cast<std::size_t>(indent), ' ');
        for (std::size_t j = 0; j < cols; ++j) {
            const json &z = entries[i * cols + j];
            os << (j ? "  " : "") << "(" << z[0].dump() << ", " << z[1].dump() << ")";
        }
        os << "\n";
    }
}

void render(const json &v, int indent, std::ostringstream &os) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (is_matrix(v)) {
        render_matrix(v, indent, os);
    } else if (v.is_object()) {
        os << "\n";
        for (const auto &[key, value] : v.items()) {
            os << pad << key << ": ";
            render(value, indent + 2, os);
        }
    } else if (is_scalar_array(v)) {
        os << v.dump(-1, ' ', false) << "\n";
    } else if (v.is_array()) {
        os << "\n";
        for (const json &item : v) {
            os << pad << "- ";
            render(item, indent + 2, os);
        }
    } else {
        os << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
}

Channel load_channel(const std::string &path, const Tolerance &tol) {
    io::MapDocument doc = io::map_from_json(io::load_file(path));
    if (auto *ch = std::get_if<Channel>(&doc)) return *ch;
    return superoperator_to_channel(std::get<Superoperator>(doc), tol);
}

json residuals_json(const MapProperties &props) {
    return {{"hermiticity_residual", props.hermiticity_residual},
            {"choi_min_eigenvalue", props.choi_min_eigenvalue},
            {"unitality_defect", props.unitality_defect},
            {"trace_preservation_defect", props.trace_preservation_defect}};
}

json cmd_check(const std::string &path, const CliConfig &cfg) {
    const io::MapDocument doc = io::map_from_json(io::load_file(path));
    MapProperties props;
    json n_kraus = nullptr;
    Eigen::Index dim = 0;
    if (const auto *ch = std::get_if<Channel>(&doc)) {
        props = map_properties(*ch, cfg.tol);
        n_kraus = ch->size();
        dim = ch->dim();
    } else {
        const auto &s = std::get<Superoperator>(doc);
        props = map_properties(s, cfg.tol);
        dim = s.dim();
        if (props.cp) n_kraus = superoperator_to_channel(s, cfg.tol).size();
    }
    return {{"cp", props.cp},
            {"hermiticity_preserving", props.hermiticity_preserving},
            {"unital", props.unital},
            {"trace_preserving", props.trace_preserving},
            {"dim", dim},
            {"n_kraus", n_kraus},
            {"residuals", residuals_json(props)}};
}

json cmd_fixed(const std::string &path, const CliConfig &cfg) {
    const Channel ch = load_channel(path, cfg.tol);
    const SubspaceBasis fixed = fixed_point_space(ch, cfg.tol);
    json basis = json::array();
    for (const CMatrix &f : fixed.elements()) basis.push_back(io::to_json(f));
    const bool unital = is_unital(ch, cfg.tol);
    const bool tp = is_trace_preserving(ch, cfg.tol);
    json out = {{"dim", fixed.size()}, {"basis", basis}, {"unital", unital}, {"trace_preserving", tp}};

    const ClosureCheck closure = multiplicative_closure(fixed, cfg.tol);
    json closure_json = {{"closed", closure.closed}, {"max_residual", closure.max_residual}};
    if (closure.witness) {
        const auto &[x, y] = *closure.witness;
        closure_json["witness"] = {{"x", io::to_json(x)}, {"y", io::to_json(y)}, {"product", io::to_json(x * y)}};
    }
    out["closure"] = closure_json;
    if (unital && tp) {
        out["commutant_check"] = io::to_json(verify_fixed_equals_commutant(ch, cfg.tol));
        out["note"] = "unital trace-preserving channel";
    } else {
        out["commutant_check"] = nullptr;
        out["note"] = std::string("not a unital channel; closure check: ") +
                      (closure.closed ? "passes" : "fails");
    }
    return out;
}

json cmd_decompose(const std::string &path, const CliConfig &cfg) {
    const Channel ch = load_channel(path, cfg.tol);
    AnchorOptions options;
    options.seed = cfg.seed;
    options.exhaustive = cfg.exhaustive;
    return io::to_json(anchor_projections(ch, options, cfg.tol));
}

json cmd_classify_qubit(const std::string &path, const CliConfig &cfg) {
    const Channel ch = load_channel(path, cfg.tol);
    return io::to_json(qubit::classify(ch, cfg.tol));
}

json cmd_phi_infinity(const std::string &channel_path, const std::string &projection_path, std::size_t max_iter,
                      const CliConfig &cfg) {
    const Channel ch = load_channel(channel_path, cfg.tol);
    const Projection p = io::projection_from_json(io::load_file(projection_path), cfg.tol);
    const PhiInfinityResult r = phi_infinity(ch, p, cfg.tol, max_iter);
    std::string direction;
    std::string meaning;
    switch (r.direction) {
        case MonotoneCase::Increasing:
            direction = "increasing";
            meaning = "least fixed point dominating p";
            break;
        case MonotoneCase::Decreasing:
            direction = "decreasing";
            meaning = "greatest fixed point dominated by p";
            break;
        case MonotoneCase::Fixed:
            direction = "fixed";
            meaning = "p is fixed";
            break;
    }
    return {{"limit", io::to_json(r.limit)},
            {"iterations", r.iterations},
            {"residual", r.residual},
            {"direction", direction},
            {"limit_is", meaning},
            {"monotone", r.monotone}};
}

json cmd_wavelet(const std::string &path, Eigen::Index dim, int samples, const std::string &out_path,
                 const CliConfig &cfg) {
    const wavelet::FilterBank fb = io::filterbank_from_json(io::load_file(path));
    const wavelet::UnitarityReport unitarity = wavelet::check_filter_unitarity(fb, samples, cfg.tol);
    const wavelet::Compression comp = wavelet::compress(fb, {dim}, cfg.tol);
    const json channel = io::to_json(comp.channel);
    if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) throw Error(ErrorKind::ParseError, "cannot write '" + out_path + "'");
        file << channel.dump(2) << "\n";
    }
    json out = {{"unitarity", {{"max_defect", unitarity.max_defect}, {"pass", unitarity.pass}}},
                {"unitality_defect", comp.unitality_defect},
                {"unital_warning", comp.unital_warning},
                {"channel", channel}};
    if (comp.unital_warning) out["hint"] = "sum A_i A_i^* != I; try a larger --dim";
    return out;
}

}  // namespace

std::string render_text(const json &value) {
    std::ostringstream os;
    if (value.is_object()) {
        for (const auto &[key, v] : value.items()) {
            os << key << ": ";
            render(v, 2, os);
        }
    } else {
        render(value, 0, os);
    }
    return os.str();
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Analysis of completely positive maps: properties, fixed points, anchor decompositions"};
    app.name("cpanchor");
    app.require_subcommand(1);
    app.fallthrough();

    CliConfig cfg;
    std::string output = "json";
    app.add_option("--seed", cfg.seed, "Seed for randomized searches")->default_val(0);
    app.add_option("--abs-eps", cfg.tol.abs_eps, "Absolute tolerance")->default_val(cfg.tol.abs_eps);
    app.add_option("--rel-eps", cfg.tol.rel_eps, "Relative tolerance (numerical rank cutoff)")
        ->default_val(cfg.tol.rel_eps);
    app.add_option("--psd-slack", cfg.tol.psd_slack, "Allowed negative eigenvalue, relative to the norm")
        ->default_val(cfg.tol.psd_slack);
    app.add_option("--output", output, "Output format")->check(CLI::IsMember({"json", "text"}))->default_val("json");
    app.add_flag("--exhaustive", cfg.exhaustive, "Extra minimality certification for anchors");

    std::function<json()> action;
    std::string file, second_file, out_path;
    Eigen::Index dim = 0;
    int samples = 257;
    std::size_t max_iter = 100000;

    auto *check = app.add_subcommand("check", "Report CP, unital and trace-preserving flags");
    check->add_option("channel", file, "Channel or superoperator JSON")->required();
    check->callback([&] { action = [&] { return cmd_check(file, cfg); }; });

    auto *fixed = app.add_subcommand("fixed", "Fixed-point space and commutant comparison");
    fixed->add_option("channel", file, "Channel or superoperator JSON")->required();
    fixed->callback([&] { action = [&] { return cmd_fixed(file, cfg); }; });

    auto *decompose = app.add_subcommand("decompose", "Anchor projections and summand decomposition");
    decompose->add_option("channel", file, "Channel or superoperator JSON")->required();
    decompose->callback([&] { action = [&] { return cmd_decompose(file, cfg); }; });

    auto *classify = app.add_subcommand("classify-qubit", "Fixed-point classification of a unital qubit channel");
    classify->add_option("channel", file, "Channel or superoperator JSON")->required();
    classify->callback([&] { action = [&] { return cmd_classify_qubit(file, cfg); }; });

    auto *phi_inf = app.add_subcommand("phi-infinity", "Limit of Phi^k(p) for a comparable projection p");
    phi_inf->add_option("channel", file, "Channel or superoperator JSON")->required();
    phi_inf->add_option("projection", second_file, "Projection JSON ({\"projection\": matrix})")->required();
    phi_inf->add_option("--max-iter", max_iter, "Iteration cap before giving up")->default_val(100000);
    phi_inf->callback([&] { action = [&] { return cmd_phi_infinity(file, second_file, max_iter, cfg); }; });

    auto *wave = app.add_subcommand("wavelet", "Compress a wavelet filter bank to a finite channel");
    wave->add_option("filterbank", file, "Filter bank JSON (scale and Laurent polynomial filters)")->required();
    wave->add_option("--dim", dim, "Dimension of span{z^0, ..., z^-(d-1)}")->required()->check(CLI::PositiveNumber);
    wave->add_option("--samples", samples, "Sample points on the circle")->default_val(257)->check(CLI::PositiveNumber);
    wave->add_option("--out", out_path, "Write the compressed channel JSON here");
    wave->callback([&] { action = [&] { return cmd_wavelet(file, dim, samples, out_path, cfg); }; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    cfg.output = output == "text" ? OutputFormat::Text : OutputFormat::Json;

    try {
        cfg.tol.validate();
        const json result = action();
        if (cfg.output == OutputFormat::Json) {
            out << result.dump(2) << "\n";
        } else {
            out << render_text(result);
        }
        return 0;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace cpanchor::cli
