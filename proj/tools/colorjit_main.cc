// Copyright 2026 The colorjit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command line front end: lattice files, geometry reports, single decodes,
// Monte Carlo experiments and the property suites.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "colorjit/colex/geometry.h"
#include "colorjit/colex/serialize.h"
#include "colorjit/decoders/graph.h"
#include "colorjit/decoders/instance.h"
#include "colorjit/decoders/mwpm.h"
#include "colorjit/encoding/resource.h"
#include "colorjit/errors.h"
#include "colorjit/harness/config.h"
#include "colorjit/harness/experiment.h"
#include "colorjit/harness/verify.h"
#include "colorjit/noise/noise.h"

using namespace colorjit;

namespace {

struct Output {
    std::ofstream file;
    std::ostream *stream = &std::cout;

    explicit Output(const std::string &path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
        stream = &file;
    }
};

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cmd_build(const std::string &family, int size, int layers, const std::string &logical, const std::string &out) {
    auto lat = std::make_shared<const Lattice>(build_lattice(parse_family(family), size, layers));
    Output o(out);
    if (logical.empty()) {
        *o.stream << lattice_to_json(*lat).dump() << '\n';
    } else {
        LogicalGraph lg = parse_logical_graph(read_file(logical));
        *o.stream << resource_graph_to_json(build_resource_graph(lg, lat)).dump() << '\n';
    }
    return 0;
}

int cmd_check(const std::string &family, int size, int layers, uint64_t seed, const std::string &format,
              const std::string &out) {
    Lattice lat = build_lattice(parse_family(family), size, layers);
    ClosureGeometry geo = check_closure_geometry(lat);
    CausalityReport causal = check_causality(lat);
    SyndromeGraph g = SyndromeGraph::from_lattice(lat);
    uint32_t centre = 0;
    for (uint32_t v = 0; v < lat.num_cells(); v++)
        if (g.incident[v].size() > g.incident[centre].size()) centre = v;
    AlphaReport alpha = enumerate_alpha(g, centre, 5);
    SuiteResult oracle = verify_oracle_suite(300, {size}, 8, seed);
    Output o(out);
    if (format == "json") {
        nlohmann::json j{{"family", family},          {"size", size},
                         {"layers", lat.layers.num_layers},
                         {"qubits", lat.num_qubits()}, {"causal", causal.ok},
                         {"k", geo.k},                {"k_face", geo.k_face},
                         {"k_close", geo.k_close},    {"k_close_z2", geo.k_close_z2},
                         {"alpha", alpha.alpha},      {"k_min", oracle.measured},
                         {"oracle_mismatches", oracle.failures}};
        *o.stream << j.dump(2) << '\n';
    } else {
        auto &s = *o.stream;
        s << "family      " << family << "\n";
        s << "size        " << size << "\n";
        s << "layers      " << lat.layers.num_layers << "\n";
        s << "qubits      " << lat.num_qubits() << "\n";
        s << "causal      " << (causal.ok ? "yes" : "no") << "\n";
        s << "k           " << geo.k << "\n";
        s << "k_face      " << geo.k_face << "\n";
        s << "k_close     " << geo.k_close << "\n";
        s << "k_close_z2  " << geo.k_close_z2 << "\n";
        s << "alpha       " << alpha.alpha << (alpha.partial ? " (partial)" : "") << "\n";
        s << "k_min       " << oracle.measured << " (" << oracle.cases << " oracle instances, " << oracle.failures
          << " mismatches)\n";
    }
    return causal.ok && oracle.ok() ? 0 : 1;
}

int cmd_decode(const std::string &in, const std::string &out) {
    DecodeInstance inst = instance_from_json(nlohmann::json::parse(read_file(in)));
    inst.chain = mwpm_decode(inst.graph, inst.defects);
    Output o(out);
    *o.stream << instance_to_json(inst).dump() << '\n';
    return 0;
}

int cmd_verify(uint64_t scale, uint64_t seed) {
    std::vector<SuiteResult> results;
    results.push_back(verify_ball_identity_suite({2, 3}));
    results.push_back(verify_oracle_suite(scale, {2, 3, 4}, 8, seed));
    results.push_back(verify_ledger_suite(scale, {2, 3, 4}, 0.05, seed + 1));
    results.push_back(verify_closure_suite(std::max<uint64_t>(1, scale / 20), {2, 3}, seed + 2));
    bool ok = true;
    for (const auto &r : results) {
        std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.cases << " cases, " << r.failures
                  << " failures";
        if (r.measured) std::cout << ", measured " << r.measured;
        if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
        std::cout << "\n";
        ok = ok && r.ok();
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Just-in-time decoding toolkit for tetrahedral colour codes"};
    app.require_subcommand(1);

    std::string family = "slab", out, format = "csv", logical, input, config_path;
    int size = 3, layers = 1;
    uint64_t seed = 1, trials = 1000;

    auto *build = app.add_subcommand("build", "Write a lattice (or a resource graph) as JSON");
    build->add_option("--family", family, "slab, wedge or forbidden");
    build->add_option("--size", size, "Block size, 2 and up");
    build->add_option("--layers", layers, "Layer thickness multiplier");
    build->add_option("--logical", logical, "Logical graph file; emits the resource graph instead");
    build->add_option("--out", out, "Output path (default stdout)");

    auto *check = app.add_subcommand("check", "Report causality and the measured constants");
    check->add_option("--family", family, "slab, wedge or forbidden");
    check->add_option("--size", size, "Block size");
    check->add_option("--layers", layers, "Layer thickness multiplier");
    check->add_option("--seed", seed, "Seed of the oracle sweep");
    check->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json", "csv"}));
    check->add_option("--out", out, "Output path");

    auto *decode = app.add_subcommand("decode", "Decode a stored instance with the matching decoder");
    decode->add_option("--in", input, "Instance JSON")->required();
    decode->add_option("--out", out, "Output path");

    auto *experiment = app.add_subcommand("experiment", "Run a Monte Carlo experiment");
    std::string e_size, e_rate, e_trials, e_seed, e_layers, e_lookahead, e_family, e_decoder, e_kind, e_out, e_format;
    experiment->add_option("--config", config_path, "key = value configuration file");
    experiment->add_option("--experiment", e_kind, "threshold or comparison");
    experiment->add_option("--family", e_family, "Geometry family");
    experiment->add_option("--size", e_size, "Comma separated sizes");
    experiment->add_option("--rate", e_rate, "Comma separated noise rates");
    experiment->add_option("--trials", e_trials, "Trials per point");
    experiment->add_option("--seed", e_seed, "Master seed");
    experiment->add_option("--layers", e_layers, "Layer thickness multiplier");
    experiment->add_option("--lookahead", e_lookahead, "JIT lookahead");
    experiment->add_option("--decoder", e_decoder, "conventional, jit or both");
    experiment->add_option("--out", e_out, "Output path");
    experiment->add_option("--format", e_format, "csv or json");

    auto *verify = app.add_subcommand("verify", "Run the property suites");
    verify->add_option("--trials", trials, "Instances per randomized suite");
    verify->add_option("--seed", seed, "Seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*build) return cmd_build(family, size, layers, logical, out);
        if (*check) return cmd_check(family, size, layers, seed, format == "json" ? "json" : "text", out);
        if (*decode) return cmd_decode(input, out);
        if (*verify) return cmd_verify(trials, seed);
        if (*experiment) {
            ExperimentConfig cfg = config_path.empty() ? ExperimentConfig{} : parse_config_text(read_file(config_path));
            const std::pair<const char *, std::string *> overrides[] = {
                {"experiment", &e_kind}, {"family", &e_family},       {"sizes", &e_size},
                {"rates", &e_rate},      {"trials", &e_trials},       {"seed", &e_seed},
                {"thickness", &e_layers}, {"lookahead", &e_lookahead}, {"decoder", &e_decoder},
                {"out", &e_out},         {"format", &e_format}};
            for (const auto &[key, value] : overrides)
                if (!value->empty()) apply_setting(cfg, key, *value);
            cfg.validate();
            write_results(cfg, run_experiment(cfg));
            return 0;
        }
    } catch (const std::exception &e) {
        std::cerr << "colorjit: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
