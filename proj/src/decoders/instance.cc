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

#include "colorjit/decoders/instance.h"

#include "colorjit/errors.h"

namespace colorjit {

namespace {
constexpr int DECODE_FORMAT_VERSION = 1;
}

nlohmann::json graph_to_json(const SyndromeGraph &g) {
    nlohmann::json j;
    std::vector<int> outer(g.outer.begin(), g.outer.end());
    j["outer"] = outer;
    auto &edges = j["edges"] = nlohmann::json::array();
    for (size_t e = 0; e < g.num_edges(); e++) edges.push_back({g.edges[e].u, g.edges[e].v, g.weights[e]});
    if (!g.layer.empty()) j["layer"] = g.layer;
    return j;
}

SyndromeGraph graph_from_json(const nlohmann::json &j) {
    SyndromeGraph g;
    try {
        for (int o : j.at("outer").get<std::vector<int>>()) g.add_vertex(o != 0);
        for (const auto &e : j.at("edges")) {
            if (!e.is_array() || e.size() != 3) throw ParseError("edge must be [u, v, weight]");
            g.add_edge(e[0].get<uint32_t>(), e[1].get<uint32_t>(), e[2].get<int64_t>());
        }
        if (j.contains("layer")) {
            g.layer = j.at("layer").get<std::vector<int>>();
            if (g.layer.size() != g.num_vertices()) throw ParseError("layer tags do not cover the vertices");
        }
    } catch (const nlohmann::json::exception &ex) {
        throw ParseError(std::string("syndrome graph: ") + ex.what());
    } catch (const std::invalid_argument &ex) {
        throw ParseError(std::string("syndrome graph: ") + ex.what());
    }
    return g;
}

nlohmann::json instance_to_json(const DecodeInstance &inst) {
    nlohmann::json j;
    j["format"] = "colorjit.decode";
    j["version"] = DECODE_FORMAT_VERSION;
    j["graph"] = graph_to_json(inst.graph);
    j["defects"] = inst.defects;
    std::vector<size_t> chain = inst.chain.ones();
    j["chain"] = chain;
    j["weight"] = chain_weight(inst.graph, inst.chain);
    return j;
}

DecodeInstance instance_from_json(const nlohmann::json &j) {
    if (j.value("format", "") != "colorjit.decode") throw ParseError("not a colorjit decode document");
    if (j.value("version", 0) != DECODE_FORMAT_VERSION) throw ParseError("unsupported decode format version");
    DecodeInstance inst;
    inst.graph = graph_from_json(j.at("graph"));
    try {
        inst.defects = j.at("defects").get<std::vector<uint32_t>>();
        auto chain = j.at("chain").get<std::vector<size_t>>();
        for (size_t e : chain) {
            if (e >= inst.graph.num_edges()) throw ParseError("chain edge out of range");
        }
        for (uint32_t v : inst.defects) {
            if (v >= inst.graph.num_vertices()) throw ParseError("defect out of range");
        }
        inst.chain = BitVec::from_indices(inst.graph.num_edges(), chain);
        if (j.contains("weight") && j["weight"].get<int64_t>() != chain_weight(inst.graph, inst.chain)) {
            throw ParseError("recorded weight does not match chain");
        }
    } catch (const nlohmann::json::exception &ex) {
        throw ParseError(std::string("decode instance: ") + ex.what());
    }
    return inst;
}

}  // namespace colorjit
