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

#include "colorjit/decoders/graph.h"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace colorjit {

uint32_t SyndromeGraph::add_vertex(bool is_outer) {
    outer.push_back(is_outer);
    incident.emplace_back();
    if (!layer.empty()) layer.push_back(0);
    return static_cast<uint32_t>(outer.size() - 1);
}

uint32_t SyndromeGraph::add_edge(uint32_t u, uint32_t v, int64_t weight) {
    if (u >= num_vertices() || v >= num_vertices() || u == v) throw std::invalid_argument("add_edge: bad endpoints");
    if (weight < 0) throw std::invalid_argument("add_edge: negative weight");
    uint32_t e = static_cast<uint32_t>(edges.size());
    edges.push_back({u, v});
    weights.push_back(weight);
    incident[u].push_back(e);
    incident[v].push_back(e);
    return e;
}

SyndromeGraph SyndromeGraph::from_lattice(const Lattice &lat) {
    SyndromeGraph g;
    for (uint32_t c = 0; c < lat.num_cells(); c++) g.add_vertex(false);
    g.layer.assign(lat.num_cells(), 0);
    for (uint32_t c = 0; c < lat.num_cells(); c++) g.layer[c] = lat.layers.cell_layer[c];
    for (uint32_t e = 0; e < lat.num_faces(); e++) {
        const DualEdge &de = lat.edges[e];
        uint32_t u = de.u, v = de.v;
        if (lat.is_outer(u)) std::swap(u, v);
        if (lat.is_outer(v)) v = g.add_vertex(true);
        g.add_edge(u, v);
    }
    return g;
}

std::vector<uint32_t> syndrome_of(const SyndromeGraph &g, const BitVec &chain) {
    std::vector<uint8_t> parity(g.num_vertices(), 0);
    chain.for_each_one([&](size_t e) {
        parity[g.edges[e].u] ^= 1;
        parity[g.edges[e].v] ^= 1;
    });
    std::vector<uint32_t> out;
    for (uint32_t v = 0; v < g.num_vertices(); v++) {
        if (parity[v] && !g.outer[v]) out.push_back(v);
    }
    return out;
}

int64_t chain_weight(const SyndromeGraph &g, const BitVec &chain) {
    int64_t w = 0;
    chain.for_each_one([&](size_t e) { w += g.weights[e]; });
    return w;
}

std::vector<BitVec> edge_components(const SyndromeGraph &g, const BitVec &edge_set) {
    std::vector<uint32_t> parent(g.num_vertices());
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    edge_set.for_each_one([&](size_t e) { parent[find(g.edges[e].u)] = find(g.edges[e].v); });
    std::vector<int64_t> slot(g.num_vertices(), -1);
    std::vector<BitVec> out;
    edge_set.for_each_one([&](size_t e) {
        uint32_t r = find(g.edges[e].u);
        if (slot[r] < 0) {
            slot[r] = static_cast<int64_t>(out.size());
            out.emplace_back(g.num_edges());
        }
        out[static_cast<size_t>(slot[r])].set(e);
    });
    return out;
}

double minimization_ratio(const SyndromeGraph &g, const BitVec &omega, const BitVec &correction) {
    double worst = 0;
    for (const BitVec &k : edge_components(g, omega | correction)) {
        size_t hit = (k & omega).popcount();
        if (hit == 0) return std::numeric_limits<double>::infinity();
        worst = std::max(worst, static_cast<double>(k.popcount()) / static_cast<double>(hit));
    }
    return worst;
}

}  // namespace colorjit
