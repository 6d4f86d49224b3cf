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

#pragma once

#include <cstdint>
#include <vector>

#include "colorjit/colex/lattice.h"
#include "colorjit/gf2/bitvec.h"

namespace colorjit {

struct GraphEdge {
    uint32_t u;
    uint32_t v;
};

/// Graph of the Z2 charge decoding problem. Inner vertices carry a check; outer vertices
/// absorb charge. Chains are BitVecs over edge ids.
struct SyndromeGraph {
    std::vector<bool> outer;
    std::vector<GraphEdge> edges;
    std::vector<int64_t> weights;
    /// Optional per-vertex layer tag (0 for outer vertices); empty when unused.
    std::vector<int> layer;
    std::vector<std::vector<uint32_t>> incident;

    uint32_t add_vertex(bool is_outer);
    uint32_t add_edge(uint32_t u, uint32_t v, int64_t weight = 1);

    size_t num_vertices() const { return outer.size(); }
    size_t num_edges() const { return edges.size(); }
    uint32_t other_end(uint32_t e, uint32_t v) const { return edges[e].u == v ? edges[e].v : edges[e].u; }

    /// Z2 picture of a colex: one inner vertex per cell (same ids), one edge per face
    /// (same ids), and a private outer leaf for every face between a cell and a facet.
    static SyndromeGraph from_lattice(const Lattice &lat);
};

/// Inner vertices with odd incidence in `chain`, ascending.
std::vector<uint32_t> syndrome_of(const SyndromeGraph &g, const BitVec &chain);

int64_t chain_weight(const SyndromeGraph &g, const BitVec &chain);

/// Connected components of an edge set (edges touching a common vertex are connected).
std::vector<BitVec> edge_components(const SyndromeGraph &g, const BitVec &edge_set);

/// Largest |k| / |k & omega| over components k of (omega | correction); 0 when empty and
/// infinity when a component misses omega.
double minimization_ratio(const SyndromeGraph &g, const BitVec &omega, const BitVec &correction);

}  // namespace colorjit
