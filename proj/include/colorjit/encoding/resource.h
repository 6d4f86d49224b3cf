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

#ifndef COLORJIT_ENCODING_RESOURCE_H
#define COLORJIT_ENCODING_RESOURCE_H

#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "colorjit/colex/lattice.h"
#include "json.hpp"

namespace colorjit {

enum class MeasBasis : uint8_t { X, Y, Z, XPlusY, XMinusY };

std::string basis_name(MeasBasis b);
MeasBasis parse_basis(const std::string &name);
inline bool is_non_pauli(MeasBasis b) { return b == MeasBasis::XPlusY || b == MeasBasis::XMinusY; }

/// Logical qubits joined by logical controlled-phase gates.
struct LogicalGraph {
    std::vector<MeasBasis> basis;
    std::vector<std::pair<uint32_t, uint32_t>> edges;  // u < v, sorted, no repeats

    size_t num_vertices() const { return basis.size(); }
    uint32_t add_vertex(MeasBasis b);
    void add_edge(uint32_t u, uint32_t v);
    std::vector<std::vector<uint32_t>> adjacency() const;
    size_t max_degree() const;
};

/// Text format, one vertex per line:
///
///     # comment
///     <id> <basis> [neighbour ...]
///
/// Ids run 0..n-1 in order. An edge may be listed on either end or both.
LogicalGraph parse_logical_graph(std::istream &in);
LogicalGraph parse_logical_graph(const std::string &text);
std::string format_logical_graph(const LogicalGraph &lg);

struct Block {
    uint32_t logical_vertex = 0;
    MeasBasis basis = MeasBasis::X;
    std::shared_ptr<const Lattice> lattice;
};

/// Identity matching of the code qubits of facet `color` in two blocks.
struct FacetMatching {
    uint32_t block_a = 0;
    uint32_t block_b = 0;
    Color color = Color::R;
    std::vector<std::pair<uint32_t, uint32_t>> pairs;  // (qubit in a, qubit in b)
};

/// One tetrahedral block per logical vertex. Code qubits are the tetrahedra of the
/// block, ancillas its faces. Inner edges join an ancilla to the code qubits of its
/// face; outer edges join matched code qubits of two blocks.
struct ResourceGraph {
    std::vector<Block> blocks;
    std::vector<FacetMatching> matchings;

    size_t num_blocks() const { return blocks.size(); }
    size_t num_inner_edges() const;
    size_t num_outer_edges() const;
    /// Partners of every code qubit of `block`: (other block, qubit).
    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> partners(uint32_t block) const;
    /// Neighbouring blocks of `block` through matchings.
    std::vector<uint32_t> neighbours(uint32_t block) const;
    /// Resource-graph degree of each code qubit and each ancilla of `block`.
    std::vector<uint32_t> code_valence(uint32_t block) const;
    std::vector<uint32_t> ancilla_valence(uint32_t block) const;
};

/// Code qubits on facet `c` of a block, ascending.
std::vector<uint32_t> facet_qubits(const Lattice &lat, Color c);

/// Builds the resource graph with one shared block geometry.
ResourceGraph build_resource_graph(const LogicalGraph &lg, std::shared_ptr<const Lattice> lattice);
/// One geometry per logical vertex. Linked blocks are matched through a facet colour
/// chosen by greedy edge colouring; throws FacetMismatch if the chosen facets differ
/// or a vertex needs more than four facets.
ResourceGraph build_resource_graph(const LogicalGraph &lg, const std::vector<std::shared_ptr<const Lattice>> &lattices);

/// Histogram of resource-graph degrees over bulk qubits of a block: code qubits whose
/// tetrahedron has only inner vertices and ancillas whose face qubits are all bulk.
std::map<uint32_t, size_t> bulk_valence_histogram(const ResourceGraph &rg, uint32_t block);

/// Lattice JSON per distinct geometry plus block and matching records.
nlohmann::json resource_graph_to_json(const ResourceGraph &rg);
ResourceGraph resource_graph_from_json(const nlohmann::json &j);

}  // namespace colorjit

#endif
