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

#ifndef COLORJIT_COLEX_LATTICE_H
#define COLORJIT_COLEX_LATTICE_H

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "colorjit/colex/flux.h"
#include "colorjit/gf2/linalg.h"

namespace colorjit {

enum class VertexKind : uint8_t { Inner, Outer };
enum class Family : uint8_t { Slab, Wedge, Forbidden };

std::string family_name(Family f);
Family parse_family(const std::string &name);

/// Vertex of the extended dual graph. Inner vertices are cells, outer vertices are facets.
struct DualVertex {
    Color color = Color::R;
    VertexKind kind = VertexKind::Inner;
    /// Doubled lattice coordinates of the cell centre (zero for outer vertices).
    std::array<int, 3> pos{0, 0, 0};
};

/// Edge of the extended dual graph. Every edge is a face except the ones joining two
/// outer vertices (borders).
struct DualEdge {
    uint32_t u = 0;
    uint32_t v = 0;
    Flux label;
    bool border = false;
};

/// Triangle of the extended dual graph (a colex edge).
struct DualTriangle {
    std::array<uint32_t, 3> v{};
    std::array<uint32_t, 3> e{};
};

/// Tetrahedron of the extended dual graph (a colex vertex, one qubit).
struct DualTet {
    std::array<uint32_t, 4> v{};
    std::array<uint32_t, 6> e{};
};

/// Cells grouped into nested layers C_1 < C_2 < ... < C_n = all cells.
struct LayerStructure {
    int num_layers = 0;
    std::vector<int> cell_layer;   // per vertex, 0 for outer vertices
    std::vector<int> face_layer;   // per face: first layer containing one of its cells
    std::vector<int> qubit_layer;  // per qubit: first layer containing one of its cells
};

/// A tetrahedral 3-colex, stored through its extended dual graph.
///
/// Face edges use ids [0, num_faces()); border edges follow. Flux configurations are
/// BitVecs over the face ids, extended configurations over all edge ids.
struct Lattice {
    Family family = Family::Slab;
    int size = 0;
    int thickness = 1;
    std::array<int, 4> offsets{};

    std::vector<DualVertex> vertices;
    std::vector<DualEdge> edges;
    std::vector<DualTriangle> triangles;
    std::vector<DualTet> tets;
    LayerStructure layers;

    // Derived by finalize().
    uint32_t faces = 0;
    uint32_t cells = 0;
    std::array<int64_t, 4> outer_of_color{-1, -1, -1, -1};
    std::vector<std::vector<uint32_t>> vertex_edges;
    std::vector<std::vector<uint32_t>> vertex_triangles;
    std::vector<std::vector<uint32_t>> vertex_tets;
    std::vector<std::vector<uint32_t>> edge_tets;
    std::vector<std::vector<uint32_t>> edge_triangles;

    /// Recomputes labels, counts and incidence tables. Requires inner vertices first
    /// and face edges before border edges.
    void finalize();

    size_t num_vertices() const { return vertices.size(); }
    size_t num_edges() const { return edges.size(); }
    uint32_t num_faces() const { return faces; }
    uint32_t num_cells() const { return cells; }
    size_t num_qubits() const { return tets.size(); }
    bool is_outer(uint32_t v) const { return vertices[v].kind == VertexKind::Outer; }
    uint32_t other_end(uint32_t e, uint32_t v) const { return edges[e].u == v ? edges[e].v : edges[e].u; }
    /// Edge id joining u and v, or -1.
    int64_t find_edge(uint32_t u, uint32_t v) const;

    // Layer views, i in [1, num_layers]. Index 0 gives the empty sets.
    BitVec cells_upto(int i) const;
    BitVec faces_upto(int i) const;
    BitVec faces_at(int i) const;
    BitVec qubits_upto(int i) const;

    // Stabilizer supports as rows over qubits.
    BitMatrix cell_checks() const;
    BitMatrix facet_checks() const;
    BitMatrix face_checks() const;

    /// Flux boundary of a configuration over faces (or all edges); one charge per vertex.
    std::vector<Flux> boundary(const BitVec &config) const;
    /// Gauss law: zero charge at every inner vertex.
    bool is_syndrome(const BitVec &faces_config) const;
    /// Faces flipped by X errors on the given qubits.
    BitVec x_syndrome(const BitVec &qubit_mask) const;

   private:
    std::unordered_map<uint64_t, uint32_t> edge_index_;
};

/// Plane offsets of the tetrahedron for a size d >= 2.
std::array<int, 4> offsets_for_size(int size);

/// Builds the size-d tetrahedral colex and layers it with the family's time function.
/// Each layer holds `thickness` consecutive time levels.
Lattice build_lattice(Family family, int size, int thickness = 1);
Lattice build_lattice_with_offsets(Family family, const std::array<int, 4> &offsets, int thickness = 1);

/// Reassigns layers for a different family or thickness on the same colex.
void assign_layers(Lattice &lat, Family family, int thickness);

}  // namespace colorjit

#endif
