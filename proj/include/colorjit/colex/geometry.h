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

#ifndef COLORJIT_COLEX_GEOMETRY_H
#define COLORJIT_COLEX_GEOMETRY_H

#include <array>
#include <limits>
#include <string>
#include <vector>

#include "colorjit/colex/lattice.h"

namespace colorjit {

constexpr int UNREACHABLE = std::numeric_limits<int>::max() / 4;

/// Breadth-first distances from `src` using the face edges selected by `edge_mask`.
/// Outer vertices are reached but never passed through.
std::vector<int> bfs_distances(const Lattice &lat, const BitVec &edge_mask, uint32_t src);

/// A shortest path as a list of vertices, or empty when `dst` is unreachable.
std::vector<uint32_t> shortest_path(const Lattice &lat, const BitVec &edge_mask, uint32_t src, uint32_t dst);

/// Distances from one vertex to each facet colour, and to the cheapest pair of
/// distinct facet colours.
struct FacetDistances {
    std::array<int, 4> to_color{UNREACHABLE, UNREACHABLE, UNREACHABLE, UNREACHABLE};
    int two_colors = UNREACHABLE;
    int any_color = UNREACHABLE;
};
FacetDistances facet_distances(const std::vector<int> &dist, const Lattice &lat);

/// Distances of vertex v inside layer i (past graph) and outside it (future graph).
struct LayerDistances {
    std::vector<int> past;
    std::vector<int> future;
    FacetDistances past_facets;
    FacetDistances future_facets;
};
LayerDistances layer_distances(const Lattice &lat, int layer, uint32_t v);

/// Inner vertices touched by both the faces of layer i and the faces after it.
std::vector<uint32_t> interface_vertices(const Lattice &lat, int layer);

struct ClosureGeometry {
    /// Constant for: future pair distance <= k * past pair distance, and
    /// min(future colour distance, future two-colour distance) <= k * past colour distance.
    double k = 0;
    double k_pair = 0;
    double k_color = 0;
    /// Constant for the same inequalities with past and future exchanged.
    double k_reverse = 0;
    /// Pair inequality combined with the distance to any facet (single-charge picture).
    double k_any = 0;
    int k_face = 0;
    double k_close = 0;
    double k_close_z2 = 0;
    bool satisfied = false;
    bool simple = true;
    int non_simple_cells = 0;
    std::vector<double> layer_k;
};

/// Sweeps every layer boundary and measures the closure constants.
ClosureGeometry check_closure_geometry(const Lattice &lat);

struct LayerCausality {
    int layer = 0;
    bool connected = false;
    int euler = 0;
    bool intersections_ok = false;
    bool injective = false;
    bool algebraic = false;
    std::string note;
    bool ok() const { return connected && euler == 1 && intersections_ok && injective && algebraic; }
};

struct CausalityReport {
    bool ok = false;
    std::vector<LayerCausality> layers;
};

/// Combinatorial ball checks for every C_i plus the inclusion of S_Z restricted to
/// R_i in the group of faces of layer i.
CausalityReport check_causality(const Lattice &lat, bool algebraic = true);

struct BallIdentityReport {
    bool full = false;
    std::vector<bool> layer_restriction;
    std::vector<bool> layer_subcolex;
    bool ok() const;
};

/// X-type centralizer of the face group equals the group of cells and facets.
bool ball_identity(const BitMatrix &face_checks, const BitMatrix &cell_checks, const BitMatrix &facet_checks);

/// Checks the identity above on the colex and on each layer ball, and that the face
/// group restricted to each layer's qubits is generated by that layer's faces.
BallIdentityReport verify_ball_identities(const Lattice &lat);

}  // namespace colorjit

#endif
