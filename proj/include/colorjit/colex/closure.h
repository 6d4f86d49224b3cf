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

#ifndef COLORJIT_COLEX_CLOSURE_H
#define COLORJIT_COLEX_CLOSURE_H

#include <random>
#include <vector>

#include "colorjit/colex/lattice.h"

namespace colorjit {

/// Triangle strip e_0, t_1, e_1, ..., t_n, e_n where t_k contains e_{k-1} and e_k.
/// Edges and triangles may repeat.
struct Strip {
    std::vector<uint32_t> edges;
    std::vector<uint32_t> triangles;
};

/// Vertices touched by the strip.
std::vector<uint32_t> strip_vertices(const Lattice &lat, const Strip &s);

/// Extended flux configuration (over all edges) supported on the strip whose boundary
/// is `monopole`. The monopole configuration must sum to zero, carry at each vertex an
/// element avoiding that vertex's colour, and be supported on the strip's vertices.
/// Throws InfeasibleSyndrome otherwise.
BitVec strip_flux(const Lattice &lat, const Strip &s, std::vector<Flux> monopole);

/// Turns a walk (consecutive edges share a vertex) that avoids `past_faces` into a
/// strip whose edges all avoid `past_faces`. Pivots happen around inner vertices
/// through triangles whose three edges avoid `past_faces`.
/// Throws NotSimple when a pivot is impossible.
Strip strip_for_walk(const Lattice &lat, const std::vector<uint32_t> &walk, const BitVec &past_faces);

struct ClosureResult {
    BitVec flux;
    size_t strip_edges = 0;
    size_t tree_edges = 0;
};

/// Moves a configuration of layer i whose charges sit on the future boundary to the
/// faces after layer i, keeping every inner charge. Follows the tree, path and strip
/// construction one connected component at a time.
ClosureResult close_flux(const Lattice &lat, int layer, const BitVec &phi);

/// A random configuration of layer i with charges only on the future boundary: the
/// past part of the syndrome of `num_errors` random X errors, plus random past faces
/// joining two future-boundary vertices.
BitVec random_open_configuration(const Lattice &lat, int layer, std::mt19937_64 &rng, int num_errors, int num_links);

}  // namespace colorjit

#endif
