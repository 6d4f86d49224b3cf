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

#include "colorjit/encoding/pauli_frame.h"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include "colorjit/errors.h"
#include "colorjit/gf2/pauli.h"

namespace colorjit {

BitVec frame_from_ancillas(const Lattice &lat, const BitVec &phi_hat) {
    if (phi_hat.size() != lat.num_faces()) throw std::invalid_argument("frame_from_ancillas: syndrome size");
    auto q = solve(lat.face_checks(), phi_hat);
    if (!q) throw InfeasibleSyndrome("ancilla outcomes are not a block syndrome");
    return *q;
}

std::vector<BitVec> layered_frame_from_ancillas(const Lattice &lat, const BitVec &phi_hat) {
    if (phi_hat.size() != lat.num_faces()) throw std::invalid_argument("layered_frame_from_ancillas: syndrome size");
    BitMatrix checks = lat.face_checks();
    int n = lat.layers.num_layers;
    std::vector<BitVec> out{BitVec(lat.num_qubits())};
    for (int i = 1; i <= n; i++) {
        BitVec faces = lat.faces_upto(i);
        BitMatrix gens(0, lat.num_qubits());
        BitVec syn(faces.popcount());
        size_t k = 0;
        faces.for_each_one([&](size_t f) {
            gens.push_back(checks.rows[f]);
            syn.set(k++, phi_hat.get(f));
        });
        out.push_back(piecewise_frame_step(gens, lat.qubits_upto(i), lat.qubits_upto(i - 1), syn, out.back()));
    }
    return out;
}

std::vector<BitVec> propagate_frame(const ResourceGraph &rg, const std::vector<BitVec> &fx) {
    if (fx.size() != rg.num_blocks()) throw std::invalid_argument("propagate_frame: one mask per block");
    std::vector<BitVec> fz;
    for (size_t b = 0; b < rg.num_blocks(); b++) fz.emplace_back(rg.blocks[b].lattice->num_qubits());
    for (const auto &m : rg.matchings)
        for (auto [qa, qb] : m.pairs) {
            if (fx[m.block_a].get(qa)) fz[m.block_b].flip(qb);
            if (fx[m.block_b].get(qb)) fz[m.block_a].flip(qa);
        }
    return fz;
}

BitVec qubit_sublattice(const Lattice &lat) {
    // Tetrahedra sharing a triangle are adjacent colex vertices.
    std::vector<std::vector<uint32_t>> tri_tets(lat.triangles.size());
    std::map<std::array<uint32_t, 3>, uint32_t> tri_index;
    for (uint32_t t = 0; t < lat.triangles.size(); t++) {
        auto key = lat.triangles[t].v;
        std::sort(key.begin(), key.end());
        tri_index[key] = t;
    }
    for (uint32_t q = 0; q < lat.num_qubits(); q++) {
        const auto &v = lat.tets[q].v;
        for (int skip = 0; skip < 4; skip++) {
            std::array<uint32_t, 3> key;
            int k = 0;
            for (int a = 0; a < 4; a++)
                if (a != skip) key[k++] = v[a];
            std::sort(key.begin(), key.end());
            auto it = tri_index.find(key);
            if (it != tri_index.end()) tri_tets[it->second].push_back(q);
        }
    }
    BitVec side(lat.num_qubits());
    std::vector<bool> seen(lat.num_qubits(), false);
    std::vector<std::vector<uint32_t>> adj(lat.num_qubits());
    for (const auto &ts : tri_tets)
        if (ts.size() == 2) {
            adj[ts[0]].push_back(ts[1]);
            adj[ts[1]].push_back(ts[0]);
        }
    for (uint32_t s = 0; s < lat.num_qubits(); s++) {
        if (seen[s]) continue;
        seen[s] = true;
        std::vector<uint32_t> stack{s};
        while (!stack.empty()) {
            uint32_t q = stack.back();
            stack.pop_back();
            for (uint32_t w : adj[q]) {
                if (!seen[w]) {
                    seen[w] = true;
                    side.set(w, !side.get(q));
                    stack.push_back(w);
                } else if (side.get(w) == side.get(q)) {
                    throw InvalidGeometry("qubit adjacency is not bipartite");
                }
            }
        }
    }
    return side;
}

std::vector<MeasBasis> basis_assignment(const Lattice &lat, const BitVec &fx, MeasBasis logical) {
    if (!is_non_pauli(logical)) throw std::invalid_argument("basis_assignment: logical basis must be X+Y or X-Y");
    MeasBasis other = logical == MeasBasis::XPlusY ? MeasBasis::XMinusY : MeasBasis::XPlusY;
    BitVec flip = qubit_sublattice(lat) ^ fx;
    std::vector<MeasBasis> out(lat.num_qubits());
    for (size_t q = 0; q < out.size(); q++) out[q] = flip.get(q) ? other : logical;
    return out;
}

BitVec logical_x_support(const Lattice &lat) {
    auto qs = facet_qubits(lat, Color::R);
    BitVec out(lat.num_qubits());
    for (uint32_t q : qs) out.set(q);
    return out;
}

BitVec logical_z_support(const Lattice &lat) {
    BitMatrix faces = lat.face_checks();
    Echelon span = row_reduce(faces);
    BitVec lx = logical_x_support(lat);
    for (const BitVec &k : kernel(lat.cell_checks()).rows)
        if (!span.contains(k) && k.dot(lx)) return k;
    throw InvalidGeometry("no logical Z representative");
}

bool logical_outcome_pauli(const Lattice &lat, MeasBasis basis, const BitVec &outcomes, const BlockFrame &frame) {
    if (outcomes.size() != lat.num_qubits()) throw std::invalid_argument("logical_outcome_pauli: outcome size");
    if (basis == MeasBasis::X) return outcomes.dot(logical_x_support(lat)) ^ frame.z.dot(logical_x_support(lat));
    if (basis == MeasBasis::Z) return outcomes.dot(logical_z_support(lat)) ^ frame.x.dot(logical_z_support(lat));
    throw std::invalid_argument("logical_outcome_pauli: basis must be X or Z");
}

}  // namespace colorjit
