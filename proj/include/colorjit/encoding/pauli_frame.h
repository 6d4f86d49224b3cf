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

#ifndef COLORJIT_ENCODING_PAULI_FRAME_H
#define COLORJIT_ENCODING_PAULI_FRAME_H

#include <vector>

#include "colorjit/encoding/resource.h"

namespace colorjit {

/// Frame of one block, F = F_X F_Z, as two masks over its code qubits.
struct BlockFrame {
    BitVec x;
    BitVec z;
};

using PauliFrame = std::vector<BlockFrame>;

/// Some X mask whose face syndrome is `phi_hat`. Throws InfeasibleSyndrome when
/// `phi_hat` is not a valid syndrome of the block.
BitVec frame_from_ancillas(const Lattice &lat, const BitVec &phi_hat);

/// The same, built layer by layer: q_i is supported on the qubits of layers <= i, has
/// syndrome phi_hat on the faces of layers <= i, and extends q_{i-1}. Returns q_1..q_n
/// (index 0 is the empty mask).
std::vector<BitVec> layered_frame_from_ancillas(const Lattice &lat, const BitVec &phi_hat);

/// Z part picked up through the logical controlled-phase gates: f_Z(q) is the parity
/// of f_X over the qubits matched to q.
std::vector<BitVec> propagate_frame(const ResourceGraph &rg, const std::vector<BitVec> &fx);

/// Two-colouring of the code qubits: qubits sharing a face-adjacent pair of tetrahedra
/// get opposite bits. Bit 0 holds qubit 0.
BitVec qubit_sublattice(const Lattice &lat);

/// Per-qubit basis for a logical X+Y or X-Y measurement. Sublattice 0 uses the logical
/// basis and sublattice 1 the other one; X in the frame swaps the two.
std::vector<MeasBasis> basis_assignment(const Lattice &lat, const BitVec &fx, MeasBasis logical);

/// Fixed representatives: logical X is the red facet operator and logical Z is an
/// X-check-commuting mask outside the span of the face checks.
BitVec logical_x_support(const Lattice &lat);
BitVec logical_z_support(const Lattice &lat);

/// Logical outcome of a transversal X or Z measurement. `outcomes` has a 1 for each
/// -1 result. The parity over the representative is corrected by the frame component
/// that flips it: f_Z for X, f_X for Z.
bool logical_outcome_pauli(const Lattice &lat, MeasBasis basis, const BitVec &outcomes, const BlockFrame &frame);

}  // namespace colorjit

#endif
