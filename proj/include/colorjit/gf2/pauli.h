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

#ifndef COLORJIT_GF2_PAULI_H
#define COLORJIT_GF2_PAULI_H

#include <functional>
#include <string>
#include <vector>

#include "colorjit/gf2/linalg.h"

namespace colorjit {

/// Pauli operator on n qubits with phases dropped.
struct PauliXZ {
    BitVec x;
    BitVec z;

    PauliXZ() = default;
    explicit PauliXZ(size_t n) : x(n), z(n) {}
    PauliXZ(BitVec xs, BitVec zs);
    static PauliXZ x_type(const BitVec &support);
    static PauliXZ z_type(const BitVec &support);
    /// Parses a string over {I,X,Y,Z,_}.
    static PauliXZ from_string(const std::string &text);

    size_t num_qubits() const { return x.size(); }
    bool commutes(const PauliXZ &o) const { return x.dot(o.z) == z.dot(o.x); }
    BitVec support() const { return x | z; }
    size_t weight() const { return support().popcount(); }
    bool is_identity() const { return x.none() && z.none(); }
    PauliXZ &operator*=(const PauliXZ &o);
    friend PauliXZ operator*(PauliXZ a, const PauliXZ &b) { return a *= b; }
    bool operator==(const PauliXZ &o) const { return x == o.x && z == o.z; }
    bool operator<(const PauliXZ &o) const { return x < o.x || (x == o.x && z < o.z); }
    /// Copy with everything outside `mask` removed.
    PauliXZ restricted(const BitVec &mask) const;
    /// Symplectic row vector (x | z) of length 2n.
    BitVec packed() const;
    static PauliXZ unpack(const BitVec &xz, size_t n);
    std::string str() const;
};

/// A list of Pauli generators on a fixed number of qubits.
struct GeneratorMatrix {
    size_t n = 0;
    std::vector<PauliXZ> rows;

    GeneratorMatrix() = default;
    explicit GeneratorMatrix(size_t num_qubits) : n(num_qubits) {}
    static GeneratorMatrix x_type(const BitMatrix &h);
    static GeneratorMatrix z_type(const BitMatrix &h);

    void push_back(PauliXZ p);
    size_t size() const { return rows.size(); }
    BitMatrix packed() const;
    static GeneratorMatrix unpack(const BitMatrix &packed, size_t n);
    size_t rank() const;
    /// Independent generators of the same group.
    GeneratorMatrix reduced() const;
    bool contains(const PauliXZ &p) const;
    /// Concatenation of the generator lists.
    GeneratorMatrix operator+(const GeneratorMatrix &o) const;
};

/// True when both generating sets generate the same group (phases ignored).
bool same_group(const GeneratorMatrix &a, const GeneratorMatrix &b);
/// True when every generator of `small` lies in the group generated by `big`.
bool group_contains(const GeneratorMatrix &big, const GeneratorMatrix &small);

/// Z(A): all Paulis commuting with every element of A.
GeneratorMatrix centralizer(const GeneratorMatrix &a);
/// Z_r(A): Paulis supported on `region` commuting with every element of A.
GeneratorMatrix centralizer_on(const GeneratorMatrix &a, const BitVec &region);
/// A||r: elements of the group generated by A whose support lies in `region`.
GeneratorMatrix support_subgroup(const GeneratorMatrix &a, const BitVec &region);
/// A|r: every generator restricted to `region`.
GeneratorMatrix restriction(const GeneratorMatrix &a, const BitVec &region);

/// X-type elements commuting with the Z-type check matrix `hz` (rows are supports).
BitMatrix x_type_centralizer(const BitMatrix &hz);

/// Conjugation by a controlled-phase gate between qubits a and b.
void conjugate_by_cz(PauliXZ &p, size_t a, size_t b);

/// Chooses among the solutions of a frame step. Receives a particular solution and a
/// basis of the free directions (both over the newly added qubits) and returns the pick.
using FreeChoice = std::function<BitVec(const BitVec &particular, const BitMatrix &free_basis)>;

/// One step of the piecewise frame construction. Finds an X-type q supported in
/// `region` whose syndrome against `z_generators` (rows given as Z supports, each
/// contained in `region`) equals `syndrome`, and that agrees with `q_prev` on
/// `prev_region`. Only the qubits of region \ prev_region are solved for.
/// Throws InfeasibleSyndrome when no such q exists.
BitVec piecewise_frame_step(const BitMatrix &z_generators, const BitVec &region, const BitVec &prev_region,
                            const BitVec &syndrome, const BitVec &q_prev, const FreeChoice &choose = {});

}  // namespace colorjit

#endif
