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

#ifndef COLORJIT_GF2_LINALG_H
#define COLORJIT_GF2_LINALG_H

#include <iosfwd>
#include <optional>
#include <vector>

#include "colorjit/gf2/bitvec.h"

namespace colorjit {

/// Row-major matrix over GF(2). Each row is a BitVec of length `cols`.
struct BitMatrix {
    size_t cols = 0;
    std::vector<BitVec> rows;

    BitMatrix() = default;
    BitMatrix(size_t num_rows, size_t num_cols) : cols(num_cols), rows(num_rows, BitVec(num_cols)) {}

    size_t num_rows() const { return rows.size(); }
    void push_back(BitVec row);
    BitVec apply(const BitVec &x) const;
    BitMatrix transposed() const;
    bool operator==(const BitMatrix &o) const { return cols == o.cols && rows == o.rows; }
};

/// Reduced row echelon form. `combos[k]` records which input rows sum to `rows[k]`
/// when tracking is requested.
struct Echelon {
    size_t cols = 0;
    std::vector<BitVec> rows;
    std::vector<size_t> pivots;
    std::vector<BitVec> combos;

    size_t rank() const { return rows.size(); }
    /// Reduces `v` against the echelon rows. Returns the residue; `used` (if given)
    /// receives the combination of input rows that was subtracted.
    BitVec reduce(BitVec v, BitVec *used = nullptr) const;
    bool contains(const BitVec &v) const { return reduce(v).none(); }
};

Echelon row_reduce(const BitMatrix &m, bool track_combos = false);
size_t rank(const BitMatrix &m);

/// Basis of {x : m x = 0}.
BitMatrix kernel(const BitMatrix &m);

/// Some x with m x = b, free variables set to zero. Empty when inconsistent.
std::optional<BitVec> solve(const BitMatrix &m, const BitVec &b);

/// Coefficients c with sum_k c_k m.rows[k] = v. Empty when v is not in the row space.
std::optional<BitVec> express_in_rows(const BitMatrix &m, const BitVec &v);

/// Basis of the rows of the row space of `m` whose support lies inside `mask`.
BitMatrix rows_supported_on(const BitMatrix &m, const BitVec &mask);

bool rowspace_contains(const BitMatrix &big, const BitMatrix &small);
bool rowspace_equal(const BitMatrix &a, const BitMatrix &b);

/// Restricts every row to the columns selected by `mask`, renumbered in order.
BitMatrix select_columns(const BitMatrix &m, const BitVec &mask);
BitVec select_bits(const BitVec &v, const BitVec &mask);
/// Inverse of select_bits: scatters a compact vector back onto the positions of `mask`.
BitVec scatter_bits(const BitVec &compact, const BitVec &mask);

/// Plain-text dump: one line per row of '0'/'1', preceded by "rows cols".
void write_text(std::ostream &out, const BitMatrix &m);
BitMatrix read_text(std::istream &in);

}  // namespace colorjit

#endif
