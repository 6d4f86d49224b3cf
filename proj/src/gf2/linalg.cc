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

#include "colorjit/gf2/linalg.h"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "colorjit/errors.h"

namespace colorjit {

void BitMatrix::push_back(BitVec row) {
    if (row.size() != cols) throw std::invalid_argument("BitMatrix row length mismatch");
    rows.push_back(std::move(row));
}

BitVec BitMatrix::apply(const BitVec &x) const {
    BitVec r(rows.size());
    for (size_t k = 0; k < rows.size(); k++) r.set(k, rows[k].dot(x));
    return r;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols, rows.size());
    for (size_t r = 0; r < rows.size(); r++) {
        rows[r].for_each_one([&](size_t c) { t.rows[c].set(r); });
    }
    return t;
}

BitVec Echelon::reduce(BitVec v, BitVec *used) const {
    for (size_t k = 0; k < rows.size(); k++) {
        if (v.get(pivots[k])) {
            v ^= rows[k];
            if (used != nullptr) *used ^= combos[k];
        }
    }
    return v;
}

Echelon row_reduce(const BitMatrix &m, bool track_combos) {
    Echelon e;
    e.cols = m.cols;
    std::vector<BitVec> work = m.rows;
    std::vector<BitVec> comb;
    if (track_combos) {
        for (size_t k = 0; k < work.size(); k++) {
            comb.push_back(BitVec(work.size()));
            comb.back().set(k);
        }
    }
    size_t r = 0;
    for (size_t c = 0; c < m.cols && r < work.size(); c++) {
        size_t p = r;
        while (p < work.size() && !work[p].get(c)) p++;
        if (p == work.size()) continue;
        std::swap(work[p], work[r]);
        if (track_combos) std::swap(comb[p], comb[r]);
        for (size_t k = 0; k < work.size(); k++) {
            if (k != r && work[k].get(c)) {
                work[k] ^= work[r];
                if (track_combos) comb[k] ^= comb[r];
            }
        }
        e.pivots.push_back(c);
        r++;
    }
    work.resize(r);
    e.rows = std::move(work);
    if (track_combos) {
        comb.resize(r);
        e.combos = std::move(comb);
    }
    return e;
}

size_t rank(const BitMatrix &m) { return row_reduce(m).rank(); }

BitMatrix kernel(const BitMatrix &m) {
    Echelon e = row_reduce(m);
    BitVec is_pivot(m.cols);
    for (size_t p : e.pivots) is_pivot.set(p);
    BitMatrix ker(0, m.cols);
    for (size_t f = 0; f < m.cols; f++) {
        if (is_pivot.get(f)) continue;
        BitVec x(m.cols);
        x.set(f);
        for (size_t k = 0; k < e.rows.size(); k++) {
            if (e.rows[k].get(f)) x.set(e.pivots[k]);
        }
        ker.push_back(std::move(x));
    }
    return ker;
}

std::optional<BitVec> solve(const BitMatrix &m, const BitVec &b) {
    if (b.size() != m.rows.size()) throw std::invalid_argument("solve: right-hand side length mismatch");
    // Augment each equation row with its right-hand side bit in the last column.
    BitMatrix aug(0, m.cols + 1);
    for (size_t k = 0; k < m.rows.size(); k++) {
        BitVec row = m.rows[k];
        row.resize(m.cols + 1);
        row.set(m.cols, b.get(k));
        aug.push_back(std::move(row));
    }
    Echelon e = row_reduce(aug);
    BitVec x(m.cols);
    for (size_t k = 0; k < e.rows.size(); k++) {
        if (e.pivots[k] == m.cols) return std::nullopt;
        x.set(e.pivots[k], e.rows[k].get(m.cols));
    }
    return x;
}

std::optional<BitVec> express_in_rows(const BitMatrix &m, const BitVec &v) {
    Echelon e = row_reduce(m, true);
    BitVec used(m.rows.size());
    BitVec residue = e.reduce(v, &used);
    if (residue.any()) return std::nullopt;
    return used;
}

BitMatrix rows_supported_on(const BitMatrix &m, const BitVec &mask) {
    BitMatrix spill = select_columns(m, ~mask).transposed();
    BitMatrix combos = kernel(spill);
    BitMatrix elements(0, m.cols);
    for (const auto &c : combos.rows) {
        BitVec e(m.cols);
        c.for_each_one([&](size_t k) { e ^= m.rows[k]; });
        elements.push_back(std::move(e));
    }
    BitMatrix basis(0, m.cols);
    basis.rows = row_reduce(elements).rows;
    return basis;
}

bool rowspace_contains(const BitMatrix &big, const BitMatrix &small) {
    Echelon e = row_reduce(big);
    for (const auto &r : small.rows) {
        if (!e.contains(r)) return false;
    }
    return true;
}

bool rowspace_equal(const BitMatrix &a, const BitMatrix &b) {
    return a.cols == b.cols && rowspace_contains(a, b) && rowspace_contains(b, a);
}

BitVec select_bits(const BitVec &v, const BitVec &mask) {
    BitVec r(mask.popcount());
    size_t j = 0;
    mask.for_each_one([&](size_t i) {
        r.set(j, v.get(i));
        j++;
    });
    return r;
}

BitVec scatter_bits(const BitVec &compact, const BitVec &mask) {
    BitVec r(mask.size());
    size_t j = 0;
    mask.for_each_one([&](size_t i) {
        r.set(i, compact.get(j));
        j++;
    });
    return r;
}

BitMatrix select_columns(const BitMatrix &m, const BitVec &mask) {
    BitMatrix r(0, mask.popcount());
    for (const auto &row : m.rows) r.push_back(select_bits(row, mask));
    return r;
}

void write_text(std::ostream &out, const BitMatrix &m) {
    out << m.rows.size() << ' ' << m.cols << '\n';
    for (const auto &r : m.rows) out << r.str() << '\n';
}

BitMatrix read_text(std::istream &in) {
    size_t nr = 0, nc = 0;
    if (!(in >> nr >> nc)) throw ParseError("matrix header");
    BitMatrix m(0, nc);
    std::string line;
    for (size_t k = 0; k < nr; k++) {
        if (!(in >> line) || line.size() != nc) throw ParseError("matrix row " + std::to_string(k));
        m.push_back(BitVec::from_string(line));
    }
    return m;
}

}  // namespace colorjit
