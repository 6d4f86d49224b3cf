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

#include "colorjit/gf2/pauli.h"

#include <stdexcept>

#include "colorjit/errors.h"

namespace colorjit {

PauliXZ::PauliXZ(BitVec xs, BitVec zs) : x(std::move(xs)), z(std::move(zs)) {
    if (x.size() != z.size()) throw std::invalid_argument("PauliXZ: x and z lengths differ");
}

PauliXZ PauliXZ::x_type(const BitVec &support) { return PauliXZ(support, BitVec(support.size())); }

PauliXZ PauliXZ::z_type(const BitVec &support) { return PauliXZ(BitVec(support.size()), support); }

PauliXZ PauliXZ::from_string(const std::string &text) {
    PauliXZ p(text.size());
    for (size_t k = 0; k < text.size(); k++) {
        switch (text[k]) {
            case 'X':
                p.x.set(k);
                break;
            case 'Z':
                p.z.set(k);
                break;
            case 'Y':
                p.x.set(k);
                p.z.set(k);
                break;
            case 'I':
            case '_':
                break;
            default:
                throw ParseError(std::string("unknown Pauli character '") + text[k] + "'");
        }
    }
    return p;
}

PauliXZ &PauliXZ::operator*=(const PauliXZ &o) {
    x ^= o.x;
    z ^= o.z;
    return *this;
}

PauliXZ PauliXZ::restricted(const BitVec &mask) const { return PauliXZ(x & mask, z & mask); }

BitVec PauliXZ::packed() const {
    size_t n = x.size();
    BitVec r(2 * n);
    x.for_each_one([&](size_t i) { r.set(i); });
    z.for_each_one([&](size_t i) { r.set(n + i); });
    return r;
}

PauliXZ PauliXZ::unpack(const BitVec &xz, size_t n) {
    PauliXZ p(n);
    xz.for_each_one([&](size_t i) {
        if (i < n) {
            p.x.set(i);
        } else {
            p.z.set(i - n);
        }
    });
    return p;
}

std::string PauliXZ::str() const {
    std::string s(x.size(), '_');
    for (size_t k = 0; k < x.size(); k++) {
        bool a = x.get(k), b = z.get(k);
        s[k] = a ? (b ? 'Y' : 'X') : (b ? 'Z' : '_');
    }
    return s;
}

GeneratorMatrix GeneratorMatrix::x_type(const BitMatrix &h) {
    GeneratorMatrix g(h.cols);
    for (const auto &r : h.rows) g.push_back(PauliXZ::x_type(r));
    return g;
}

GeneratorMatrix GeneratorMatrix::z_type(const BitMatrix &h) {
    GeneratorMatrix g(h.cols);
    for (const auto &r : h.rows) g.push_back(PauliXZ::z_type(r));
    return g;
}

void GeneratorMatrix::push_back(PauliXZ p) {
    if (p.num_qubits() != n) throw std::invalid_argument("GeneratorMatrix: qubit count mismatch");
    rows.push_back(std::move(p));
}

BitMatrix GeneratorMatrix::packed() const {
    BitMatrix m(0, 2 * n);
    for (const auto &p : rows) m.push_back(p.packed());
    return m;
}

GeneratorMatrix GeneratorMatrix::unpack(const BitMatrix &packed, size_t n) {
    GeneratorMatrix g(n);
    for (const auto &r : packed.rows) g.push_back(PauliXZ::unpack(r, n));
    return g;
}

size_t GeneratorMatrix::rank() const { return colorjit::rank(packed()); }

GeneratorMatrix GeneratorMatrix::reduced() const {
    Echelon e = row_reduce(packed());
    GeneratorMatrix g(n);
    for (const auto &r : e.rows) g.push_back(PauliXZ::unpack(r, n));
    return g;
}

bool GeneratorMatrix::contains(const PauliXZ &p) const { return row_reduce(packed()).contains(p.packed()); }

GeneratorMatrix GeneratorMatrix::operator+(const GeneratorMatrix &o) const {
    if (o.n != n) throw std::invalid_argument("GeneratorMatrix: qubit count mismatch");
    GeneratorMatrix g = *this;
    for (const auto &p : o.rows) g.rows.push_back(p);
    return g;
}

bool same_group(const GeneratorMatrix &a, const GeneratorMatrix &b) {
    return a.n == b.n && rowspace_equal(a.packed(), b.packed());
}

bool group_contains(const GeneratorMatrix &big, const GeneratorMatrix &small) {
    return big.n == small.n && rowspace_contains(big.packed(), small.packed());
}

namespace {

// Rows (a.z | a.x) restricted to `region`, so that row . (p.x | p.z) is the
// symplectic product with a Pauli p supported on `region`.
BitMatrix commutation_rows(const GeneratorMatrix &a, const BitVec &region) {
    size_t m = region.popcount();
    BitMatrix rows(0, 2 * m);
    for (const auto &p : a.rows) {
        BitVec zr = select_bits(p.z, region);
        BitVec xr = select_bits(p.x, region);
        BitVec row(2 * m);
        zr.for_each_one([&](size_t i) { row.set(i); });
        xr.for_each_one([&](size_t i) { row.set(m + i); });
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

GeneratorMatrix centralizer_on(const GeneratorMatrix &a, const BitVec &region) {
    if (region.size() != a.n) throw std::invalid_argument("centralizer_on: region length mismatch");
    size_t m = region.popcount();
    BitMatrix ker = kernel(commutation_rows(a, region));
    GeneratorMatrix g(a.n);
    for (const auto &v : ker.rows) {
        PauliXZ c = PauliXZ::unpack(v, m);
        g.push_back(PauliXZ(scatter_bits(c.x, region), scatter_bits(c.z, region)));
    }
    return g;
}

GeneratorMatrix centralizer(const GeneratorMatrix &a) { return centralizer_on(a, ~BitVec(a.n)); }

GeneratorMatrix support_subgroup(const GeneratorMatrix &a, const BitVec &region) {
    if (region.size() != a.n) throw std::invalid_argument("support_subgroup: region length mismatch");
    BitVec outside = ~region;
    size_t m = outside.popcount();
    // Column k of `spill` is generator k restricted to the complement; its kernel
    // lists the combinations that vanish outside the region.
    BitMatrix gens_out(0, 2 * m);
    for (const auto &p : a.rows) {
        BitVec r(2 * m);
        select_bits(p.x, outside).for_each_one([&](size_t i) { r.set(i); });
        select_bits(p.z, outside).for_each_one([&](size_t i) { r.set(m + i); });
        gens_out.push_back(std::move(r));
    }
    BitMatrix spill = gens_out.transposed();
    BitMatrix combos = kernel(spill);
    BitMatrix elements(0, 2 * a.n);
    for (const auto &c : combos.rows) {
        PauliXZ e(a.n);
        c.for_each_one([&](size_t k) { e *= a.rows[k]; });
        elements.push_back(e.packed());
    }
    BitMatrix basis(0, 2 * a.n);
    basis.rows = row_reduce(elements).rows;
    return GeneratorMatrix::unpack(basis, a.n);
}

GeneratorMatrix restriction(const GeneratorMatrix &a, const BitVec &region) {
    GeneratorMatrix g(a.n);
    for (const auto &p : a.rows) g.push_back(p.restricted(region));
    return g;
}

BitMatrix x_type_centralizer(const BitMatrix &hz) { return kernel(hz); }

void conjugate_by_cz(PauliXZ &p, size_t a, size_t b) {
    bool xa = p.x.get(a), xb = p.x.get(b);
    if (xa) p.z.flip(b);
    if (xb) p.z.flip(a);
}

BitVec piecewise_frame_step(const BitMatrix &z_generators, const BitVec &region, const BitVec &prev_region,
                            const BitVec &syndrome, const BitVec &q_prev, const FreeChoice &choose) {
    size_t n = region.size();
    if (prev_region.size() != n || q_prev.size() != n || z_generators.cols != n) {
        throw std::invalid_argument("piecewise_frame_step: length mismatch");
    }
    if (syndrome.size() != z_generators.rows.size()) {
        throw std::invalid_argument("piecewise_frame_step: syndrome length mismatch");
    }
    if (!prev_region.subset_of(region)) throw std::invalid_argument("piecewise_frame_step: regions not nested");
    if (!q_prev.subset_of(prev_region)) throw std::invalid_argument("piecewise_frame_step: q_prev leaves its region");
    for (const auto &g : z_generators.rows) {
        if (!g.subset_of(region)) throw std::invalid_argument("piecewise_frame_step: generator leaves the region");
    }
    BitVec fresh = region;
    fresh.andnot(prev_region);
    // Equations over the fresh qubits: g|fresh . x = syndrome(g) + g . q_prev.
    BitMatrix eqs = select_columns(z_generators, fresh);
    BitVec rhs = syndrome ^ z_generators.apply(q_prev);
    auto x = solve(eqs, rhs);
    if (!x) throw InfeasibleSyndrome("no extension of the previous frame matches the layer syndrome");
    BitVec pick = *x;
    if (choose) {
        BitMatrix free_basis = kernel(eqs);
        pick = choose(*x, free_basis);
        if (pick.size() != x->size() || eqs.apply(pick) != rhs) {
            throw InfeasibleSyndrome("free-component hook returned a non-solution");
        }
    }
    return q_prev ^ scatter_bits(pick, fresh);
}

}  // namespace colorjit
