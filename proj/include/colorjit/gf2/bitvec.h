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

#ifndef COLORJIT_GF2_BITVEC_H
#define COLORJIT_GF2_BITVEC_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace colorjit {

/// Dense bit-packed vector over GF(2).
class BitVec {
   public:
    static constexpr size_t npos = static_cast<size_t>(-1);

    BitVec() = default;
    explicit BitVec(size_t num_bits) : n_(num_bits), w_((num_bits + 63) / 64, 0) {}

    static BitVec from_indices(size_t num_bits, const std::vector<size_t> &indices);
    /// Parses a string of '0'/'1' characters (other characters are ignored).
    static BitVec from_string(const std::string &bits);

    size_t size() const { return n_; }
    size_t num_words() const { return w_.size(); }
    const uint64_t *words() const { return w_.data(); }
    uint64_t *words() { return w_.data(); }

    bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    bool operator[](size_t i) const { return get(i); }
    void set(size_t i, bool v = true) {
        uint64_t m = uint64_t{1} << (i & 63);
        if (v) {
            w_[i >> 6] |= m;
        } else {
            w_[i >> 6] &= ~m;
        }
    }
    void flip(size_t i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }
    void clear() {
        for (auto &w : w_) w = 0;
    }
    void resize(size_t num_bits);

    BitVec &operator^=(const BitVec &o);
    BitVec &operator&=(const BitVec &o);
    BitVec &operator|=(const BitVec &o);
    /// Clears every bit that is set in `o`.
    BitVec &andnot(const BitVec &o);
    BitVec operator~() const;
    friend BitVec operator^(BitVec a, const BitVec &b) { return a ^= b; }
    friend BitVec operator&(BitVec a, const BitVec &b) { return a &= b; }
    friend BitVec operator|(BitVec a, const BitVec &b) { return a |= b; }
    bool operator==(const BitVec &o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const BitVec &o) const { return !(*this == o); }
    bool operator<(const BitVec &o) const;

    size_t popcount() const;
    bool any() const;
    bool none() const { return !any(); }
    /// Parity of the bitwise AND.
    bool dot(const BitVec &o) const;
    /// True when every set bit of this vector is also set in `o`.
    bool subset_of(const BitVec &o) const;
    bool intersects(const BitVec &o) const;
    size_t first_one() const;
    size_t next_one(size_t from) const;
    std::vector<size_t> ones() const;

    template <typename F>
    void for_each_one(F &&f) const {
        for (size_t k = 0; k < w_.size(); k++) {
            uint64_t w = w_[k];
            while (w) {
                f(k * 64 + static_cast<size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::string str() const;

   private:
    size_t n_ = 0;
    std::vector<uint64_t> w_;
};

struct BitVecHash {
    size_t operator()(const BitVec &v) const;
};

}  // namespace colorjit

#endif
