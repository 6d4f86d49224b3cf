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

#include "colorjit/gf2/bitvec.h"

#include <stdexcept>

namespace colorjit {

BitVec BitVec::from_indices(size_t num_bits, const std::vector<size_t> &indices) {
    BitVec r(num_bits);
    for (size_t i : indices) {
        if (i >= num_bits) {
            throw std::out_of_range("BitVec::from_indices index out of range");
        }
        r.flip(i);
    }
    return r;
}

BitVec BitVec::from_string(const std::string &bits) {
    std::vector<bool> v;
    for (char c : bits) {
        if (c == '0' || c == '1') v.push_back(c == '1');
    }
    BitVec r(v.size());
    for (size_t i = 0; i < v.size(); i++) r.set(i, v[i]);
    return r;
}

void BitVec::resize(size_t num_bits) {
    n_ = num_bits;
    w_.resize((num_bits + 63) / 64, 0);
    if (n_ & 63) w_.back() &= (uint64_t{1} << (n_ & 63)) - 1;
}

BitVec &BitVec::operator^=(const BitVec &o) {
    if (o.n_ != n_) throw std::invalid_argument("BitVec size mismatch");
    for (size_t k = 0; k < w_.size(); k++) w_[k] ^= o.w_[k];
    return *this;
}

BitVec &BitVec::operator&=(const BitVec &o) {
    if (o.n_ != n_) throw std::invalid_argument("BitVec size mismatch");
    for (size_t k = 0; k < w_.size(); k++) w_[k] &= o.w_[k];
    return *this;
}

BitVec &BitVec::operator|=(const BitVec &o) {
    if (o.n_ != n_) throw std::invalid_argument("BitVec size mismatch");
    for (size_t k = 0; k < w_.size(); k++) w_[k] |= o.w_[k];
    return *this;
}

BitVec &BitVec::andnot(const BitVec &o) {
    if (o.n_ != n_) throw std::invalid_argument("BitVec size mismatch");
    for (size_t k = 0; k < w_.size(); k++) w_[k] &= ~o.w_[k];
    return *this;
}

BitVec BitVec::operator~() const {
    BitVec r(n_);
    for (size_t k = 0; k < w_.size(); k++) r.w_[k] = ~w_[k];
    r.resize(n_);
    return r;
}

bool BitVec::operator<(const BitVec &o) const {
    if (n_ != o.n_) return n_ < o.n_;
    for (size_t k = w_.size(); k-- > 0;) {
        if (w_[k] != o.w_[k]) return w_[k] < o.w_[k];
    }
    return false;
}

size_t BitVec::popcount() const {
    size_t c = 0;
    for (uint64_t w : w_) c += static_cast<size_t>(std::popcount(w));
    return c;
}

bool BitVec::any() const {
    for (uint64_t w : w_) {
        if (w) return true;
    }
    return false;
}

bool BitVec::dot(const BitVec &o) const {
    uint64_t acc = 0;
    for (size_t k = 0; k < w_.size(); k++) acc ^= w_[k] & o.w_[k];
    return std::popcount(acc) & 1;
}

bool BitVec::subset_of(const BitVec &o) const {
    for (size_t k = 0; k < w_.size(); k++) {
        if (w_[k] & ~o.w_[k]) return false;
    }
    return true;
}

bool BitVec::intersects(const BitVec &o) const {
    for (size_t k = 0; k < w_.size(); k++) {
        if (w_[k] & o.w_[k]) return true;
    }
    return false;
}

size_t BitVec::first_one() const { return next_one(0); }

size_t BitVec::next_one(size_t from) const {
    if (from >= n_) return npos;
    size_t k = from >> 6;
    uint64_t w = w_[k] & (~uint64_t{0} << (from & 63));
    while (true) {
        if (w) return k * 64 + static_cast<size_t>(std::countr_zero(w));
        if (++k >= w_.size()) return npos;
        w = w_[k];
    }
}

std::vector<size_t> BitVec::ones() const {
    std::vector<size_t> r;
    for_each_one([&](size_t i) { r.push_back(i); });
    return r;
}

std::string BitVec::str() const {
    std::string s(n_, '0');
    for_each_one([&](size_t i) { s[i] = '1'; });
    return s;
}

size_t BitVecHash::operator()(const BitVec &v) const {
    uint64_t h = 0x9E3779B97F4A7C15ull ^ v.size();
    for (size_t k = 0; k < v.num_words(); k++) {
        h ^= v.words()[k] + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    }
    return static_cast<size_t>(h);
}

}  // namespace colorjit
