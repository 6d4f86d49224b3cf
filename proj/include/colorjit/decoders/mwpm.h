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

#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "colorjit/decoders/graph.h"

namespace colorjit {

/// Part of a syndrome graph a decoder works on: an edge subset plus the vertices that
/// absorb charge. Outer vertices of the graph should be absorbing.
struct SubgraphView {
    BitVec edges;
    std::vector<bool> absorbing;

    static SubgraphView full(const SyndromeGraph &g);
};

/// Minimum-weight decoder: shortest-path tables between the view's inner vertices plus
/// an exact minimum-weight perfect matching on the defects and their boundary partners.
/// Tables are built once in the constructor; decoding is const and thread-safe.
class MatchingDecoder {
   public:
    static constexpr int64_t UNREACHABLE = std::numeric_limits<int64_t>::max() / 4;

    explicit MatchingDecoder(const SyndromeGraph &g);
    MatchingDecoder(const SyndromeGraph &g, SubgraphView view);

    const SyndromeGraph &graph() const { return *g_; }
    const SubgraphView &view() const { return view_; }

    /// Defects of a chain as seen by this view (odd incidence, not absorbing).
    std::vector<uint32_t> defects_of(const BitVec &chain) const;
    /// Minimum-weight chain in the view whose defects are `defects`. Throws NoMatch.
    BitVec decode(const std::vector<uint32_t> &defects) const;
    /// Correction for the defects of `chain`.
    BitVec correction(const BitVec &chain) const { return decode(defects_of(chain)); }

    int64_t distance(uint32_t u, uint32_t v) const;
    int64_t boundary_distance(uint32_t v) const;

   private:
    const SyndromeGraph *g_;
    SubgraphView view_;
    std::vector<int64_t> slot_;  // vertex -> row of the tables, -1 when not a source
    std::vector<std::vector<int64_t>> dist_;
    std::vector<std::vector<int64_t>> pred_;
    std::vector<int64_t> boundary_;  // nearest absorbing vertex per row
    void add_path(size_t row, uint32_t target, BitVec &out) const;
};

/// Decoder on the full graph.
BitVec mwpm_decode(const SyndromeGraph &g, const std::vector<uint32_t> &defects);

/// Exact oracle. Enumerates every edge subset of the view when it has at most 24 edges;
/// otherwise minimises over all pairings of at most 12 defects using exact distances.
BitVec bruteforce_decode(const SyndromeGraph &g, const std::vector<uint32_t> &defects);
BitVec bruteforce_decode(const SyndromeGraph &g, const SubgraphView &view, const std::vector<uint32_t> &defects);

}  // namespace colorjit
