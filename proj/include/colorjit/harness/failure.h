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

#ifndef COLORJIT_HARNESS_FAILURE_H
#define COLORJIT_HARNESS_FAILURE_H

#include <cstdint>
#include <vector>

#include "colorjit/decoders/graph.h"

namespace colorjit {

/// Logical failure of a decoded run: the residual chain E + E' (true error plus the
/// decoder's correction) connects two outer vertices at graph distance at least
/// `min_distance`. Distances are hop counts in the full syndrome graph.
class FailureCriterion {
   public:
    FailureCriterion(const SyndromeGraph &g, int64_t min_distance);

    int64_t min_distance() const { return min_distance_; }
    /// Hop distance between two outer vertices; -1 when disconnected.
    int64_t outer_distance(uint32_t a, uint32_t b) const;
    /// Largest outer-vertex distance spanned by a single component of `residual`, or
    /// -1 when no component touches two outer vertices.
    int64_t span(const BitVec &residual) const;
    bool fails(const BitVec &residual) const { return span(residual) >= min_distance_; }

   private:
    const SyndromeGraph *g_;
    int64_t min_distance_;
    std::vector<int32_t> outer_index_;        // per vertex, -1 for inner
    std::vector<std::vector<int32_t>> dist_;  // between outer vertices
};

/// Failure distance used for a block of the given size when none is configured.
int64_t default_fail_distance(int size);

}  // namespace colorjit

#endif
