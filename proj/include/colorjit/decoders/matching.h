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
#include <optional>
#include <vector>

namespace colorjit {

struct WeightedEdge {
    uint32_t u;
    uint32_t v;
    int64_t weight;
};

/// Maximum-weight matching on a general graph (Edmonds' blossom algorithm with dual
/// variables, O(n^3)). With `max_cardinality` the result is a maximum-weight matching
/// among the maximum-cardinality ones. Returns mate[v], or -1 for unmatched vertices.
/// Weights must be integers; the computation is exact.
std::vector<int64_t> max_weight_matching(
    size_t num_nodes, const std::vector<WeightedEdge> &edges, bool max_cardinality = false);

/// Minimum-weight perfect matching, or nullopt when the graph has no perfect matching.
std::optional<std::vector<int64_t>> min_weight_perfect_matching(
    size_t num_nodes, const std::vector<WeightedEdge> &edges);

}  // namespace colorjit
