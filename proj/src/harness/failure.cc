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

#include "colorjit/harness/failure.h"

#include <algorithm>
#include <deque>

namespace colorjit {

FailureCriterion::FailureCriterion(const SyndromeGraph &g, int64_t min_distance)
    : g_(&g), min_distance_(min_distance), outer_index_(g.num_vertices(), -1) {
    std::vector<uint32_t> outers;
    for (uint32_t v = 0; v < g.num_vertices(); v++)
        if (g.outer[v]) {
            outer_index_[v] = static_cast<int32_t>(outers.size());
            outers.push_back(v);
        }
    dist_.assign(outers.size(), std::vector<int32_t>(outers.size(), -1));
    std::vector<int32_t> d(g.num_vertices());
    for (size_t k = 0; k < outers.size(); k++) {
        std::fill(d.begin(), d.end(), -1);
        std::deque<uint32_t> queue{outers[k]};
        d[outers[k]] = 0;
        while (!queue.empty()) {
            uint32_t v = queue.front();
            queue.pop_front();
            if (outer_index_[v] >= 0) dist_[k][outer_index_[v]] = d[v];
            // Paths run through the bulk; an outer vertex ends a path.
            if (g.outer[v] && v != outers[k]) continue;
            for (uint32_t e : g.incident[v]) {
                uint32_t w = g.other_end(e, v);
                if (d[w] < 0) {
                    d[w] = d[v] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
}

int64_t FailureCriterion::outer_distance(uint32_t a, uint32_t b) const {
    return dist_.at(outer_index_.at(a)).at(outer_index_.at(b));
}

int64_t FailureCriterion::span(const BitVec &residual) const {
    int64_t best = -1;
    for (const BitVec &comp : edge_components(*g_, residual)) {
        std::vector<uint32_t> outs;
        comp.for_each_one([&](size_t e) {
            for (uint32_t v : {g_->edges[e].u, g_->edges[e].v})
                if (outer_index_[v] >= 0) outs.push_back(v);
        });
        std::sort(outs.begin(), outs.end());
        outs.erase(std::unique(outs.begin(), outs.end()), outs.end());
        for (size_t a = 0; a < outs.size(); a++)
            for (size_t b = a + 1; b < outs.size(); b++) best = std::max(best, outer_distance(outs[a], outs[b]));
    }
    return best;
}

int64_t default_fail_distance(int size) { return 2 * int64_t{size} - 1; }

}  // namespace colorjit
