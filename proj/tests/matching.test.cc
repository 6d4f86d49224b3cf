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

#include <gtest/gtest.h>

#include <map>
#include <random>

#include "colorjit/decoders/matching.h"

using namespace colorjit;

namespace {

// Best (cardinality, weight) over all matchings, by recursion on the lowest free vertex.
std::pair<int64_t, int64_t> best_matching(
    size_t n, const std::vector<WeightedEdge> &edges, bool max_card, uint32_t used,
    std::map<uint32_t, std::pair<int64_t, int64_t>> &memo) {
    size_t v = 0;
    while (v < n && (used >> v & 1)) v++;
    if (v == n) return {0, 0};
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    auto better = [&](std::pair<int64_t, int64_t> a, std::pair<int64_t, int64_t> b) {
        if (max_card && a.first != b.first) return a.first > b.first;
        return a.second > b.second;
    };
    auto best = best_matching(n, edges, max_card, used | (1u << v), memo);
    for (const auto &e : edges) {
        uint32_t w;
        if (e.u == v) {
            w = e.v;
        } else if (e.v == v) {
            w = e.u;
        } else {
            continue;
        }
        if (used >> w & 1) continue;
        auto sub = best_matching(n, edges, max_card, used | (1u << v) | (1u << w), memo);
        sub.first += 1;
        sub.second += e.weight;
        if (better(sub, best)) best = sub;
    }
    memo[used] = best;
    return best;
}

std::pair<int64_t, int64_t> score(const std::vector<int64_t> &mate, const std::vector<WeightedEdge> &edges) {
    int64_t card = 0, weight = 0;
    for (size_t v = 0; v < mate.size(); v++) {
        if (mate[v] < 0) continue;
        EXPECT_EQ(mate[static_cast<size_t>(mate[v])], static_cast<int64_t>(v));
        if (static_cast<int64_t>(v) > mate[v]) continue;
        bool found = false;
        int64_t w = 0;
        for (const auto &e : edges) {
            if ((e.u == v && e.v == mate[v]) || (e.v == v && e.u == mate[v])) {
                if (!found || e.weight > w) w = e.weight;
                found = true;
            }
        }
        EXPECT_TRUE(found);
        card++;
        weight += w;
    }
    return {card, weight};
}

}  // namespace

TEST(matching, small_cases) {
    ASSERT_EQ(max_weight_matching(0, {}), std::vector<int64_t>{});
    ASSERT_EQ(max_weight_matching(2, {{0, 1, 1}}), (std::vector<int64_t>{1, 0}));
    // Path 0-1-2-3: the heavy middle edge wins unless cardinality is forced.
    std::vector<WeightedEdge> path{{0, 1, 5}, {1, 2, 11}, {2, 3, 5}};
    ASSERT_EQ(max_weight_matching(4, path), (std::vector<int64_t>{-1, 2, 1, -1}));
    ASSERT_EQ(max_weight_matching(4, path, true), (std::vector<int64_t>{1, 0, 3, 2}));
    // Triangle plus pendant forces a blossom.
    std::vector<WeightedEdge> tri{{0, 1, 6}, {1, 2, 6}, {0, 2, 6}, {2, 3, 7}};
    ASSERT_EQ(score(max_weight_matching(4, tri), tri).second, 13);
}

TEST(matching, random_against_enumeration) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 3000; trial++) {
        size_t n = 2 + rng() % 11;
        double density = 0.2 + 0.8 * static_cast<double>(rng() % 100) / 100.0;
        int64_t wmax = 1 + static_cast<int64_t>(rng() % (trial % 2 ? 4 : 40));
        std::vector<WeightedEdge> edges;
        for (uint32_t u = 0; u < n; u++) {
            for (uint32_t v = u + 1; v < n; v++) {
                if (static_cast<double>(rng() % 1000) / 1000.0 < density) {
                    edges.push_back({u, v, 1 + static_cast<int64_t>(rng() % static_cast<uint64_t>(wmax))});
                }
            }
        }
        for (bool card : {false, true}) {
            std::map<uint32_t, std::pair<int64_t, int64_t>> memo;
            auto want = best_matching(n, edges, card, 0, memo);
            auto got = score(max_weight_matching(n, edges, card), edges);
            if (card) {
                ASSERT_EQ(got, want) << "trial " << trial;
            } else {
                ASSERT_EQ(got.second, want.second) << "trial " << trial;
            }
        }
    }
}

TEST(matching, min_weight_perfect) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 500; trial++) {
        size_t n = 2 * (1 + rng() % 6);
        std::vector<WeightedEdge> edges;
        for (uint32_t u = 0; u < n; u++) {
            for (uint32_t v = u + 1; v < n; v++) edges.push_back({u, v, static_cast<int64_t>(rng() % 10)});
        }
        auto mate = min_weight_perfect_matching(n, edges);
        ASSERT_TRUE(mate.has_value());
        std::vector<WeightedEdge> neg(edges);
        for (auto &e : neg) e.weight = 100 - e.weight;
        std::map<uint32_t, std::pair<int64_t, int64_t>> memo;
        auto want = best_matching(n, neg, true, 0, memo);
        auto got = score(*mate, neg);
        ASSERT_EQ(got, want);
    }
    ASSERT_FALSE(min_weight_perfect_matching(3, {{0, 1, 1}, {1, 2, 1}}).has_value());
    ASSERT_FALSE(min_weight_perfect_matching(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}}).has_value());
}
