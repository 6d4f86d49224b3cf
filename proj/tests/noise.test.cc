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

#include <cmath>
#include <random>
#include <sstream>

#include "colorjit/noise/noise.h"

using namespace colorjit;

namespace {

// L x L x L cubic grid, vertex (x, y, z) -> x + L(y + L z).
SyndromeGraph cubic(int L) {
    SyndromeGraph g;
    for (int k = 0; k < L * L * L; k++) g.add_vertex(false);
    auto id = [&](int x, int y, int z) { return static_cast<uint32_t>(x + L * (y + L * z)); };
    for (int z = 0; z < L; z++) {
        for (int y = 0; y < L; y++) {
            for (int x = 0; x < L; x++) {
                if (x + 1 < L) g.add_edge(id(x, y, z), id(x + 1, y, z));
                if (y + 1 < L) g.add_edge(id(x, y, z), id(x, y + 1, z));
                if (z + 1 < L) g.add_edge(id(x, y, z), id(x, y, z + 1));
            }
        }
    }
    return g;
}

// Counts connected edge sets with v as a vertex by checking every subset of nearby edges.
std::vector<uint64_t> brute_alpha(const SyndromeGraph &g, uint32_t v, int n_max) {
    std::vector<int> dist = graph_distances(g, v);
    std::vector<uint32_t> near;
    for (uint32_t e = 0; e < g.num_edges(); e++) {
        if (std::min(dist[g.edges[e].u], dist[g.edges[e].v]) < n_max) near.push_back(e);
    }
    std::vector<uint64_t> counts(static_cast<size_t>(n_max) + 1, 0);
    counts[0] = 1;
    std::vector<uint32_t> pick;
    auto check = [&]() {
        BitVec s(g.num_edges());
        bool has_v = false;
        for (uint32_t e : pick) {
            s.set(e);
            has_v |= g.edges[e].u == v || g.edges[e].v == v;
        }
        if (has_v && edge_components(g, s).size() == 1) counts[pick.size()]++;
    };
    auto rec = [&](auto &&self, size_t start) -> void {
        if (!pick.empty()) check();
        if (static_cast<int>(pick.size()) == n_max) return;
        for (size_t k = start; k < near.size(); k++) {
            pick.push_back(near[k]);
            self(self, k + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return counts;
}

SyndromeGraph path(int n) {
    SyndromeGraph g;
    for (int k = 0; k <= n; k++) g.add_vertex(false);
    for (int k = 0; k < n; k++) g.add_edge(static_cast<uint32_t>(k), static_cast<uint32_t>(k + 1));
    return g;
}

}  // namespace

TEST(sample_iid, extremes_and_seeding) {
    ASSERT_TRUE(sample_iid(0.0, 100, 1).omega.none());
    ASSERT_EQ(sample_iid(1.0, 100, 1).omega.popcount(), 100u);
    ASSERT_EQ(sample_iid(0.3, 100, 9).omega, sample_iid(0.3, 100, 9).omega);
    EXPECT_THROW(sample_iid(1.5, 10, 1), std::invalid_argument);
}

TEST(sample_iid, inclusion_frequencies) {
    std::mt19937_64 rng(11);
    const double p = 0.3;
    const int trials = 100000;
    std::vector<std::vector<size_t>> qs{{0}, {3, 7}, {1, 2, 9}};
    std::vector<int> hits(qs.size(), 0);
    for (int t = 0; t < trials; t++) {
        BitVec w = sample_iid(p, 10, rng);
        for (size_t k = 0; k < qs.size(); k++) {
            bool all = true;
            for (size_t e : qs[k]) all &= w.get(e);
            hits[k] += all;
        }
    }
    for (size_t k = 0; k < qs.size(); k++) {
        double want = std::pow(p, static_cast<double>(qs[k].size()));
        double se = std::sqrt(want * (1 - want) / trials);
        EXPECT_NEAR(static_cast<double>(hits[k]) / trials, want, 4 * se) << "|Q| = " << qs[k].size();
    }
}

TEST(balls, induced_edges) {
    SyndromeGraph g = path(6);
    ASSERT_EQ(ball_edges(g, {3, 1}), BitVec::from_indices(6, {2, 3}));
    ASSERT_EQ(ball_edges(g, {0, 2}), BitVec::from_indices(6, {0, 1}));
    ASSERT_EQ(total_radius({{0, 2}, {3, 5}}), 7);
    EXPECT_THROW(ball_edges(g, {0, 0}), std::invalid_argument);
}

TEST(spherify, examples) {
    SyndromeGraph g = path(10);
    ASSERT_TRUE(spherify(g, {}).balls.empty());
    BitVec k = BitVec::from_indices(10, {4, 5, 6});
    Spherification s = spherify(g, {k});
    ASSERT_EQ(s.balls.size(), 1u);
    ASSERT_EQ(s.balls[0].radius, 6);
    ASSERT_TRUE(s.balls[0].center >= 4 && s.balls[0].center <= 7);
    EXPECT_THROW(spherify(g, {BitVec::from_indices(10, {0, 5})}), std::invalid_argument);
}

TEST(spherify, covering_and_disjointness) {
    std::mt19937_64 rng(12);
    SyndromeGraph g = cubic(6);
    for (int t = 0; t < 300; t++) {
        // Random connected sets grown from random vertices.
        std::vector<BitVec> K;
        for (int k = 0; k < 1 + static_cast<int>(rng() % 6); k++) {
            BitVec s(g.num_edges());
            uint32_t v = static_cast<uint32_t>(rng() % g.num_vertices());
            std::vector<uint32_t> verts{v};
            for (int n = 0; n < 1 + static_cast<int>(rng() % 5); n++) {
                uint32_t x = verts[rng() % verts.size()];
                uint32_t e = g.incident[x][rng() % g.incident[x].size()];
                s.set(e);
                verts.push_back(g.other_end(e, x));
            }
            K.push_back(s);
        }
        Spherification sp = spherify(g, K);
        BitVec all(g.num_edges());
        for (const BitVec &k : K) all |= k;
        ASSERT_TRUE(all.subset_of(ball_union(g, sp.balls)));
        for (size_t a = 0; a < sp.chosen.size(); a++) {
            ASSERT_EQ(sp.balls[a].radius, 2 * static_cast<int>(K[sp.chosen[a]].popcount()));
            for (size_t b = a + 1; b < sp.chosen.size(); b++) ASSERT_FALSE(K[sp.chosen[a]].intersects(K[sp.chosen[b]]));
        }
    }
}

TEST(aggregate, examples_and_containment) {
    SyndromeGraph g = path(30);
    ASSERT_TRUE(aggregate(g, {}).empty());
    auto two = aggregate(g, {{3, 2}, {25, 2}});
    ASSERT_EQ(two.size(), 2u);
    auto one = aggregate(g, {{10, 2}, {13, 2}});
    ASSERT_EQ(one.size(), 1u);
    ASSERT_EQ(one[0].ball.radius, 7);
    ASSERT_EQ(one[0].members.size(), 2u);

    std::mt19937_64 rng(13);
    SyndromeGraph c = cubic(7);
    for (int t = 0; t < 300; t++) {
        std::vector<Ball> W;
        for (int k = 0; k < 1 + static_cast<int>(rng() % 5); k++) {
            W.push_back({static_cast<uint32_t>(rng() % c.num_vertices()), 1 + static_cast<int>(rng() % 2)});
        }
        auto A = aggregate(c, W);
        BitVec covered(c.num_edges());
        for (const auto &a : A) {
            ASSERT_TRUE(a.component.subset_of(ball_edges(c, a.ball)));
            covered |= a.component;
        }
        ASSERT_EQ(covered, ball_union(c, W));
    }
}

TEST(tail, constants_and_empty_runs) {
    ASSERT_DOUBLE_EQ(spherification_p0(2, 1), 0.25);
    std::vector<std::vector<Ball>> runs(100);
    TailReport rep = tail_estimate(runs, 10, 0.0, 1, 2, 4);
    ASSERT_EQ(rep.rows.size(), 4u);
    for (const auto &r : rep.rows) {
        ASSERT_EQ(r.count, 0u);
        ASSERT_FALSE(r.violated);
    }
    std::ostringstream csv;
    write_tail_csv(csv, rep);
    ASSERT_EQ(csv.str().substr(0, 6), "radius");
}

TEST(tail, frequency_falls_with_radius) {
    std::mt19937_64 rng(14);
    SyndromeGraph g = cubic(8);
    std::vector<std::vector<Ball>> runs;
    for (int t = 0; t < 4000; t++) {
        BitVec w = sample_iid(0.03, g.num_edges(), rng);
        runs.push_back(spherify(g, edge_components(g, w)).balls);
    }
    TailReport rep = tail_estimate(runs, g.num_vertices(), 0.03, 1, 6, 6);
    std::vector<double> xs, ys;
    for (const auto &r : rep.rows) {
        if (r.count > 0) {
            xs.push_back(r.radius);
            ys.push_back(std::log(r.mean_frequency));
        }
    }
    ASSERT_GE(xs.size(), 3u);
    double mx = 0, my = 0;
    for (size_t k = 0; k < xs.size(); k++) {
        mx += xs[k];
        my += ys[k];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(xs.size());
    double sxy = 0, sxx = 0;
    for (size_t k = 0; k < xs.size(); k++) {
        sxy += (xs[k] - mx) * (ys[k] - my);
        sxx += (xs[k] - mx) * (xs[k] - mx);
    }
    ASSERT_LT(sxy / sxx, 0);
}

TEST(enumerate_alpha, cubic_fixture) {
    SyndromeGraph g = cubic(9);
    uint32_t centre = 4 + 9 * (4 + 9 * 4);
    AlphaReport rep = enumerate_alpha(g, centre, 4);
    ASSERT_EQ(rep.counts[0], 1u);
    ASSERT_EQ(rep.counts[1], 6u);
    ASSERT_FALSE(rep.partial);
    auto brute = brute_alpha(g, centre, 3);
    for (int n = 0; n <= 3; n++) ASSERT_EQ(rep.counts[static_cast<size_t>(n)], brute[static_cast<size_t>(n)]);
    for (int n = 1; n <= 4; n++) {
        ASSERT_GT(rep.counts[static_cast<size_t>(n)], rep.counts[static_cast<size_t>(n - 1)]);
        ASSERT_LE(static_cast<double>(rep.counts[static_cast<size_t>(n)]), std::pow(rep.alpha, n) * (1 + 1e-9));
    }
    AlphaReport cut = enumerate_alpha(g, centre, 6, 1000);
    ASSERT_TRUE(cut.partial);
    EXPECT_THROW(enumerate_alpha(g, centre, 7), std::invalid_argument);
}

TEST(enumerate_alpha, colex_graph_matches_brute_force) {
    Lattice lat = build_lattice(Family::Slab, 3);
    SyndromeGraph g = SyndromeGraph::from_lattice(lat);
    uint32_t v = 0;
    for (uint32_t c = 0; c < lat.num_cells(); c++) {
        if (g.incident[c].size() > g.incident[v].size()) v = c;
    }
    AlphaReport rep = enumerate_alpha(g, v, 3);
    ASSERT_EQ(rep.counts[1], g.incident[v].size());
    auto brute = brute_alpha(g, v, 3);
    for (int n = 0; n <= 3; n++) ASSERT_EQ(rep.counts[static_cast<size_t>(n)], brute[static_cast<size_t>(n)]);
}
