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

#include <fstream>
#include <random>

#include "colorjit/decoders/instance.h"
#include "colorjit/decoders/layered.h"
#include "colorjit/decoders/mwpm.h"
#include "colorjit/errors.h"

using namespace colorjit;

namespace {

// outer - a - b - c - d - outer
SyndromeGraph path_graph() {
    SyndromeGraph g;
    uint32_t o0 = g.add_vertex(true);
    uint32_t a = g.add_vertex(false), b = g.add_vertex(false), c = g.add_vertex(false), d = g.add_vertex(false);
    uint32_t o1 = g.add_vertex(true);
    g.add_edge(o0, a);
    g.add_edge(a, b);
    g.add_edge(b, c);
    g.add_edge(c, d);
    g.add_edge(d, o1);
    return g;
}

BitVec random_subset(size_t n, double p, std::mt19937_64 &rng) {
    std::bernoulli_distribution coin(p);
    BitVec out(n);
    for (size_t k = 0; k < n; k++) out.set(k, coin(rng));
    return out;
}

BitVec random_codeword(const Lattice &lat, std::mt19937_64 &rng, int count) {
    BitVec out(lat.num_faces());
    for (int k = 0; k < count; k++) {
        const DualTriangle &t = lat.triangles[rng() % lat.triangles.size()];
        for (uint32_t e : t.e) {
            if (e < lat.num_faces()) out.flip(e);
        }
    }
    return out;
}

// Random error with a bounded number of defects on the full graph.
BitVec random_error_with_defects(const SyndromeGraph &g, std::mt19937_64 &rng, size_t max_defects) {
    while (true) {
        BitVec w = random_subset(g.num_edges(), 0.01 + 0.04 * static_cast<double>(rng() % 4), rng);
        if (syndrome_of(g, w).size() <= max_defects) return w;
    }
}

}  // namespace

TEST(syndrome_graph, syndrome_of) {
    SyndromeGraph g = path_graph();
    ASSERT_TRUE(syndrome_of(g, BitVec(5)).empty());
    ASSERT_EQ(syndrome_of(g, BitVec::from_indices(5, {2})), (std::vector<uint32_t>{2, 3}));
    ASSERT_EQ(syndrome_of(g, BitVec::from_indices(5, {0})), (std::vector<uint32_t>{1}));
    // The whole path runs between outer vertices: a codeword.
    ASSERT_TRUE(syndrome_of(g, ~BitVec(5)).empty());
}

TEST(syndrome_graph, lattice_picture) {
    Lattice lat = build_lattice(Family::Slab, 3);
    SyndromeGraph g = SyndromeGraph::from_lattice(lat);
    ASSERT_EQ(g.num_edges(), lat.num_faces());
    size_t leaves = 0;
    for (uint32_t e = 0; e < lat.num_faces(); e++) {
        bool to_facet = lat.is_outer(lat.edges[e].u) || lat.is_outer(lat.edges[e].v);
        leaves += to_facet;
        uint32_t far = g.edges[e].v;
        ASSERT_EQ(g.outer[far], to_facet);
        if (to_facet) ASSERT_EQ(g.incident[far].size(), 1u);
    }
    ASSERT_EQ(g.num_vertices(), lat.num_cells() + leaves);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 50; t++) ASSERT_TRUE(syndrome_of(g, random_codeword(lat, rng, 5)).empty());
}

TEST(bruteforce, examples) {
    SyndromeGraph g = path_graph();
    ASSERT_TRUE(bruteforce_decode(g, {}).none());
    ASSERT_EQ(bruteforce_decode(g, {2, 3}), BitVec::from_indices(5, {2}));
    ASSERT_EQ(bruteforce_decode(g, {1, 2}), BitVec::from_indices(5, {1}));
    ASSERT_EQ(mwpm_decode(g, {2, 3}), BitVec::from_indices(5, {2}));
    ASSERT_EQ(mwpm_decode(g, {1}), BitVec::from_indices(5, {0}));

    SyndromeGraph closed;
    for (int k = 0; k < 3; k++) closed.add_vertex(false);
    closed.add_edge(0, 1);
    closed.add_edge(1, 2);
    EXPECT_THROW(bruteforce_decode(closed, {0}), NoMatch);
    EXPECT_THROW(mwpm_decode(closed, {0}), NoMatch);
    ASSERT_EQ(mwpm_decode(closed, {0, 2}).popcount(), 2u);
}

TEST(mwpm, oracle_equivalence_small_graphs) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; trial++) {
        SyndromeGraph g;
        size_t n = 3 + rng() % 8;
        for (size_t v = 0; v < n; v++) g.add_vertex(rng() % 4 == 0);
        size_t m = 1 + rng() % 20;
        for (size_t k = 0; k < m; k++) {
            uint32_t u = static_cast<uint32_t>(rng() % n), v = static_cast<uint32_t>(rng() % n);
            if (u != v) g.add_edge(u, v, 1 + static_cast<int64_t>(rng() % 3));
        }
        BitVec w = random_subset(g.num_edges(), 0.3, rng);
        auto sigma = syndrome_of(g, w);
        BitVec a = mwpm_decode(g, sigma), b = bruteforce_decode(g, sigma);
        ASSERT_EQ(chain_weight(g, a), chain_weight(g, b)) << "trial " << trial;
        ASSERT_EQ(syndrome_of(g, a), sigma);
        ASSERT_EQ(syndrome_of(g, b), sigma);
    }
}

TEST(mwpm, oracle_equivalence_lattices) {
    std::mt19937_64 rng(6);
    double worst = 0;
    for (int d : {2, 3, 4}) {
        Lattice lat = build_lattice(Family::Slab, d);
        SyndromeGraph g = SyndromeGraph::from_lattice(lat);
        MatchingDecoder dec(g);
        for (int t = 0; t < 100; t++) {
            BitVec w = random_error_with_defects(g, rng, 8);
            auto sigma = syndrome_of(g, w);
            BitVec a = dec.decode(sigma), b = bruteforce_decode(g, sigma);
            ASSERT_EQ(chain_weight(g, a), chain_weight(g, b));
            ASSERT_EQ(syndrome_of(g, a), sigma);
            ASSERT_LE(a.popcount(), w.popcount());
            double r = minimization_ratio(g, w, a);
            ASSERT_LE(r, 2.0);
            worst = std::max(worst, r);
        }
    }
    ASSERT_GT(worst, 1.0);
}

TEST(mwpm, correction_depends_on_syndrome_only) {
    std::mt19937_64 rng(7);
    Lattice lat = build_lattice(Family::Slab, 3);
    SyndromeGraph g = SyndromeGraph::from_lattice(lat);
    // Random weights make the optimum unique with high probability.
    for (auto &w : g.weights) w = 1000 + static_cast<int64_t>(rng() % 1000);
    MatchingDecoder dec(g);
    for (int t = 0; t < 100; t++) {
        BitVec w = random_subset(g.num_edges(), 0.03, rng);
        BitVec phi = random_codeword(lat, rng, 1 + static_cast<int>(rng() % 4));
        BitVec e1 = dec.correction(w), e2 = dec.correction(w ^ phi);
        ASSERT_EQ(e1, e2);
        ASSERT_EQ((w ^ phi) ^ e2, (w ^ e1) ^ phi);
    }
}

TEST(layered, open_and_closed_match_restricted_oracles) {
    std::mt19937_64 rng(8);
    for (Family f : {Family::Slab, Family::Wedge}) {
        Lattice lat = build_lattice(f, 3);
        LayeredDecoders ld(lat);
        const SyndromeGraph &g = ld.graph();
        int n = ld.num_layers();
        for (int i = 0; i <= n; i++) {
            for (int t = 0; t < 20; t++) {
                BitVec w = random_subset(g.num_edges(), 0.04, rng);
                BitVec wp = w & ld.past(i), wf = w & ld.future(i);
                if (ld.open(i).defects_of(wp).size() <= 10) {
                    BitVec c = ld.open_correction(i, wp);
                    ASSERT_TRUE(c.subset_of(ld.past(i)));
                    ASSERT_TRUE(ld.open(i).defects_of(wp ^ c).empty());
                    BitVec o = bruteforce_decode(g, ld.open(i).view(), ld.open(i).defects_of(wp));
                    ASSERT_EQ(chain_weight(g, c), chain_weight(g, o));
                }
                if (syndrome_of(g, wf).size() <= 10) {
                    BitVec out = ld.closed_decoder(i, wf);
                    ASSERT_TRUE(out.subset_of(ld.future(i)));
                    ASSERT_TRUE(syndrome_of(g, out).empty());
                    BitVec o = bruteforce_decode(g, ld.closed(i).view(), syndrome_of(g, wf));
                    ASSERT_EQ(chain_weight(g, out ^ wf), chain_weight(g, o));
                }
            }
        }
        BitVec w = random_subset(g.num_edges(), 0.05, rng);
        ASSERT_EQ(ld.closed_decoder(0, w), ld.conventional(w));
        ASSERT_EQ(ld.open_decoder(n, w), ld.conventional(w));
        ASSERT_TRUE(ld.open_decoder(1, BitVec(g.num_edges())).none());
        ASSERT_TRUE(ld.closed_decoder(1, BitVec(g.num_edges())).none());
    }
}

TEST(layered, interface_absorbs_open_charges) {
    Lattice lat = build_lattice(Family::Slab, 3);
    LayeredDecoders ld(lat);
    const SyndromeGraph &g = ld.graph();
    // A face between a layer-1 cell and a later cell: its only defect sits on the
    // layer-1 side and is absorbed through the interface at cost one.
    int seen = 0;
    for (uint32_t e = 0; e < lat.num_faces(); e++) {
        uint32_t u = g.edges[e].u, v = g.edges[e].v;
        if (g.outer[v]) continue;
        int lu = lat.layers.cell_layer[u], lv = lat.layers.cell_layer[v];
        if (std::min(lu, lv) != 1 || std::max(lu, lv) == 1) continue;
        BitVec w = BitVec::from_indices(g.num_edges(), {e});
        ASSERT_EQ(ld.open(1).defects_of(w).size(), 1u);
        BitVec c = ld.open_correction(1, w);
        ASSERT_EQ(c.popcount(), 1u);
        ASSERT_TRUE(ld.open_decoder(1, w).none() || ld.open_decoder(1, w).popcount() == 2);
        ASSERT_TRUE(ld.open(1).defects_of(ld.open_decoder(1, w)).empty());
        seen++;
    }
    ASSERT_GT(seen, 0);
}

TEST(layered, positive_interface_cost) {
    std::mt19937_64 rng(9);
    Lattice lat = build_lattice(Family::Slab, 3);
    LayeredDecoders ld(lat, {.interface_cost = 1});
    const SyndromeGraph &g = ld.graph();
    ASSERT_GT(g.num_edges(), lat.num_faces());
    for (int t = 0; t < 50; t++) {
        BitVec w = random_subset(lat.num_faces(), 0.05, rng);
        w.resize(g.num_edges());
        BitVec c = ld.open_correction(2, w & ld.past(2));
        ASSERT_TRUE(c.subset_of(ld.past(2)));
        for (uint32_t v : syndrome_of(g, (w & ld.past(2)) ^ c)) ASSERT_GT(lat.layers.cell_layer[v], 2);
    }
}

TEST(layered, estimated_error_and_closure) {
    std::mt19937_64 rng(10);
    Lattice lat = build_lattice(Family::Slab, 4);
    LayeredDecoders ld(lat);
    const SyndromeGraph &g = ld.graph();
    for (int i = 1; i < ld.num_layers(); i++) {
        for (int t = 0; t < 30; t++) {
            // Codeword plus an element of the open code of layer i.
            BitVec phi = random_codeword(lat, rng, 3) ^ ld.open_decoder(i, random_subset(g.num_edges(), 0.05, rng) & ld.past(i));
            BitVec e = ld.estimated_error(i, phi);
            ASSERT_EQ(syndrome_of(g, e), syndrome_of(g, phi));
            ASSERT_TRUE(e.subset_of(ld.future(i)));
            BitVec other = phi ^ random_codeword(lat, rng, 2);
            ASSERT_EQ(ld.estimated_error(i, other), e);
            BitVec closed = ld.closure_decoder(i, phi);
            ASSERT_TRUE(syndrome_of(g, closed).empty());
            ASSERT_TRUE((closed ^ phi).subset_of(ld.future(i)));
        }
        BitVec cw = random_codeword(lat, rng, 4);
        ASSERT_EQ(ld.closure_decoder(i, cw), cw);
    }
    // A charge inside the layer cannot be handled by the closed problem.
    BitVec inside(g.num_edges());
    for (uint32_t e = 0; e < lat.num_faces(); e++) {
        if (!g.outer[g.edges[e].v] && lat.layers.cell_layer[g.edges[e].u] == 1 && lat.layers.cell_layer[g.edges[e].v] == 1) {
            inside.set(e);
            break;
        }
    }
    ASSERT_TRUE(inside.any());
    EXPECT_THROW(ld.estimated_error(1, inside), NoMatch);
}

TEST(instances, json_round_trip_and_golden) {
    Lattice lat = build_lattice(Family::Slab, 2);
    SyndromeGraph g = SyndromeGraph::from_lattice(lat);
    std::vector<uint32_t> defects{0, 3};
    DecodeInstance inst{g, defects, mwpm_decode(g, defects)};
    nlohmann::json j = instance_to_json(inst);
    DecodeInstance back = instance_from_json(j);
    ASSERT_EQ(back.chain, inst.chain);
    ASSERT_EQ(back.defects, inst.defects);
    ASSERT_EQ(instance_to_json(back), j);

    std::ifstream in(std::string(COLORJIT_TEST_DATA) + "/decode_slab_d2.json");
    ASSERT_TRUE(in.good());
    DecodeInstance golden = instance_from_json(nlohmann::json::parse(in));
    BitVec again = mwpm_decode(golden.graph, golden.defects);
    ASSERT_EQ(again, golden.chain);
    ASSERT_EQ(chain_weight(golden.graph, again), chain_weight(golden.graph, bruteforce_decode(golden.graph, golden.defects)));

    nlohmann::json bad = j;
    bad["weight"] = 99;
    EXPECT_THROW(instance_from_json(bad), ParseError);
}
