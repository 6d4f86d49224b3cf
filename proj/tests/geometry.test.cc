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
#include <set>
#include <random>

#include "colorjit/colex/closure.h"
#include "colorjit/colex/geometry.h"
#include "colorjit/colex/serialize.h"
#include "colorjit/errors.h"

using namespace colorjit;

namespace {

// Hand-built analogue of the distance figure: v reaches the blue facet in three steps
// through past cells, but after the layer it only sees the green facet (two steps)
// and the yellow facet (three steps).
Lattice distance_fixture() {
    Lattice lat;
    auto inner = [&](Color c, int layer) {
        lat.vertices.push_back(DualVertex{c, VertexKind::Inner, {0, 0, 0}});
        lat.layers.cell_layer.push_back(layer);
    };
    inner(Color::R, 2);  // 0: v
    inner(Color::G, 1);  // 1: a
    inner(Color::Y, 1);  // 2: b
    inner(Color::B, 2);  // 3: c
    inner(Color::G, 2);  // 4: d
    inner(Color::B, 2);  // 5: e
    for (Color c : {Color::B, Color::G, Color::Y}) {
        lat.vertices.push_back(DualVertex{c, VertexKind::Outer, {0, 0, 0}});
        lat.layers.cell_layer.push_back(0);
    }
    const uint32_t blue = 6, green = 7, yellow = 8;
    for (auto [u, v] : std::vector<std::pair<uint32_t, uint32_t>>{
             {0, 1}, {1, 2}, {2, blue}, {0, 3}, {3, green}, {0, 4}, {4, 5}, {5, yellow}}) {
        lat.edges.push_back(DualEdge{u, v, Flux(), false});
    }
    lat.layers.num_layers = 2;
    lat.finalize();
    return lat;
}

}  // namespace

TEST(distances, figure_analogue) {
    Lattice lat = distance_fixture();
    LayerDistances d = layer_distances(lat, 1, 0);
    ASSERT_EQ(d.past_facets.to_color[static_cast<int>(Color::B)], 3);
    ASSERT_EQ(d.future_facets.to_color[static_cast<int>(Color::B)], UNREACHABLE);
    ASSERT_EQ(d.future_facets.two_colors, 5);
    ASSERT_EQ(d.future_facets.any_color, 2);
    ASSERT_EQ(interface_vertices(lat, 1), (std::vector<uint32_t>{0}));
}

TEST(distances, bfs_does_not_cross_facets) {
    Lattice lat = build_lattice(Family::Slab, 3);
    BitVec all = ~BitVec(lat.num_faces());
    uint32_t outer = static_cast<uint32_t>(lat.outer_of_color[0]);
    auto from_outer = bfs_distances(lat, all, outer);
    // Reaching a facet never shortens a path between two cells.
    for (uint32_t v = 0; v < lat.num_cells(); v++) {
        auto dv = bfs_distances(lat, all, v);
        for (uint32_t w = 0; w < lat.num_cells(); w++) {
            ASSERT_LE(dv[w], lat.num_cells());
            auto p = shortest_path(lat, all, v, w);
            ASSERT_EQ(p.size(), static_cast<size_t>(dv[w]) + 1);
            for (size_t k = 1; k + 1 < p.size(); k++) ASSERT_FALSE(lat.is_outer(p[k]));
        }
    }
    ASSERT_EQ(from_outer[outer], 0);
}

TEST(causality, families_pass) {
    for (Family f : {Family::Slab, Family::Wedge, Family::Forbidden}) {
        for (int d : {2, 3, 4}) {
            Lattice lat = build_lattice(f, d);
            CausalityReport rep = check_causality(lat);
            ASSERT_TRUE(rep.ok) << family_name(f) << " d=" << d;
            for (const auto &l : rep.layers) ASSERT_EQ(l.euler, 1);
        }
    }
}

TEST(causality, disjoint_first_layer_fails) {
    Lattice lat = build_lattice(Family::Slab, 3);
    // Layer 1 made of two cells that share no face.
    uint32_t a = 0, b = 0;
    bool found = false;
    for (uint32_t v = 0; v < lat.num_cells() && !found; v++) {
        for (uint32_t w = v + 1; w < lat.num_cells() && !found; w++) {
            if (lat.find_edge(v, w) < 0) {
                a = v;
                b = w;
                found = true;
            }
        }
    }
    ASSERT_TRUE(found);
    for (uint32_t v = 0; v < lat.num_cells(); v++) lat.layers.cell_layer[v] = (v == a || v == b) ? 1 : 2;
    lat.layers.num_layers = 2;
    lat.finalize();
    CausalityReport rep = check_causality(lat);
    ASSERT_FALSE(rep.ok);
    ASSERT_FALSE(rep.layers[0].connected);
    ASSERT_EQ(rep.layers[0].euler, 2);
}

TEST(closure_geometry, slab_bounded_forbidden_grows) {
    std::vector<double> slab, forbidden;
    for (int d = 2; d <= 6; d++) {
        ClosureGeometry s = check_closure_geometry(build_lattice(Family::Slab, d));
        ClosureGeometry f = check_closure_geometry(build_lattice(Family::Forbidden, d));
        ASSERT_TRUE(s.satisfied);
        ASSERT_TRUE(s.simple);
        slab.push_back(s.k);
        forbidden.push_back(f.k);
    }
    for (double k : slab) ASSERT_LE(k, 1.5);
    for (size_t i = 2; i < forbidden.size(); i++) ASSERT_GT(forbidden[i], forbidden[i - 1]);
    ClosureGeometry g = check_closure_geometry(build_lattice(Family::Slab, 4));
    ASSERT_EQ(g.k_face, 14);
    ASSERT_DOUBLE_EQ(g.k_close, 4 * g.k * 13);
}

TEST(ball_identities, hold_on_small_lattices) {
    for (Family f : {Family::Slab, Family::Forbidden}) {
        for (int d : {2, 3}) {
            BallIdentityReport rep = verify_ball_identities(build_lattice(f, d));
            ASSERT_TRUE(rep.ok()) << family_name(f) << " d=" << d;
        }
    }
    // The whole colex as its own layer: restriction to all qubits is the full face group.
    Lattice lat = build_lattice(Family::Slab, 2, 10);
    ASSERT_EQ(lat.layers.num_layers, 1);
    ASSERT_TRUE(verify_ball_identities(lat).ok());
}

TEST(ball_identities, missing_facet_is_detected) {
    Lattice lat = build_lattice(Family::Slab, 3);
    BitMatrix facets = lat.facet_checks();
    ASSERT_TRUE(ball_identity(lat.face_checks(), lat.cell_checks(), facets));
    // Facet operators agree up to cells, so a single one is enough; none is not.
    facets.rows.resize(1);
    ASSERT_TRUE(ball_identity(lat.face_checks(), lat.cell_checks(), facets));
    facets.rows.clear();
    ASSERT_FALSE(ball_identity(lat.face_checks(), lat.cell_checks(), facets));
}

TEST(strips, strip_flux_realises_monopoles) {
    std::mt19937_64 rng(8);
    Lattice lat = build_lattice(Family::Slab, 3);
    BitVec none(lat.num_faces());
    int checked = 0;
    for (int t = 0; t < 300; t++) {
        // Random walk through inner vertices, then a strip for it.
        uint32_t v = static_cast<uint32_t>(rng() % lat.num_cells());
        std::vector<uint32_t> walk;
        for (int s = 0; s < 1 + static_cast<int>(rng() % 5); s++) {
            const auto &es = lat.vertex_edges[v];
            uint32_t e = es[rng() % es.size()];
            walk.push_back(e);
            v = lat.other_end(e, v);
            if (lat.is_outer(v)) break;
        }
        Strip s = strip_for_walk(lat, walk, none);
        // Random monopoles on the strip vertices summing to zero.
        auto vs = strip_vertices(lat, s);
        std::vector<Flux> m(lat.num_vertices());
        Flux total;
        for (size_t k = 0; k + 1 < vs.size(); k++) {
            Flux x = Flux::from_bits3(static_cast<uint8_t>(rng() % 8));
            if (!x.in_subgroup(lat.vertices[vs[k]].color)) continue;
            m[vs[k]] = x;
            total += x;
        }
        if (!total.in_subgroup(lat.vertices[vs.back()].color)) continue;
        m[vs.back()] = total;
        BitVec phi = strip_flux(lat, s, m);
        auto got = lat.boundary(phi);
        for (uint32_t w = 0; w < lat.num_vertices(); w++) ASSERT_EQ(got[w], m[w]);
        std::set<uint32_t> support(s.edges.begin(), s.edges.end());
        for (uint32_t t : s.triangles) support.insert(lat.triangles[t].e.begin(), lat.triangles[t].e.end());
        for (uint32_t e : phi.ones()) ASSERT_TRUE(support.count(e));
        checked++;
    }
    ASSERT_GT(checked, 50);
}

TEST(strips, walk_bound_and_avoidance) {
    Lattice lat = build_lattice(Family::Slab, 4);
    ClosureGeometry g = check_closure_geometry(lat);
    BitVec past = lat.faces_upto(2);
    BitVec future = ~past;
    auto iface = interface_vertices(lat, 2);
    for (uint32_t a : iface) {
        for (uint32_t b : iface) {
            auto path = shortest_path(lat, future, a, b);
            if (path.size() < 2) continue;
            std::vector<uint32_t> walk;
            for (size_t k = 0; k + 1 < path.size(); k++) walk.push_back(static_cast<uint32_t>(lat.find_edge(path[k], path[k + 1])));
            Strip s = strip_for_walk(lat, walk, past);
            ASSERT_LE(s.edges.size(), 1 + 2 * (g.k_face - 1) * (walk.size() - 1));
            for (uint32_t e : s.edges) ASSERT_TRUE(e >= lat.num_faces() || !past.get(e));
        }
    }
}

TEST(closure, close_flux_keeps_charges_within_bound) {
    std::mt19937_64 rng(21);
    for (Family f : {Family::Slab, Family::Wedge, Family::Forbidden}) {
        for (int d : {2, 3, 4}) {
            Lattice lat = build_lattice(f, d);
            ClosureGeometry g = check_closure_geometry(lat);
            for (int i = 1; i < lat.layers.num_layers; i++) {
                BitVec future = ~lat.faces_upto(i);
                for (int t = 0; t < 60; t++) {
                    BitVec phi = random_open_configuration(lat, i, rng, 1 + static_cast<int>(rng() % 4), static_cast<int>(rng() % 3));
                    ClosureResult r = close_flux(lat, i, phi);
                    ASSERT_TRUE(r.flux.subset_of(future));
                    auto want = lat.boundary(phi), got = lat.boundary(r.flux);
                    for (uint32_t v = 0; v < lat.num_cells(); v++) ASSERT_EQ(want[v], got[v]);
                    ASSERT_LE(static_cast<double>(r.flux.popcount()), g.k_close * static_cast<double>(phi.popcount()));
                }
            }
        }
    }
}

TEST(closure, rejects_charges_inside_the_layer) {
    Lattice lat = build_lattice(Family::Slab, 4);
    // A single face between two past cells that are not on the interface.
    auto iface = interface_vertices(lat, 2);
    std::set<uint32_t> on(iface.begin(), iface.end());
    BitVec past = lat.faces_upto(2);
    int64_t pick = -1;
    past.for_each_one([&](size_t e) {
        const auto &ed = lat.edges[e];
        if (pick < 0 && !lat.is_outer(ed.u) && !lat.is_outer(ed.v) && !on.count(ed.u) && !on.count(ed.v)) pick = static_cast<int64_t>(e);
    });
    ASSERT_GE(pick, 0);
    BitVec phi(lat.num_faces());
    phi.set(static_cast<size_t>(pick));
    EXPECT_THROW(close_flux(lat, 2, phi), InfeasibleSyndrome);
}

TEST(serialize, round_trip_and_golden) {
    Lattice lat = build_lattice(Family::Slab, 2);
    nlohmann::json j = lattice_to_json(lat);
    Lattice back = lattice_from_json(j);
    ASSERT_EQ(lattice_to_json(back), j);
    ASSERT_EQ(back.num_qubits(), 15u);
    ASSERT_EQ(back.layers.face_layer, lat.layers.face_layer);
    std::ifstream in(std::string(COLORJIT_TEST_DATA) + "/lattice_slab_d2.json");
    ASSERT_TRUE(in.good());
    nlohmann::json golden = nlohmann::json::parse(in);
    ASSERT_EQ(golden, j);
}
