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

#include "colorjit/colex/geometry.h"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "colorjit/errors.h"

namespace colorjit {

namespace {

constexpr double INF = std::numeric_limits<double>::infinity();

bool edge_selected(const Lattice &lat, const BitVec &mask, uint32_t e) { return e < lat.num_faces() && mask.get(e); }

struct UnionFind {
    std::vector<uint32_t> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    uint32_t find(uint32_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(uint32_t a, uint32_t b) { parent[find(a)] = find(b); }
};

double ratio(int num, int den) {
    if (num >= UNREACHABLE) return INF;
    return static_cast<double>(num) / den;
}

}  // namespace

std::vector<int> bfs_distances(const Lattice &lat, const BitVec &edge_mask, uint32_t src) {
    std::vector<int> dist(lat.num_vertices(), UNREACHABLE);
    std::deque<uint32_t> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        uint32_t v = queue.front();
        queue.pop_front();
        if (v != src && lat.is_outer(v)) continue;
        for (uint32_t e : lat.vertex_edges[v]) {
            if (!edge_selected(lat, edge_mask, e)) continue;
            uint32_t w = lat.other_end(e, v);
            if (dist[w] == UNREACHABLE) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<uint32_t> shortest_path(const Lattice &lat, const BitVec &edge_mask, uint32_t src, uint32_t dst) {
    std::vector<int64_t> parent(lat.num_vertices(), -1);
    std::vector<bool> seen(lat.num_vertices(), false);
    std::deque<uint32_t> queue{src};
    seen[src] = true;
    while (!queue.empty() && !seen[dst]) {
        uint32_t v = queue.front();
        queue.pop_front();
        if (v != src && lat.is_outer(v)) continue;
        for (uint32_t e : lat.vertex_edges[v]) {
            if (!edge_selected(lat, edge_mask, e)) continue;
            uint32_t w = lat.other_end(e, v);
            if (!seen[w]) {
                seen[w] = true;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    if (!seen[dst]) return {};
    std::vector<uint32_t> path{dst};
    while (path.back() != src) path.push_back(static_cast<uint32_t>(parent[path.back()]));
    std::reverse(path.begin(), path.end());
    return path;
}

FacetDistances facet_distances(const std::vector<int> &dist, const Lattice &lat) {
    FacetDistances f;
    for (int c = 0; c < 4; c++) {
        if (lat.outer_of_color[c] >= 0) f.to_color[c] = dist[lat.outer_of_color[c]];
        f.any_color = std::min(f.any_color, f.to_color[c]);
    }
    for (int a = 0; a < 4; a++) {
        for (int b = a + 1; b < 4; b++) {
            if (f.to_color[a] < UNREACHABLE && f.to_color[b] < UNREACHABLE) {
                f.two_colors = std::min(f.two_colors, f.to_color[a] + f.to_color[b]);
            }
        }
    }
    return f;
}

LayerDistances layer_distances(const Lattice &lat, int layer, uint32_t v) {
    BitVec past = lat.faces_upto(layer);
    BitVec future = ~past;
    LayerDistances d;
    d.past = bfs_distances(lat, past, v);
    d.future = bfs_distances(lat, future, v);
    d.past_facets = facet_distances(d.past, lat);
    d.future_facets = facet_distances(d.future, lat);
    return d;
}

std::vector<uint32_t> interface_vertices(const Lattice &lat, int layer) {
    std::vector<uint32_t> out;
    for (uint32_t v = 0; v < lat.num_cells(); v++) {
        bool in_past = false, in_future = false;
        for (uint32_t e : lat.vertex_edges[v]) {
            if (lat.layers.face_layer[e] <= layer) {
                in_past = true;
            } else {
                in_future = true;
            }
        }
        if (in_past && in_future) out.push_back(v);
    }
    return out;
}

ClosureGeometry check_closure_geometry(const Lattice &lat) {
    ClosureGeometry g;
    for (uint32_t v = 0; v < lat.num_cells(); v++) {
        g.k_face = std::max(g.k_face, static_cast<int>(lat.vertex_edges[v].size()));
    }
    int n = lat.layers.num_layers;
    for (int i = 1; i < n; i++) {
        BitVec past = lat.faces_upto(i);
        BitVec future = ~past;
        auto iface = interface_vertices(lat, i);
        double layer_k = 0;
        for (uint32_t v : iface) {
            auto dp = bfs_distances(lat, past, v);
            auto df = bfs_distances(lat, future, v);
            for (uint32_t w : iface) {
                if (w == v) continue;
                if (dp[w] < UNREACHABLE) {
                    double r = ratio(df[w], dp[w]);
                    g.k_pair = std::max(g.k_pair, r);
                    layer_k = std::max(layer_k, r);
                }
                if (df[w] < UNREACHABLE) g.k_reverse = std::max(g.k_reverse, ratio(dp[w], df[w]));
            }
            FacetDistances fp = facet_distances(dp, lat), ff = facet_distances(df, lat);
            for (int c = 0; c < 4; c++) {
                if (fp.to_color[c] < UNREACHABLE) {
                    double r = ratio(std::min(ff.to_color[c], ff.two_colors), fp.to_color[c]);
                    g.k_color = std::max(g.k_color, r);
                    layer_k = std::max(layer_k, r);
                }
                if (ff.to_color[c] < UNREACHABLE) {
                    g.k_reverse = std::max(g.k_reverse, ratio(std::min(fp.to_color[c], fp.two_colors), ff.to_color[c]));
                }
            }
            if (fp.any_color < UNREACHABLE) g.k_any = std::max(g.k_any, ratio(ff.any_color, fp.any_color));
        }
        g.layer_k.push_back(layer_k);

        // Simple intersection: on every future cell the faces outside layer i must
        // stay connected through colex edges that avoid layer i.
        for (uint32_t c = 0; c < lat.num_cells(); c++) {
            if (lat.layers.cell_layer[c] <= i) continue;
            std::map<uint32_t, uint32_t> node;
            for (uint32_t e : lat.vertex_edges[c]) {
                if (!past.get(e)) node.emplace(e, static_cast<uint32_t>(node.size()));
            }
            if (node.size() == lat.vertex_edges[c].size()) continue;
            UnionFind uf(node.size());
            for (uint32_t t : lat.vertex_triangles[c]) {
                const auto &tri = lat.triangles[t];
                bool clean = true;
                std::vector<uint32_t> at_c;
                for (uint32_t e : tri.e) {
                    if (edge_selected(lat, past, e)) clean = false;
                    if (lat.edges[e].u == c || lat.edges[e].v == c) at_c.push_back(e);
                }
                if (clean && at_c.size() == 2) uf.unite(node.at(at_c[0]), node.at(at_c[1]));
            }
            std::set<uint32_t> roots;
            for (uint32_t k = 0; k < node.size(); k++) roots.insert(uf.find(k));
            if (roots.size() > 1) {
                g.simple = false;
                g.non_simple_cells++;
            }
        }
    }
    g.k = std::max(g.k_pair, g.k_color);
    g.k_any = std::max(g.k_any, g.k_pair);
    g.satisfied = g.k < INF;
    g.k_close = 4.0 * g.k * (g.k_face - 1);
    g.k_close_z2 = 2.0 * g.k_any;
    return g;
}

namespace {

// Pieces of the colex that a single cell or facet w shares with the cells of `in`.
struct SharedPatch {
    size_t faces = 0;
    size_t edges = 0;
    std::vector<uint32_t> qubits;
    bool connected = true;
};

SharedPatch shared_patch(const Lattice &lat, uint32_t w, const BitVec &in) {
    SharedPatch p;
    auto inside = [&](uint32_t v) { return v < lat.num_cells() && in.get(v); };
    for (uint32_t e : lat.vertex_edges[w]) {
        if (inside(lat.other_end(e, w))) p.faces++;
    }
    std::map<std::array<uint32_t, 3>, std::vector<uint32_t>> tri;
    for (uint32_t q : lat.vertex_tets[w]) {
        const auto &vs = lat.tets[q].v;
        if (!std::any_of(vs.begin(), vs.end(), inside)) continue;
        uint32_t idx = static_cast<uint32_t>(p.qubits.size());
        p.qubits.push_back(q);
        std::vector<uint32_t> others;
        for (uint32_t v : vs) {
            if (v != w) others.push_back(v);
        }
        for (int a = 0; a < 3; a++) {
            for (int b = a + 1; b < 3; b++) {
                if (!inside(others[a]) && !inside(others[b])) continue;
                std::array<uint32_t, 3> key{w, others[a], others[b]};
                std::sort(key.begin(), key.end());
                tri[key].push_back(idx);
            }
        }
    }
    p.edges = tri.size();
    UnionFind uf(p.qubits.size());
    for (const auto &[key, qs] : tri) {
        for (size_t k = 1; k < qs.size(); k++) uf.unite(qs[0], qs[k]);
    }
    std::set<uint32_t> roots;
    for (uint32_t k = 0; k < p.qubits.size(); k++) roots.insert(uf.find(k));
    p.connected = roots.size() <= 1;
    return p;
}

}  // namespace

CausalityReport check_causality(const Lattice &lat, bool algebraic) {
    CausalityReport rep;
    rep.ok = true;
    BitMatrix hz = lat.face_checks();
    for (int i = 1; i <= lat.layers.num_layers; i++) {
        LayerCausality lc;
        lc.layer = i;
        BitVec in = lat.cells_upto(i);

        UnionFind uf(lat.num_cells());
        for (uint32_t e = 0; e < lat.num_faces(); e++) {
            const auto &ed = lat.edges[e];
            if (!lat.is_outer(ed.u) && !lat.is_outer(ed.v) && in.get(ed.u) && in.get(ed.v)) uf.unite(ed.u, ed.v);
        }
        std::set<uint32_t> roots;
        in.for_each_one([&](size_t v) { roots.insert(uf.find(static_cast<uint32_t>(v))); });
        lc.connected = roots.size() == 1;

        auto touches = [&](const auto &vs) {
            return std::any_of(vs.begin(), vs.end(), [&](uint32_t v) { return v < lat.num_cells() && in.get(v); });
        };
        long chi = -static_cast<long>(in.popcount());
        for (const auto &q : lat.tets) chi += touches(q.v);
        for (const auto &t : lat.triangles) chi -= touches(t.v);
        for (uint32_t e = 0; e < lat.num_faces(); e++) {
            chi += touches(std::array<uint32_t, 2>{lat.edges[e].u, lat.edges[e].v});
        }
        lc.euler = static_cast<int>(chi);

        lc.intersections_ok = true;
        lc.injective = true;
        for (uint32_t w = 0; w < lat.num_vertices(); w++) {
            if (w < lat.num_cells() && in.get(w)) continue;
            SharedPatch p = shared_patch(lat, w, in);
            if (p.qubits.empty()) continue;
            long pchi = static_cast<long>(p.qubits.size()) - static_cast<long>(p.edges) + static_cast<long>(p.faces);
            if (!p.connected) {
                lc.injective = false;
                lc.note += "disconnected contact with vertex " + std::to_string(w) + "; ";
            }
            if (pchi != 1 || p.faces == 0) {
                lc.intersections_ok = false;
                lc.note += "contact with vertex " + std::to_string(w) + " is not a disc; ";
            }
        }

        lc.algebraic = true;
        if (algebraic) {
            BitMatrix restricted = rows_supported_on(hz, lat.qubits_upto(i));
            BitMatrix layer_faces(0, lat.num_qubits());
            BitVec phi = lat.faces_upto(i);
            phi.for_each_one([&](size_t e) { layer_faces.push_back(hz.rows[e]); });
            lc.algebraic = rowspace_contains(layer_faces, restricted);
        }
        rep.ok = rep.ok && lc.ok();
        rep.layers.push_back(lc);
    }
    return rep;
}

bool BallIdentityReport::ok() const {
    return full && std::all_of(layer_restriction.begin(), layer_restriction.end(), [](bool b) { return b; }) &&
           std::all_of(layer_subcolex.begin(), layer_subcolex.end(), [](bool b) { return b; });
}

bool ball_identity(const BitMatrix &face_checks, const BitMatrix &cell_checks, const BitMatrix &facet_checks) {
    BitMatrix gens = cell_checks;
    for (const auto &r : facet_checks.rows) gens.push_back(r);
    return rowspace_equal(kernel(face_checks), gens);
}

BallIdentityReport verify_ball_identities(const Lattice &lat) {
    BallIdentityReport rep;
    BitMatrix hz = lat.face_checks();
    rep.full = ball_identity(hz, lat.cell_checks(), lat.facet_checks());
    for (int i = 1; i <= lat.layers.num_layers; i++) {
        BitVec region = lat.qubits_upto(i);
        BitVec in = lat.cells_upto(i);
        BitMatrix layer_faces(0, lat.num_qubits());
        lat.faces_upto(i).for_each_one([&](size_t e) { layer_faces.push_back(hz.rows[e]); });
        rep.layer_restriction.push_back(rowspace_equal(rows_supported_on(hz, region), layer_faces));

        // The layer as a colex of its own: cells of C_i, facets are the contacts with
        // every other cell or facet.
        BitMatrix sub_faces = select_columns(layer_faces, region);
        BitMatrix sub_cells(0, region.popcount()), sub_facets(0, region.popcount());
        in.for_each_one([&](size_t c) {
            BitVec r(lat.num_qubits());
            for (uint32_t q : lat.vertex_tets[c]) r.set(q);
            sub_cells.push_back(select_bits(r, region));
        });
        for (uint32_t w = 0; w < lat.num_vertices(); w++) {
            if (w < lat.num_cells() && in.get(w)) continue;
            SharedPatch p = shared_patch(lat, w, in);
            if (p.qubits.empty()) continue;
            BitVec r(lat.num_qubits());
            for (uint32_t q : p.qubits) r.set(q);
            sub_facets.push_back(select_bits(r, region));
        }
        rep.layer_subcolex.push_back(ball_identity(sub_faces, sub_cells, sub_facets));
    }
    return rep;
}

}  // namespace colorjit
