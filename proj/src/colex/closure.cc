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

#include "colorjit/colex/closure.h"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "colorjit/colex/geometry.h"
#include "colorjit/errors.h"

namespace colorjit {

namespace {

uint32_t shared_vertex(const Lattice &lat, uint32_t e, uint32_t f) {
    const auto &a = lat.edges[e];
    const auto &b = lat.edges[f];
    if (a.u == b.u || a.u == b.v) return a.u;
    if (a.v == b.u || a.v == b.v) return a.v;
    throw InvalidGeometry("consecutive walk edges do not meet");
}

bool avoids(const Lattice &lat, const BitVec &past, uint32_t e) { return e >= lat.num_faces() || !past.get(e); }

// Triangles around inner vertex w joining edge `from` to edge `to`, moving only through
// triangles whose three edges avoid the past.
std::vector<uint32_t> pivot(const Lattice &lat, uint32_t w, uint32_t from, uint32_t to, const BitVec &past) {
    std::map<uint32_t, std::pair<int64_t, int64_t>> parent;  // edge -> (previous edge, triangle)
    std::deque<uint32_t> queue{from};
    parent[from] = {-1, -1};
    while (!queue.empty() && !parent.count(to)) {
        uint32_t e = queue.front();
        queue.pop_front();
        for (uint32_t t : lat.edge_triangles[e]) {
            const auto &tri = lat.triangles[t];
            if (std::find(tri.v.begin(), tri.v.end(), w) == tri.v.end()) continue;
            if (!std::all_of(tri.e.begin(), tri.e.end(), [&](uint32_t x) { return avoids(lat, past, x); })) continue;
            for (uint32_t f : tri.e) {
                if (f == e || (lat.edges[f].u != w && lat.edges[f].v != w)) continue;
                if (!parent.count(f)) {
                    parent[f] = {e, t};
                    queue.push_back(f);
                }
            }
        }
    }
    if (!parent.count(to)) {
        throw NotSimple("faces of cell " + std::to_string(w) + " outside the layer are not connected");
    }
    std::vector<uint32_t> tris;
    for (uint32_t e = to; parent[e].first >= 0; e = static_cast<uint32_t>(parent[e].first)) {
        tris.push_back(static_cast<uint32_t>(parent[e].second));
    }
    std::reverse(tris.begin(), tris.end());
    return tris;
}

uint32_t third_edge_vertex(const DualTriangle &t, const DualEdge &e) {
    for (uint32_t v : t.v) {
        if (v != e.u && v != e.v) return v;
    }
    throw InvalidGeometry("strip triangle does not contain its edge");
}

}  // namespace

std::vector<uint32_t> strip_vertices(const Lattice &lat, const Strip &s) {
    std::set<uint32_t> vs;
    for (uint32_t e : s.edges) {
        vs.insert(lat.edges[e].u);
        vs.insert(lat.edges[e].v);
    }
    return {vs.begin(), vs.end()};
}

BitVec strip_flux(const Lattice &lat, const Strip &s, std::vector<Flux> m) {
    if (s.edges.empty() || s.triangles.size() + 1 != s.edges.size()) {
        throw InvalidGeometry("strip must have one more edge than triangles");
    }
    if (m.size() != lat.num_vertices()) throw std::invalid_argument("strip_flux: monopole length mismatch");
    Flux total;
    std::vector<bool> on_strip(lat.num_vertices(), false);
    for (uint32_t v : strip_vertices(lat, s)) on_strip[v] = true;
    for (uint32_t v = 0; v < lat.num_vertices(); v++) {
        total += m[v];
        if (!m[v].in_subgroup(lat.vertices[v].color)) throw InfeasibleSyndrome("charge outside its colour subgroup");
        if (!m[v].is_zero() && !on_strip[v]) throw InfeasibleSyndrome("charge off the strip");
    }
    if (!total.is_zero()) throw InfeasibleSyndrome("charges do not sum to zero");

    BitVec flux(lat.num_edges());
    auto apply = [&](uint32_t e) {
        flux.flip(e);
        m[lat.edges[e].u] += lat.edges[e].label;
        m[lat.edges[e].v] += lat.edges[e].label;
    };
    // Peel triangles from the end; each one clears the charge of its apex.
    for (size_t k = s.triangles.size(); k-- > 0;) {
        const DualTriangle &tri = lat.triangles[s.triangles[k]];
        const DualEdge &prev = lat.edges[s.edges[k]];
        uint32_t apex = third_edge_vertex(tri, prev);
        std::vector<uint32_t> at_apex;
        for (uint32_t e : tri.e) {
            if (lat.edges[e].u == apex || lat.edges[e].v == apex) at_apex.push_back(e);
        }
        Flux want = m[apex];
        Flux l1 = lat.edges[at_apex[0]].label, l2 = lat.edges[at_apex[1]].label;
        if (want.is_zero()) continue;
        if (want == l1) {
            apply(at_apex[0]);
        } else if (want == l2) {
            apply(at_apex[1]);
        } else if (want == l1 + l2) {
            apply(at_apex[0]);
            apply(at_apex[1]);
        } else {
            throw InfeasibleSyndrome("apex charge not generated by its two strip edges");
        }
    }
    const DualEdge &first = lat.edges[s.edges[0]];
    if (m[first.u] != m[first.v]) throw InfeasibleSyndrome("residual charges on the first edge differ");
    if (m[first.u] == first.label) {
        apply(s.edges[0]);
    } else if (!m[first.u].is_zero()) {
        throw InfeasibleSyndrome("residual charge is not the first edge's label");
    }
    for (const Flux &f : m) {
        if (!f.is_zero()) throw InfeasibleSyndrome("charge left after peeling the strip");
    }
    return flux;
}

Strip strip_for_walk(const Lattice &lat, const std::vector<uint32_t> &walk, const BitVec &past_faces) {
    std::vector<uint32_t> edges;
    for (uint32_t e : walk) {
        if (!avoids(lat, past_faces, e)) throw InvalidGeometry("walk uses a face of the layer");
        if (edges.empty() || edges.back() != e) edges.push_back(e);
    }
    if (edges.empty()) throw InvalidGeometry("empty walk");
    Strip s;
    s.edges.push_back(edges[0]);
    for (size_t k = 1; k < edges.size(); k++) {
        uint32_t w = shared_vertex(lat, edges[k - 1], edges[k]);
        if (lat.is_outer(w)) throw NotSimple("walk turns at a facet");
        for (uint32_t t : pivot(lat, w, edges[k - 1], edges[k], past_faces)) {
            const auto &tri = lat.triangles[t];
            uint32_t cur = s.edges.back();
            uint32_t next = 0;
            for (uint32_t f : tri.e) {
                if (f != cur && (lat.edges[f].u == w || lat.edges[f].v == w)) next = f;
            }
            s.triangles.push_back(t);
            s.edges.push_back(next);
        }
    }
    return s;
}

ClosureResult close_flux(const Lattice &lat, int layer, const BitVec &phi) {
    BitVec past = lat.faces_upto(layer);
    BitVec future = ~past;
    if (!phi.subset_of(past)) throw InvalidGeometry("configuration leaves the layer");
    std::vector<bool> on_future(lat.num_vertices(), false);
    future.for_each_one([&](size_t e) {
        on_future[lat.edges[e].u] = true;
        on_future[lat.edges[e].v] = true;
    });

    // Components of phi as a subgraph of the extended dual graph.
    std::vector<uint32_t> root(lat.num_vertices());
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](uint32_t a) {
        while (root[a] != a) a = root[a] = root[root[a]];
        return a;
    };
    phi.for_each_one([&](size_t e) { root[find(lat.edges[e].u)] = find(lat.edges[e].v); });
    std::map<uint32_t, std::vector<uint32_t>> components;
    phi.for_each_one([&](size_t e) { components[find(lat.edges[e].u)].push_back(static_cast<uint32_t>(e)); });

    ClosureResult result;
    result.flux = BitVec(lat.num_faces());
    for (const auto &[rep, comp_edges] : components) {
        BitVec comp(lat.num_faces());
        for (uint32_t e : comp_edges) comp.set(e);
        std::vector<Flux> charge = lat.boundary(comp);
        std::vector<uint32_t> inner_v, outer_v;
        for (uint32_t v = 0; v < lat.num_vertices(); v++) {
            if (charge[v].is_zero()) continue;
            if (lat.is_outer(v)) {
                outer_v.push_back(v);
            } else {
                if (!on_future[v]) throw InfeasibleSyndrome("charge at vertex " + std::to_string(v) + " is inside the layer");
                inner_v.push_back(v);
            }
        }
        if (inner_v.empty()) continue;
        if (outer_v.size() > 2) outer_v.resize(2);
        std::set<uint32_t> keep(inner_v.begin(), inner_v.end());
        keep.insert(outer_v.begin(), outer_v.end());
        uint32_t start = outer_v.empty() ? inner_v[0] : outer_v[0];
        int64_t target = outer_v.size() == 2 ? static_cast<int64_t>(outer_v[1]) : int64_t{-1};

        // Spanning tree of the component, pruned down to the kept vertices.
        std::map<uint32_t, std::vector<std::pair<uint32_t, uint32_t>>> adj;  // v -> (w, edge)
        for (uint32_t e : comp_edges) {
            adj[lat.edges[e].u].push_back({lat.edges[e].v, e});
            adj[lat.edges[e].v].push_back({lat.edges[e].u, e});
        }
        std::map<uint32_t, std::vector<uint32_t>> tree;
        std::map<uint32_t, uint32_t> parent;
        std::deque<uint32_t> queue{start};
        parent[start] = start;
        while (!queue.empty()) {
            uint32_t v = queue.front();
            queue.pop_front();
            for (auto [w, e] : adj[v]) {
                if (parent.count(w)) continue;
                parent[w] = v;
                tree[v].push_back(w);
                queue.push_back(w);
            }
        }
        std::map<uint32_t, bool> alive;
        for (auto &[v, p] : parent) alive[v] = true;
        std::function<bool(uint32_t)> prune = [&](uint32_t v) {
            bool any = keep.count(v) > 0;
            for (uint32_t c : tree[v]) any = prune(c) || any;
            alive[v] = any;
            return any;
        };
        prune(start);
        for (auto &[v, p] : parent) result.tree_edges += (v != start && alive[v]);

        // Pre-order over the pruned tree, visiting the branch holding the target last.
        std::map<uint32_t, bool> holds_target;
        std::function<bool(uint32_t)> mark = [&](uint32_t v) {
            bool h = static_cast<int64_t>(v) == target;
            for (uint32_t c : tree[v]) h = mark(c) || h;
            holds_target[v] = h;
            return h;
        };
        mark(start);
        std::vector<uint32_t> order;
        std::function<void(uint32_t)> visit = [&](uint32_t v) {
            if (!alive[v]) return;
            if (keep.count(v) && static_cast<int64_t>(v) != target) order.push_back(v);
            std::vector<uint32_t> kids = tree[v];
            std::stable_partition(kids.begin(), kids.end(), [&](uint32_t c) { return !holds_target[c]; });
            for (uint32_t c : kids) visit(c);
        };
        visit(start);
        if (target >= 0) order.push_back(static_cast<uint32_t>(target));

        // Replacement walk through the future graph.
        auto future_path = [&](uint32_t a, uint32_t b) {
            auto p = shortest_path(lat, future, a, b);
            if (p.empty()) throw NotSimple("no path after the layer between " + std::to_string(a) + " and " + std::to_string(b));
            return p;
        };
        auto reversed = [](std::vector<uint32_t> p) {
            std::reverse(p.begin(), p.end());
            return p;
        };
        // Walk from inner vertex b to the facet of colour c, or through two facets.
        auto to_facet = [&](uint32_t b, uint32_t facet) -> std::vector<std::vector<uint32_t>> {
            auto dist = bfs_distances(lat, future, b);
            FacetDistances fd = facet_distances(dist, lat);
            int direct = dist[facet];
            int best = UNREACHABLE, c1 = -1, c2 = -1;
            for (int a = 0; a < 4; a++) {
                for (int c = a + 1; c < 4; c++) {
                    if (fd.to_color[a] < UNREACHABLE && fd.to_color[c] < UNREACHABLE &&
                        fd.to_color[a] + fd.to_color[c] < best) {
                        best = fd.to_color[a] + fd.to_color[c];
                        c1 = a;
                        c2 = c;
                    }
                }
            }
            if (direct <= best && direct < UNREACHABLE) return {future_path(b, facet)};
            if (c1 < 0) throw NotSimple("charge cannot reach any facet after the layer");
            return {future_path(b, static_cast<uint32_t>(lat.outer_of_color[c1])),
                    future_path(b, static_cast<uint32_t>(lat.outer_of_color[c2]))};
        };
        std::vector<uint32_t> walk_vertices;
        auto append = [&](const std::vector<uint32_t> &p) {
            size_t from = (!walk_vertices.empty() && walk_vertices.back() == p.front()) ? 1 : 0;
            if (!walk_vertices.empty() && from == 0) throw InvalidGeometry("walk pieces do not join");
            walk_vertices.insert(walk_vertices.end(), p.begin() + static_cast<long>(from), p.end());
        };
        for (size_t j = 0; j + 1 < order.size(); j++) {
            uint32_t a = order[j], b = order[j + 1];
            if (lat.is_outer(a)) {
                auto legs = to_facet(b, a);
                append(reversed(legs[0]));
                if (legs.size() == 2) {
                    append(legs[1]);
                    append(reversed(legs[1]));
                }
            } else if (lat.is_outer(b)) {
                auto legs = to_facet(a, b);
                append(legs[0]);
                if (legs.size() == 2) {
                    append(reversed(legs[0]));
                    append(legs[1]);
                }
            } else {
                append(future_path(a, b));
            }
        }
        std::vector<uint32_t> walk;
        for (size_t k = 0; k + 1 < walk_vertices.size(); k++) {
            walk.push_back(static_cast<uint32_t>(lat.find_edge(walk_vertices[k], walk_vertices[k + 1])));
        }

        // Monopoles: the inner charges, with the total absorbed by facets on the walk.
        std::vector<Flux> m(lat.num_vertices());
        Flux total;
        for (uint32_t v : inner_v) {
            m[v] = charge[v];
            total += charge[v];
        }
        std::vector<uint32_t> facets;
        for (uint32_t v : walk_vertices) {
            if (lat.is_outer(v) && std::find(facets.begin(), facets.end(), v) == facets.end()) facets.push_back(v);
        }
        std::sort(facets.begin(), facets.end());
        if (facets.size() >= 2) {
            Color ca = lat.vertices[facets[0]].color, cb = lat.vertices[facets[1]].color;
            bool done = false;
            for (uint8_t bits = 0; bits < 8 && !done; bits++) {
                Flux x = Flux::from_bits3(bits);
                if (x.in_subgroup(ca) && (total + x).in_subgroup(cb)) {
                    m[facets[0]] = x;
                    m[facets[1]] = total + x;
                    done = true;
                }
            }
            if (!done) throw InfeasibleSyndrome("total charge cannot be split over two facets");
        } else if (facets.size() == 1) {
            if (!total.in_subgroup(lat.vertices[facets[0]].color)) throw InfeasibleSyndrome("facet cannot absorb the charge");
            m[facets[0]] = total;
        } else if (!total.is_zero()) {
            throw InfeasibleSyndrome("charges of a closed component do not cancel");
        }

        Strip s = strip_for_walk(lat, walk, past);
        result.strip_edges += s.edges.size();
        BitVec ext = strip_flux(lat, s, m);
        ext.resize(lat.num_faces());
        result.flux ^= ext;
    }

    auto want = lat.boundary(phi), got = lat.boundary(result.flux);
    for (uint32_t v = 0; v < lat.num_cells(); v++) {
        if (want[v] != got[v]) throw InvalidGeometry("closure changed the charge at vertex " + std::to_string(v));
    }
    if (!result.flux.subset_of(future)) throw InvalidGeometry("closure left the future faces");
    return result;
}

BitVec random_open_configuration(const Lattice &lat, int layer, std::mt19937_64 &rng, int num_errors, int num_links) {
    BitVec past = lat.faces_upto(layer);
    BitVec err(lat.num_qubits());
    for (int k = 0; k < num_errors; k++) err.flip(rng() % lat.num_qubits());
    BitVec phi = lat.x_syndrome(err) & past;
    auto iface = interface_vertices(lat, layer);
    std::vector<bool> boundary_vertex(lat.num_vertices(), false);
    for (uint32_t v : iface) boundary_vertex[v] = true;
    for (uint32_t v = lat.num_cells(); v < lat.num_vertices(); v++) boundary_vertex[v] = true;
    std::vector<uint32_t> links;
    past.for_each_one([&](size_t e) {
        if (boundary_vertex[lat.edges[e].u] && boundary_vertex[lat.edges[e].v]) links.push_back(static_cast<uint32_t>(e));
    });
    for (int k = 0; k < num_links && !links.empty(); k++) phi.flip(links[rng() % links.size()]);
    return phi;
}

}  // namespace colorjit
