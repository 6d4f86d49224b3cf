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

#include "colorjit/colex/lattice.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "colorjit/errors.h"

namespace colorjit {

namespace {

using Point = std::array<int, 3>;

constexpr int PLANE_NORMALS[4][3] = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};

int plane_value(const Point &p, int k) {
    return PLANE_NORMALS[k][0] * p[0] + PLANE_NORMALS[k][1] * p[1] + PLANE_NORMALS[k][2] * p[2];
}

int mod(int a, int m) { return ((a % m) + m) % m; }

// Even sites carry colours r/g, odd (body centre) sites b/y.
Color site_color(const Point &p) {
    int s = p[0] + p[1] + p[2];
    if (mod(p[0], 2) == 0) return mod(s / 2, 2) == 0 ? Color::R : Color::G;
    return mod((s - 3) / 2, 2) == 0 ? Color::B : Color::Y;
}

// Colour of the sites lying on a plane with the given offset.
Color plane_color(int offset) {
    switch (mod(offset, 4)) {
        case 0:
            return Color::R;
        case 2:
            return Color::G;
        case 3:
            return Color::B;
        default:
            return Color::Y;
    }
}

uint64_t pair_key(uint32_t a, uint32_t b) {
    if (a > b) std::swap(a, b);
    return (uint64_t{a} << 32) | b;
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::Slab:
            return "slab";
        case Family::Wedge:
            return "wedge";
        case Family::Forbidden:
            return "forbidden";
    }
    return "?";
}

Family parse_family(const std::string &name) {
    if (name == "slab") return Family::Slab;
    if (name == "wedge") return Family::Wedge;
    if (name == "forbidden") return Family::Forbidden;
    throw InvalidGeometry("unknown geometry family '" + name + "'");
}

std::array<int, 4> offsets_for_size(int size) {
    if (size < 2) throw InvalidGeometry("size must be at least 2");
    std::array<int, 4> c{4, 2, 3, 1};
    for (int step = 0; step < size - 2; step++) c[(step + 1) % 4] += 4;
    return c;
}

int64_t Lattice::find_edge(uint32_t u, uint32_t v) const {
    auto it = edge_index_.find(pair_key(u, v));
    return it == edge_index_.end() ? -1 : static_cast<int64_t>(it->second);
}

void Lattice::finalize() {
    size_t nv = vertices.size();
    cells = 0;
    outer_of_color = {-1, -1, -1, -1};
    for (size_t v = 0; v < nv; v++) {
        if (vertices[v].kind == VertexKind::Inner) {
            if (cells != v) throw InvalidGeometry("inner vertices must precede outer vertices");
            cells++;
        } else {
            auto &slot = outer_of_color[static_cast<int>(vertices[v].color)];
            if (slot >= 0) throw InvalidGeometry("two outer vertices share a colour");
            slot = static_cast<int64_t>(v);
        }
    }
    faces = 0;
    edge_index_.clear();
    vertex_edges.assign(nv, {});
    for (uint32_t e = 0; e < edges.size(); e++) {
        auto &ed = edges[e];
        ed.border = is_outer(ed.u) && is_outer(ed.v);
        ed.label = Flux::edge_label(vertices[ed.u].color, vertices[ed.v].color);
        if (vertices[ed.u].color == vertices[ed.v].color) throw InvalidGeometry("edge joins two vertices of one colour");
        if (!ed.border) {
            if (faces != e) throw InvalidGeometry("face edges must precede border edges");
            faces++;
        }
        if (!edge_index_.emplace(pair_key(ed.u, ed.v), e).second) throw InvalidGeometry("duplicate edge");
        vertex_edges[ed.u].push_back(e);
        vertex_edges[ed.v].push_back(e);
    }
    vertex_triangles.assign(nv, {});
    edge_triangles.assign(edges.size(), {});
    for (uint32_t t = 0; t < triangles.size(); t++) {
        for (uint32_t v : triangles[t].v) vertex_triangles[v].push_back(t);
        for (uint32_t e : triangles[t].e) edge_triangles[e].push_back(t);
    }
    vertex_tets.assign(nv, {});
    edge_tets.assign(edges.size(), {});
    for (uint32_t q = 0; q < tets.size(); q++) {
        for (uint32_t v : tets[q].v) vertex_tets[v].push_back(q);
        for (uint32_t e : tets[q].e) edge_tets[e].push_back(q);
    }
    if (layers.cell_layer.size() != nv) {
        layers.num_layers = cells ? 1 : 0;
        layers.cell_layer.assign(nv, 0);
        for (uint32_t v = 0; v < cells; v++) layers.cell_layer[v] = 1;
    }
    layers.face_layer.assign(faces, 0);
    for (uint32_t e = 0; e < faces; e++) {
        int best = 0;
        for (uint32_t v : {edges[e].u, edges[e].v}) {
            if (!is_outer(v) && (best == 0 || layers.cell_layer[v] < best)) best = layers.cell_layer[v];
        }
        layers.face_layer[e] = best;
    }
    layers.qubit_layer.assign(tets.size(), 0);
    for (uint32_t q = 0; q < tets.size(); q++) {
        int best = 0;
        for (uint32_t v : tets[q].v) {
            if (!is_outer(v) && (best == 0 || layers.cell_layer[v] < best)) best = layers.cell_layer[v];
        }
        layers.qubit_layer[q] = best;
    }
}

BitVec Lattice::cells_upto(int i) const {
    BitVec r(cells);
    for (uint32_t v = 0; v < cells; v++) r.set(v, layers.cell_layer[v] <= i);
    return r;
}

BitVec Lattice::faces_upto(int i) const {
    BitVec r(faces);
    for (uint32_t e = 0; e < faces; e++) r.set(e, layers.face_layer[e] <= i);
    return r;
}

BitVec Lattice::faces_at(int i) const {
    BitVec r(faces);
    for (uint32_t e = 0; e < faces; e++) r.set(e, layers.face_layer[e] == i);
    return r;
}

BitVec Lattice::qubits_upto(int i) const {
    BitVec r(tets.size());
    for (uint32_t q = 0; q < tets.size(); q++) r.set(q, layers.qubit_layer[q] <= i);
    return r;
}

BitMatrix Lattice::cell_checks() const {
    BitMatrix m(0, tets.size());
    for (uint32_t v = 0; v < cells; v++) {
        BitVec r(tets.size());
        for (uint32_t q : vertex_tets[v]) r.set(q);
        m.push_back(std::move(r));
    }
    return m;
}

BitMatrix Lattice::facet_checks() const {
    BitMatrix m(0, tets.size());
    for (uint32_t v = cells; v < vertices.size(); v++) {
        BitVec r(tets.size());
        for (uint32_t q : vertex_tets[v]) r.set(q);
        m.push_back(std::move(r));
    }
    return m;
}

BitMatrix Lattice::face_checks() const {
    BitMatrix m(0, tets.size());
    for (uint32_t e = 0; e < faces; e++) {
        BitVec r(tets.size());
        for (uint32_t q : edge_tets[e]) r.set(q);
        m.push_back(std::move(r));
    }
    return m;
}

std::vector<Flux> Lattice::boundary(const BitVec &config) const {
    if (config.size() != faces && config.size() != edges.size()) {
        throw std::invalid_argument("boundary: configuration length matches neither faces nor edges");
    }
    std::vector<Flux> charge(vertices.size());
    config.for_each_one([&](size_t e) {
        charge[edges[e].u] += edges[e].label;
        charge[edges[e].v] += edges[e].label;
    });
    return charge;
}

bool Lattice::is_syndrome(const BitVec &faces_config) const {
    auto charge = boundary(faces_config);
    for (uint32_t v = 0; v < cells; v++) {
        if (!charge[v].is_zero()) return false;
    }
    return true;
}

BitVec Lattice::x_syndrome(const BitVec &qubit_mask) const {
    BitVec r(faces);
    qubit_mask.for_each_one([&](size_t q) {
        for (uint32_t e : tets[q].e) {
            if (!edges[e].border) r.flip(e);
        }
    });
    return r;
}

void assign_layers(Lattice &lat, Family family, int thickness) {
    if (thickness < 1) throw InvalidGeometry("layer thickness must be positive");
    lat.family = family;
    lat.thickness = thickness;
    // Time function and the number of consecutive time levels merged into one unit
    // layer; the merge factor is the smallest one that keeps every layer a ball.
    int base = 1;
    auto time_of = [&](const DualVertex &v) {
        int s = v.pos[0] + v.pos[1] + v.pos[2];
        switch (family) {
            case Family::Slab:
                return v.pos[0];
            case Family::Wedge:
                return s;
            case Family::Forbidden:
                return -s;
        }
        return 0;
    };
    if (family == Family::Wedge) base = 4;
    if (family == Family::Forbidden) base = 3;
    std::set<int> levels;
    for (uint32_t v = 0; v < lat.cells; v++) levels.insert(time_of(lat.vertices[v]));
    std::map<int, int> level_rank;
    int r = 0;
    for (int t : levels) level_rank[t] = r++;
    lat.layers.cell_layer.assign(lat.vertices.size(), 0);
    int n = 0;
    for (uint32_t v = 0; v < lat.cells; v++) {
        int layer = level_rank[time_of(lat.vertices[v])] / (base * thickness) + 1;
        lat.layers.cell_layer[v] = layer;
        n = std::max(n, layer);
    }
    lat.layers.num_layers = n;
    lat.finalize();
}

Lattice build_lattice_with_offsets(Family family, const std::array<int, 4> &offsets, int thickness) {
    std::array<Color, 4> facet_color;
    for (int k = 0; k < 4; k++) facet_color[k] = plane_color(offsets[k]);
    {
        std::set<Color> distinct(facet_color.begin(), facet_color.end());
        if (distinct.size() != 4) throw InvalidGeometry("plane offsets must give four distinct facet colours");
    }
    auto inside = [&](const Point &p) {
        for (int k = 0; k < 4; k++) {
            if (plane_value(p, k) > offsets[k]) return false;
        }
        return true;
    };
    auto on_plane = [&](const Point &p) {
        for (int k = 0; k < 4; k++) {
            if (plane_value(p, k) == offsets[k]) return k;
        }
        return -1;
    };
    int bound = offsets[0] + offsets[1] + offsets[2] + offsets[3] + 2;

    // Collect the tetrahedra of the body-centred-cubic tetrahedralization inside the
    // closed region. Each one owns exactly one even-even edge, enumerated from its
    // lower endpoint.
    std::vector<std::array<Point, 4>> raw;
    for (int x = -bound; x <= bound; x += 2) {
        for (int y = -bound; y <= bound; y += 2) {
            for (int z = -bound; z <= bound; z += 2) {
                Point p{x, y, z};
                if (!inside(p)) continue;
                for (int a = 0; a < 3; a++) {
                    Point q = p, mid = p;
                    q[a] += 2;
                    mid[a] += 1;
                    int b = (a + 1) % 3, c = (a + 2) % 3;
                    std::array<Point, 4> sq;
                    const int signs[4][2] = {{1, 1}, {1, -1}, {-1, -1}, {-1, 1}};
                    for (int s = 0; s < 4; s++) {
                        sq[s] = mid;
                        sq[s][b] += signs[s][0];
                        sq[s][c] += signs[s][1];
                    }
                    for (int s = 0; s < 4; s++) {
                        std::array<Point, 4> t{p, q, sq[s], sq[(s + 1) % 4]};
                        if (std::all_of(t.begin(), t.end(), inside)) raw.push_back(t);
                    }
                }
            }
        }
    }

    // Inner vertices sorted by position, then one outer vertex per facet colour.
    std::set<Point> inner_points;
    for (const auto &t : raw) {
        for (const auto &p : t) {
            if (on_plane(p) < 0) inner_points.insert(p);
        }
    }
    Lattice lat;
    lat.offsets = offsets;
    std::map<Point, uint32_t> inner_id;
    for (const auto &p : inner_points) {
        inner_id[p] = static_cast<uint32_t>(lat.vertices.size());
        lat.vertices.push_back(DualVertex{site_color(p), VertexKind::Inner, p});
    }
    uint32_t num_inner = static_cast<uint32_t>(lat.vertices.size());
    std::array<uint32_t, 4> outer_id{};
    for (Color c : ALL_COLORS) {
        outer_id[static_cast<int>(c)] = static_cast<uint32_t>(lat.vertices.size());
        lat.vertices.push_back(DualVertex{c, VertexKind::Outer, {0, 0, 0}});
    }
    auto vid = [&](const Point &p) -> uint32_t {
        int k = on_plane(p);
        if (k >= 0) {
            if (site_color(p) != facet_color[k]) throw InvalidGeometry("plane holds sites of a foreign colour");
            return outer_id[static_cast<int>(facet_color[k])];
        }
        return inner_id.at(p);
    };

    std::set<std::array<uint32_t, 4>> tet_set;
    for (const auto &t : raw) {
        std::array<uint32_t, 4> ids{vid(t[0]), vid(t[1]), vid(t[2]), vid(t[3])};
        if (std::all_of(ids.begin(), ids.end(), [&](uint32_t v) { return v >= num_inner; })) continue;
        std::sort(ids.begin(), ids.end());
        if (!tet_set.insert(ids).second) throw InvalidGeometry("duplicate tetrahedron after identification");
    }

    std::set<std::pair<uint32_t, uint32_t>> face_pairs, border_pairs;
    std::set<std::array<uint32_t, 3>> tri_set;
    for (const auto &t : tet_set) {
        for (int i = 0; i < 4; i++) {
            for (int j = i + 1; j < 4; j++) {
                auto pr = std::make_pair(t[i], t[j]);
                if (t[i] >= num_inner && t[j] >= num_inner) {
                    border_pairs.insert(pr);
                } else {
                    face_pairs.insert(pr);
                }
            }
        }
        for (int skip = 0; skip < 4; skip++) {
            std::array<uint32_t, 3> tri;
            int w = 0;
            for (int i = 0; i < 4; i++) {
                if (i != skip) tri[w++] = t[i];
            }
            if (tri[0] < num_inner) tri_set.insert(tri);
        }
    }
    for (const auto &pr : face_pairs) lat.edges.push_back(DualEdge{pr.first, pr.second, Flux(), false});
    for (const auto &pr : border_pairs) lat.edges.push_back(DualEdge{pr.first, pr.second, Flux(), true});
    lat.finalize();
    for (const auto &tri : tri_set) {
        DualTriangle dt;
        dt.v = tri;
        dt.e = {static_cast<uint32_t>(lat.find_edge(tri[0], tri[1])), static_cast<uint32_t>(lat.find_edge(tri[0], tri[2])),
                static_cast<uint32_t>(lat.find_edge(tri[1], tri[2]))};
        lat.triangles.push_back(dt);
    }
    for (const auto &t : tet_set) {
        DualTet dt;
        dt.v = t;
        int w = 0;
        for (int i = 0; i < 4; i++) {
            for (int j = i + 1; j < 4; j++) dt.e[w++] = static_cast<uint32_t>(lat.find_edge(t[i], t[j]));
        }
        lat.tets.push_back(dt);
    }
    lat.finalize();
    assign_layers(lat, family, thickness);
    return lat;
}

Lattice build_lattice(Family family, int size, int thickness) {
    Lattice lat = build_lattice_with_offsets(family, offsets_for_size(size), thickness);
    lat.size = size;
    return lat;
}

}  // namespace colorjit
