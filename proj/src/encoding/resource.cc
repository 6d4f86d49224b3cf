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

#include "colorjit/encoding/resource.h"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

#include "colorjit/colex/serialize.h"
#include "colorjit/errors.h"

namespace colorjit {

std::string basis_name(MeasBasis b) {
    switch (b) {
        case MeasBasis::X:
            return "X";
        case MeasBasis::Y:
            return "Y";
        case MeasBasis::Z:
            return "Z";
        case MeasBasis::XPlusY:
            return "X+Y";
        case MeasBasis::XMinusY:
            return "X-Y";
    }
    return "?";
}

MeasBasis parse_basis(const std::string &name) {
    if (name == "X") return MeasBasis::X;
    if (name == "Y") return MeasBasis::Y;
    if (name == "Z") return MeasBasis::Z;
    if (name == "X+Y") return MeasBasis::XPlusY;
    if (name == "X-Y") return MeasBasis::XMinusY;
    throw ParseError("unknown basis '" + name + "'");
}

uint32_t LogicalGraph::add_vertex(MeasBasis b) {
    basis.push_back(b);
    return static_cast<uint32_t>(basis.size() - 1);
}

void LogicalGraph::add_edge(uint32_t u, uint32_t v) {
    if (u == v) throw std::invalid_argument("logical graph: self loop");
    if (u >= num_vertices() || v >= num_vertices()) throw std::out_of_range("logical graph: vertex out of range");
    std::pair<uint32_t, uint32_t> e{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) edges.insert(it, e);
}

std::vector<std::vector<uint32_t>> LogicalGraph::adjacency() const {
    std::vector<std::vector<uint32_t>> adj(num_vertices());
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

size_t LogicalGraph::max_degree() const {
    size_t m = 0;
    for (const auto &a : adjacency()) m = std::max(m, a.size());
    return m;
}

LogicalGraph parse_logical_graph(std::istream &in) {
    LogicalGraph lg;
    std::vector<std::pair<uint32_t, uint32_t>> pending;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string id_text, basis_text;
        if (!(ls >> id_text)) continue;
        auto where = [&] { return " on line " + std::to_string(line_no); };
        uint32_t id;
        try {
            size_t used = 0;
            unsigned long v = std::stoul(id_text, &used);
            if (used != id_text.size()) throw std::invalid_argument("");
            id = static_cast<uint32_t>(v);
        } catch (const std::exception &) {
            throw ParseError("bad vertex id '" + id_text + "'" + where());
        }
        if (id != lg.num_vertices()) throw ParseError("vertex ids must be consecutive" + where());
        if (!(ls >> basis_text)) throw ParseError("missing basis" + where());
        lg.add_vertex(parse_basis(basis_text));
        std::string nb;
        while (ls >> nb) {
            size_t used = 0;
            unsigned long v = 0;
            try {
                v = std::stoul(nb, &used);
            } catch (const std::exception &) {
                used = 0;
            }
            if (used == 0 || used != nb.size()) throw ParseError("bad neighbour '" + nb + "'" + where());
            if (v == id) throw ParseError("self loop" + where());
            pending.emplace_back(id, static_cast<uint32_t>(v));
        }
    }
    for (auto [u, v] : pending) {
        if (v >= lg.num_vertices()) throw ParseError("neighbour " + std::to_string(v) + " does not exist");
        lg.add_edge(u, v);
    }
    return lg;
}

LogicalGraph parse_logical_graph(const std::string &text) {
    std::istringstream in(text);
    return parse_logical_graph(in);
}

std::string format_logical_graph(const LogicalGraph &lg) {
    std::ostringstream out;
    auto adj = lg.adjacency();
    for (uint32_t v = 0; v < lg.num_vertices(); v++) {
        out << v << ' ' << basis_name(lg.basis[v]);
        for (uint32_t w : adj[v])
            if (w > v) out << ' ' << w;
        out << '\n';
    }
    return out.str();
}

size_t ResourceGraph::num_inner_edges() const {
    size_t n = 0;
    for (const auto &b : blocks)
        for (uint32_t f = 0; f < b.lattice->num_faces(); f++) n += b.lattice->edge_tets[f].size();
    return n;
}

size_t ResourceGraph::num_outer_edges() const {
    size_t n = 0;
    for (const auto &m : matchings) n += m.pairs.size();
    return n;
}

std::vector<std::vector<std::pair<uint32_t, uint32_t>>> ResourceGraph::partners(uint32_t block) const {
    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> out(blocks[block].lattice->num_qubits());
    for (const auto &m : matchings) {
        if (m.block_a == block)
            for (auto [qa, qb] : m.pairs) out[qa].emplace_back(m.block_b, qb);
        if (m.block_b == block)
            for (auto [qa, qb] : m.pairs) out[qb].emplace_back(m.block_a, qa);
    }
    return out;
}

std::vector<uint32_t> ResourceGraph::neighbours(uint32_t block) const {
    std::vector<uint32_t> out;
    for (const auto &m : matchings) {
        if (m.block_a == block) out.push_back(m.block_b);
        if (m.block_b == block) out.push_back(m.block_a);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<uint32_t> ResourceGraph::code_valence(uint32_t block) const {
    const Lattice &lat = *blocks[block].lattice;
    std::vector<uint32_t> val(lat.num_qubits(), 0);
    for (uint32_t f = 0; f < lat.num_faces(); f++)
        for (uint32_t q : lat.edge_tets[f]) val[q]++;
    auto p = partners(block);
    for (size_t q = 0; q < val.size(); q++) val[q] += static_cast<uint32_t>(p[q].size());
    return val;
}

std::vector<uint32_t> ResourceGraph::ancilla_valence(uint32_t block) const {
    const Lattice &lat = *blocks[block].lattice;
    std::vector<uint32_t> val(lat.num_faces());
    for (uint32_t f = 0; f < lat.num_faces(); f++) val[f] = static_cast<uint32_t>(lat.edge_tets[f].size());
    return val;
}

std::vector<uint32_t> facet_qubits(const Lattice &lat, Color c) {
    int64_t o = lat.outer_of_color[static_cast<int>(c)];
    if (o < 0) return {};
    std::vector<uint32_t> qs = lat.vertex_tets[o];
    std::sort(qs.begin(), qs.end());
    return qs;
}

namespace {

// Faces of the facet as qubit sets; two facets with equal qubit and face sets can be
// matched by the identity.
std::set<std::vector<uint32_t>> facet_faces(const Lattice &lat, Color c) {
    std::set<std::vector<uint32_t>> out;
    int64_t o = lat.outer_of_color[static_cast<int>(c)];
    if (o < 0) return out;
    for (uint32_t e : lat.vertex_edges[o]) {
        if (lat.edges[e].border) continue;
        std::vector<uint32_t> qs = lat.edge_tets[e];
        std::sort(qs.begin(), qs.end());
        out.insert(qs);
    }
    return out;
}

}  // namespace

ResourceGraph build_resource_graph(const LogicalGraph &lg, std::shared_ptr<const Lattice> lattice) {
    return build_resource_graph(lg, std::vector<std::shared_ptr<const Lattice>>(lg.num_vertices(), lattice));
}

ResourceGraph build_resource_graph(const LogicalGraph &lg,
                                   const std::vector<std::shared_ptr<const Lattice>> &lattices) {
    if (lattices.size() != lg.num_vertices()) throw std::invalid_argument("one lattice per logical vertex required");
    ResourceGraph rg;
    for (uint32_t v = 0; v < lg.num_vertices(); v++) {
        if (!lattices[v]) throw std::invalid_argument("missing lattice");
        rg.blocks.push_back(Block{v, lg.basis[v], lattices[v]});
    }
    std::vector<uint8_t> used(lg.num_vertices(), 0);
    for (auto [u, v] : lg.edges) {
        int pick = -1;
        for (int c = 0; c < 4 && pick < 0; c++)
            if (!((used[u] | used[v]) >> c & 1)) pick = c;
        if (pick < 0)
            throw FacetMismatch("no free facet for the link " + std::to_string(u) + "-" + std::to_string(v));
        used[u] |= static_cast<uint8_t>(1 << pick);
        used[v] |= static_cast<uint8_t>(1 << pick);
        Color c = static_cast<Color>(pick);
        const Lattice &la = *lattices[u];
        const Lattice &lb = *lattices[v];
        auto qa = facet_qubits(la, c);
        auto qb = facet_qubits(lb, c);
        if (qa.empty() || qa != qb || facet_faces(la, c) != facet_faces(lb, c))
            throw FacetMismatch(std::string("facet ") + color_char(c) + " of blocks " + std::to_string(u) + " and " +
                                std::to_string(v) + " differ");
        FacetMatching m{u, v, c, {}};
        for (uint32_t q : qa) m.pairs.emplace_back(q, q);
        rg.matchings.push_back(std::move(m));
    }
    return rg;
}

std::map<uint32_t, size_t> bulk_valence_histogram(const ResourceGraph &rg, uint32_t block) {
    const Lattice &lat = *rg.blocks[block].lattice;
    std::vector<bool> bulk(lat.num_qubits());
    for (size_t q = 0; q < lat.num_qubits(); q++) {
        bool b = true;
        for (uint32_t v : lat.tets[q].v) b = b && !lat.is_outer(v);
        bulk[q] = b;
    }
    auto cv = rg.code_valence(block);
    auto av = rg.ancilla_valence(block);
    std::map<uint32_t, size_t> hist;
    for (size_t q = 0; q < lat.num_qubits(); q++)
        if (bulk[q]) hist[cv[q]]++;
    for (uint32_t f = 0; f < lat.num_faces(); f++) {
        bool b = true;
        for (uint32_t q : lat.edge_tets[f]) b = b && bulk[q];
        if (b) hist[av[f]]++;
    }
    return hist;
}

nlohmann::json resource_graph_to_json(const ResourceGraph &rg) {
    using nlohmann::json;
    std::vector<const Lattice *> distinct;
    json blocks = json::array();
    for (const auto &b : rg.blocks) {
        auto it = std::find(distinct.begin(), distinct.end(), b.lattice.get());
        size_t idx = static_cast<size_t>(it - distinct.begin());
        if (it == distinct.end()) distinct.push_back(b.lattice.get());
        blocks.push_back(json{{"logical_vertex", b.logical_vertex}, {"basis", basis_name(b.basis)}, {"lattice", idx}});
    }
    json lattices = json::array();
    for (const Lattice *l : distinct) lattices.push_back(lattice_to_json(*l));
    json matchings = json::array();
    for (const auto &m : rg.matchings) {
        json pairs = json::array();
        for (auto [a, b] : m.pairs) pairs.push_back(json::array({a, b}));
        matchings.push_back(json{{"block_a", m.block_a},
                                 {"block_b", m.block_b},
                                 {"facet", std::string(1, color_char(m.color))},
                                 {"pairs", pairs}});
    }
    return json{{"format", "colorjit.resource"},
                {"version", 1},
                {"lattices", lattices},
                {"blocks", blocks},
                {"matchings", matchings},
                {"inner_edges", rg.num_inner_edges()},
                {"outer_edges", rg.num_outer_edges()}};
}

ResourceGraph resource_graph_from_json(const nlohmann::json &j) {
    if (j.value("format", "") != "colorjit.resource") throw ParseError("not a colorjit resource graph");
    if (j.value("version", 0) != 1) throw ParseError("unsupported resource graph version");
    try {
        std::vector<std::shared_ptr<const Lattice>> lattices;
        for (const auto &l : j.at("lattices")) lattices.push_back(std::make_shared<const Lattice>(lattice_from_json(l)));
        ResourceGraph rg;
        for (const auto &b : j.at("blocks")) {
            size_t idx = b.at("lattice").get<size_t>();
            if (idx >= lattices.size()) throw ParseError("lattice index out of range");
            rg.blocks.push_back(Block{b.at("logical_vertex").get<uint32_t>(),
                                      parse_basis(b.at("basis").get<std::string>()), lattices[idx]});
        }
        for (const auto &m : j.at("matchings")) {
            FacetMatching fm;
            fm.block_a = m.at("block_a").get<uint32_t>();
            fm.block_b = m.at("block_b").get<uint32_t>();
            if (fm.block_a >= rg.blocks.size() || fm.block_b >= rg.blocks.size())
                throw ParseError("matching block out of range");
            auto facet = m.at("facet").get<std::string>();
            if (facet.size() != 1) throw ParseError("bad facet colour");
            fm.color = color_from_char(facet[0]);
            for (const auto &p : m.at("pairs")) {
                auto a = p.at(0).get<uint32_t>(), b = p.at(1).get<uint32_t>();
                if (a >= rg.blocks[fm.block_a].lattice->num_qubits() || b >= rg.blocks[fm.block_b].lattice->num_qubits())
                    throw ParseError("matched qubit out of range");
                fm.pairs.emplace_back(a, b);
            }
            rg.matchings.push_back(std::move(fm));
        }
        return rg;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(e.what());
    }
}

}  // namespace colorjit
