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

#include "colorjit/colex/serialize.h"

#include "colorjit/errors.h"

namespace colorjit {

using nlohmann::json;

json lattice_to_json(const Lattice &lat) {
    json j;
    j["format"] = "colorjit.lattice";
    j["version"] = LATTICE_FORMAT_VERSION;
    j["family"] = family_name(lat.family);
    j["size"] = lat.size;
    j["thickness"] = lat.thickness;
    j["offsets"] = lat.offsets;
    j["num_layers"] = lat.layers.num_layers;
    json vs = json::array();
    for (uint32_t v = 0; v < lat.num_vertices(); v++) {
        const auto &dv = lat.vertices[v];
        json o;
        o["color"] = std::string(1, color_char(dv.color));
        o["kind"] = dv.kind == VertexKind::Inner ? "inner" : "outer";
        if (dv.kind == VertexKind::Inner) {
            o["pos"] = dv.pos;
            o["layer"] = lat.layers.cell_layer[v];
        }
        vs.push_back(o);
    }
    j["vertices"] = vs;
    json es = json::array();
    for (const auto &e : lat.edges) {
        es.push_back(json{{"u", e.u}, {"v", e.v}, {"flux", e.label.str()}, {"border", e.border}});
    }
    j["edges"] = es;
    json ts = json::array();
    for (const auto &t : lat.triangles) ts.push_back(t.v);
    j["triangles"] = ts;
    json qs = json::array();
    for (const auto &q : lat.tets) qs.push_back(q.v);
    j["qubits"] = qs;
    return j;
}

Lattice lattice_from_json(const json &j) {
    if (j.value("format", "") != "colorjit.lattice") throw ParseError("not a colorjit lattice document");
    if (j.value("version", 0) != LATTICE_FORMAT_VERSION) throw ParseError("unsupported lattice format version");
    Lattice lat;
    lat.family = parse_family(j.at("family").get<std::string>());
    lat.size = j.at("size").get<int>();
    lat.thickness = j.at("thickness").get<int>();
    lat.offsets = j.at("offsets").get<std::array<int, 4>>();
    lat.layers.num_layers = j.at("num_layers").get<int>();
    for (const auto &o : j.at("vertices")) {
        DualVertex dv;
        dv.color = color_from_char(o.at("color").get<std::string>().at(0));
        dv.kind = o.at("kind").get<std::string>() == "inner" ? VertexKind::Inner : VertexKind::Outer;
        if (dv.kind == VertexKind::Inner) dv.pos = o.at("pos").get<std::array<int, 3>>();
        lat.vertices.push_back(dv);
        lat.layers.cell_layer.push_back(dv.kind == VertexKind::Inner ? o.at("layer").get<int>() : 0);
    }
    for (const auto &o : j.at("edges")) {
        DualEdge e;
        e.u = o.at("u").get<uint32_t>();
        e.v = o.at("v").get<uint32_t>();
        if (e.u >= lat.vertices.size() || e.v >= lat.vertices.size()) throw ParseError("edge endpoint out of range");
        lat.edges.push_back(e);
    }
    lat.finalize();
    size_t k = 0;
    for (const auto &o : j.at("edges")) {
        if (lat.edges[k].label.str() != o.at("flux").get<std::string>()) throw ParseError("edge flux label mismatch");
        k++;
    }
    auto edge_of = [&](uint32_t a, uint32_t b) {
        int64_t e = lat.find_edge(a, b);
        if (e < 0) throw ParseError("simplex uses a missing edge");
        return static_cast<uint32_t>(e);
    };
    for (const auto &t : j.at("triangles")) {
        DualTriangle dt;
        dt.v = t.get<std::array<uint32_t, 3>>();
        dt.e = {edge_of(dt.v[0], dt.v[1]), edge_of(dt.v[0], dt.v[2]), edge_of(dt.v[1], dt.v[2])};
        lat.triangles.push_back(dt);
    }
    for (const auto &q : j.at("qubits")) {
        DualTet dt;
        dt.v = q.get<std::array<uint32_t, 4>>();
        int w = 0;
        for (int a = 0; a < 4; a++) {
            for (int b = a + 1; b < 4; b++) dt.e[w++] = edge_of(dt.v[a], dt.v[b]);
        }
        lat.tets.push_back(dt);
    }
    lat.finalize();
    return lat;
}

}  // namespace colorjit
