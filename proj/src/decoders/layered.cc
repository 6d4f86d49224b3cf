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

#include "colorjit/decoders/layered.h"

#include <stdexcept>

#include "colorjit/errors.h"

namespace colorjit {

LayeredDecoders::LayeredDecoders(const Lattice &lat, LayeredDecoderOptions opts)
    : lat_(&lat), graph_(SyndromeGraph::from_lattice(lat)) {
    int n = lat.layers.num_layers;
    size_t base_edges = graph_.num_edges();
    if (opts.interface_cost > 0) {
        // Every cell gets a private absorbing twin reached at the given cost; the twin
        // edges only enter the open problems.
        for (uint32_t c = 0; c < lat.num_cells(); c++) {
            uint32_t t = graph_.add_vertex(true);
            graph_.add_edge(c, t, opts.interface_cost);
        }
    }
    for (int i = 0; i <= n; i++) {
        BitVec p(graph_.num_edges());
        BitVec faces = lat.faces_upto(i);
        faces.for_each_one([&](size_t e) { p.set(e); });
        BitVec f(graph_.num_edges());
        for (size_t e = 0; e < base_edges; e++) f.set(e, !p.get(e));

        SubgraphView open{p, graph_.outer};
        if (opts.interface_cost > 0) {
            for (uint32_t c = 0; c < lat.num_cells(); c++) {
                if (lat.layers.cell_layer[c] > i) open.edges.set(base_edges + c);
            }
        } else {
            for (uint32_t c = 0; c < lat.num_cells(); c++) {
                if (lat.layers.cell_layer[c] > i) open.absorbing[c] = true;
            }
        }
        SubgraphView closed{f, graph_.outer};
        past_.push_back(p);
        future_.push_back(f);
        open_.push_back(std::make_unique<MatchingDecoder>(graph_, std::move(open)));
        closed_.push_back(std::make_unique<MatchingDecoder>(graph_, std::move(closed)));
    }
}

BitVec LayeredDecoders::open_correction(int i, const BitVec &omega) const {
    if (!omega.subset_of(past(i))) throw std::invalid_argument("open_correction: omega leaves the layer");
    const MatchingDecoder &d = open(i);
    BitVec c = d.correction(omega);
    // Twin edges (positive interface cost) stand for absorption and carry no face.
    for (size_t e = lat_->num_faces(); e < c.size(); e++) c.set(e, false);
    return c;
}

BitVec LayeredDecoders::open_decoder(int i, const BitVec &omega) const { return omega ^ open_correction(i, omega); }

BitVec LayeredDecoders::estimated_error(int i, const BitVec &phi) const {
    const MatchingDecoder &d = closed(i);
    std::vector<uint32_t> defects = syndrome_of(graph_, phi);
    for (uint32_t v : defects) {
        if (lat_->layers.cell_layer[v] <= i) {
            throw NoMatch("estimated_error: charge on cell " + std::to_string(v) + " inside layer " + std::to_string(i));
        }
    }
    return d.decode(defects);
}

BitVec LayeredDecoders::closed_decoder(int i, const BitVec &omega) const {
    if (!omega.subset_of(future(i))) throw std::invalid_argument("closed_decoder: omega meets the layer");
    return omega ^ estimated_error(i, omega);
}

BitVec LayeredDecoders::closure_decoder(int i, const BitVec &phi) const { return phi ^ estimated_error(i, phi); }

BitVec LayeredDecoders::conventional(const BitVec &omega) const { return omega ^ full().correction(omega); }

}  // namespace colorjit
