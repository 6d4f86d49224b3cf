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

#include "colorjit/decoders/mwpm.h"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "colorjit/decoders/matching.h"
#include "colorjit/errors.h"

namespace colorjit {

SubgraphView SubgraphView::full(const SyndromeGraph &g) {
    return SubgraphView{~BitVec(g.num_edges()), g.outer};
}

MatchingDecoder::MatchingDecoder(const SyndromeGraph &g) : MatchingDecoder(g, SubgraphView::full(g)) {}

MatchingDecoder::MatchingDecoder(const SyndromeGraph &g, SubgraphView view) : g_(&g), view_(std::move(view)) {
    size_t nv = g.num_vertices();
    if (view_.edges.size() != g.num_edges() || view_.absorbing.size() != nv) {
        throw std::invalid_argument("MatchingDecoder: view does not match graph");
    }
    std::vector<bool> touched(nv, false);
    view_.edges.for_each_one([&](size_t e) { touched[g.edges[e].u] = touched[g.edges[e].v] = true; });
    slot_.assign(nv, -1);
    for (uint32_t v = 0; v < nv; v++) {
        if (!touched[v] || view_.absorbing[v]) continue;
        slot_[v] = static_cast<int64_t>(dist_.size());
        std::vector<int64_t> dist(nv, UNREACHABLE), pred(nv, -1);
        using Item = std::pair<int64_t, uint32_t>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        dist[v] = 0;
        pq.push({0, v});
        while (!pq.empty()) {
            auto [d, x] = pq.top();
            pq.pop();
            if (d != dist[x]) continue;
            if (x != v && view_.absorbing[x]) continue;
            for (uint32_t e : g.incident[x]) {
                if (!view_.edges.get(e)) continue;
                uint32_t y = g.other_end(e, x);
                int64_t nd = d + g.weights[e];
                if (nd < dist[y]) {
                    dist[y] = nd;
                    pred[y] = e;
                    pq.push({nd, y});
                }
            }
        }
        int64_t best = -1;
        for (uint32_t y = 0; y < nv; y++) {
            if (view_.absorbing[y] && dist[y] < UNREACHABLE && (best < 0 || dist[y] < dist[static_cast<size_t>(best)])) {
                best = y;
            }
        }
        boundary_.push_back(best);
        dist_.push_back(std::move(dist));
        pred_.push_back(std::move(pred));
    }
}

std::vector<uint32_t> MatchingDecoder::defects_of(const BitVec &chain) const {
    std::vector<uint8_t> parity(g_->num_vertices(), 0);
    chain.for_each_one([&](size_t e) {
        parity[g_->edges[e].u] ^= 1;
        parity[g_->edges[e].v] ^= 1;
    });
    std::vector<uint32_t> out;
    for (uint32_t v = 0; v < parity.size(); v++) {
        if (parity[v] && !view_.absorbing[v]) out.push_back(v);
    }
    return out;
}

int64_t MatchingDecoder::distance(uint32_t u, uint32_t v) const {
    if (u == v) return 0;
    int64_t s = slot_[u];
    if (s < 0) return UNREACHABLE;
    return dist_[static_cast<size_t>(s)][v];
}

int64_t MatchingDecoder::boundary_distance(uint32_t v) const {
    int64_t s = slot_[v];
    if (s < 0) return view_.absorbing[v] ? 0 : UNREACHABLE;
    int64_t b = boundary_[static_cast<size_t>(s)];
    return b < 0 ? UNREACHABLE : dist_[static_cast<size_t>(s)][static_cast<size_t>(b)];
}

void MatchingDecoder::add_path(size_t row, uint32_t target, BitVec &out) const {
    uint32_t x = target;
    while (pred_[row][x] >= 0) {
        uint32_t e = static_cast<uint32_t>(pred_[row][x]);
        out.flip(e);
        x = g_->other_end(e, x);
    }
}

BitVec MatchingDecoder::decode(const std::vector<uint32_t> &defects) const {
    BitVec out(g_->num_edges());
    std::vector<uint32_t> ds;
    for (uint32_t v : defects) {
        if (view_.absorbing[v]) continue;
        if (slot_[v] < 0) throw NoMatch("decode: defect " + std::to_string(v) + " is isolated");
        ds.push_back(v);
    }
    std::sort(ds.begin(), ds.end());
    if (std::adjacent_find(ds.begin(), ds.end()) != ds.end()) throw std::invalid_argument("decode: repeated defect");
    size_t m = ds.size();
    if (m == 0) return out;
    std::vector<WeightedEdge> edges;
    for (uint32_t i = 0; i < m; i++) {
        for (uint32_t j = i + 1; j < m; j++) {
            int64_t d = distance(ds[i], ds[j]);
            if (d < UNREACHABLE) edges.push_back({i, j, d});
        }
        int64_t b = boundary_distance(ds[i]);
        if (b < UNREACHABLE) edges.push_back({i, static_cast<uint32_t>(m + i), b});
    }
    for (uint32_t i = 0; i < m; i++) {
        for (uint32_t j = i + 1; j < m; j++) edges.push_back({static_cast<uint32_t>(m + i), static_cast<uint32_t>(m + j), 0});
    }
    auto mate = min_weight_perfect_matching(2 * m, edges);
    if (!mate) throw NoMatch("decode: charges cannot be paired or absorbed");
    for (size_t i = 0; i < m; i++) {
        size_t row = static_cast<size_t>(slot_[ds[i]]);
        size_t j = static_cast<size_t>((*mate)[i]);
        if (j >= m) {
            add_path(row, static_cast<uint32_t>(boundary_[row]), out);
        } else if (j > i) {
            add_path(row, ds[j], out);
        }
    }
    return out;
}

BitVec mwpm_decode(const SyndromeGraph &g, const std::vector<uint32_t> &defects) {
    return MatchingDecoder(g).decode(defects);
}

namespace {

BitVec exhaustive(const SyndromeGraph &g, const SubgraphView &view, const std::vector<uint32_t> &defects) {
    std::vector<uint32_t> es;
    view.edges.for_each_one([&](size_t e) { es.push_back(static_cast<uint32_t>(e)); });
    std::vector<int64_t> bit(g.num_vertices(), -1);
    uint64_t target = 0, care = 0;
    int next = 0;
    auto vbit = [&](uint32_t v) {
        if (bit[v] < 0) bit[v] = next++;
        return uint64_t{1} << bit[v];
    };
    std::vector<uint64_t> emask(es.size());
    for (size_t k = 0; k < es.size(); k++) emask[k] = vbit(g.edges[es[k]].u) | vbit(g.edges[es[k]].v);
    for (uint32_t v = 0; v < g.num_vertices(); v++) {
        if (bit[v] >= 0 && !view.absorbing[v]) care |= uint64_t{1} << bit[v];
    }
    for (uint32_t v : defects) {
        if (view.absorbing[v]) continue;
        if (bit[v] < 0) throw NoMatch("bruteforce_decode: defect is isolated");
        target ^= uint64_t{1} << bit[v];
    }
    // Gray-code walk over all subsets.
    uint64_t parity = 0, subset = 0, best_subset = 0;
    int64_t weight = 0, best = -1;
    if ((parity & care) == target) best = 0;
    for (uint64_t step = 1; step < (uint64_t{1} << es.size()); step++) {
        size_t k = static_cast<size_t>(std::countr_zero(step));
        subset ^= uint64_t{1} << k;
        parity ^= emask[k];
        weight += (subset >> k & 1) ? g.weights[es[k]] : -g.weights[es[k]];
        if ((parity & care) == target && (best < 0 || weight < best)) {
            best = weight;
            best_subset = subset;
        }
    }
    if (best < 0) throw NoMatch("bruteforce_decode: infeasible syndrome");
    BitVec out(g.num_edges());
    for (size_t k = 0; k < es.size(); k++) {
        if (best_subset >> k & 1) out.set(es[k]);
    }
    return out;
}

// Plain O(V^2) Dijkstra, kept separate from the production tables.
void plain_dijkstra(const SyndromeGraph &g, const SubgraphView &view, uint32_t src, std::vector<int64_t> &dist,
                    std::vector<int64_t> &pred) {
    size_t nv = g.num_vertices();
    dist.assign(nv, MatchingDecoder::UNREACHABLE);
    pred.assign(nv, -1);
    std::vector<bool> done(nv, false);
    dist[src] = 0;
    while (true) {
        int64_t x = -1;
        for (uint32_t v = 0; v < nv; v++) {
            if (!done[v] && dist[v] < MatchingDecoder::UNREACHABLE && (x < 0 || dist[v] < dist[static_cast<size_t>(x)])) x = v;
        }
        if (x < 0) break;
        done[static_cast<size_t>(x)] = true;
        if (x != src && view.absorbing[static_cast<size_t>(x)]) continue;
        for (uint32_t e : g.incident[static_cast<size_t>(x)]) {
            if (!view.edges.get(e)) continue;
            uint32_t y = g.other_end(e, static_cast<uint32_t>(x));
            if (dist[static_cast<size_t>(x)] + g.weights[e] < dist[y]) {
                dist[y] = dist[static_cast<size_t>(x)] + g.weights[e];
                pred[y] = e;
            }
        }
    }
}

BitVec pairing_dp(const SyndromeGraph &g, const SubgraphView &view, const std::vector<uint32_t> &defects) {
    std::vector<uint32_t> ds;
    for (uint32_t v : defects) {
        if (!view.absorbing[v]) ds.push_back(v);
    }
    size_t m = ds.size();
    if (m > 12) throw std::invalid_argument("bruteforce_decode: instance too large");
    constexpr int64_t INF = MatchingDecoder::UNREACHABLE;
    std::vector<std::vector<int64_t>> dist(m), pred(m);
    std::vector<int64_t> bdist(m, INF), bvert(m, -1);
    for (size_t i = 0; i < m; i++) {
        plain_dijkstra(g, view, ds[i], dist[i], pred[i]);
        for (uint32_t v = 0; v < g.num_vertices(); v++) {
            if (view.absorbing[v] && dist[i][v] < bdist[i]) {
                bdist[i] = dist[i][v];
                bvert[i] = v;
            }
        }
    }
    size_t full = size_t{1} << m;
    std::vector<int64_t> cost(full, INF), choice(full, -2);
    cost[0] = 0;
    for (size_t mask = 1; mask < full; mask++) {
        size_t i = static_cast<size_t>(std::countr_zero(mask));
        size_t rest = mask & ~(size_t{1} << i);
        if (bdist[i] < INF && cost[rest] < INF && bdist[i] + cost[rest] < cost[mask]) {
            cost[mask] = bdist[i] + cost[rest];
            choice[mask] = -1;
        }
        for (size_t j = i + 1; j < m; j++) {
            if (!(rest >> j & 1)) continue;
            size_t r2 = rest & ~(size_t{1} << j);
            int64_t d = dist[i][ds[j]];
            if (d < INF && cost[r2] < INF && d + cost[r2] < cost[mask]) {
                cost[mask] = d + cost[r2];
                choice[mask] = static_cast<int64_t>(j);
            }
        }
    }
    if (cost[full - 1] >= INF) throw NoMatch("bruteforce_decode: infeasible syndrome");
    BitVec out(g.num_edges());
    auto walk = [&](size_t i, uint32_t target) {
        uint32_t x = target;
        while (pred[i][x] >= 0) {
            uint32_t e = static_cast<uint32_t>(pred[i][x]);
            out.flip(e);
            x = g.other_end(e, x);
        }
    };
    size_t mask = full - 1;
    while (mask) {
        size_t i = static_cast<size_t>(std::countr_zero(mask));
        int64_t c = choice[mask];
        mask &= ~(size_t{1} << i);
        if (c == -1) {
            walk(i, static_cast<uint32_t>(bvert[i]));
        } else {
            walk(i, ds[static_cast<size_t>(c)]);
            mask &= ~(size_t{1} << c);
        }
    }
    return out;
}

}  // namespace

BitVec bruteforce_decode(const SyndromeGraph &g, const std::vector<uint32_t> &defects) {
    return bruteforce_decode(g, SubgraphView::full(g), defects);
}

BitVec bruteforce_decode(const SyndromeGraph &g, const SubgraphView &view, const std::vector<uint32_t> &defects) {
    if (view.edges.popcount() <= 24) return exhaustive(g, view, defects);
    return pairing_dp(g, view, defects);
}

}  // namespace colorjit
