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

#include "colorjit/noise/noise.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <ostream>
#include <stdexcept>

namespace colorjit {

NoiseSample sample_iid(double p, size_t universe, uint64_t seed) {
    std::mt19937_64 rng(seed);
    return NoiseSample{sample_iid(p, universe, rng), seed, p};
}

BitVec sample_iid(double p, size_t universe, std::mt19937_64 &rng) {
    if (!(p >= 0 && p <= 1)) throw std::invalid_argument("sample_iid: p outside [0, 1]");
    BitVec out(universe);
    if (p == 0) return out;
    std::bernoulli_distribution coin(p);
    for (size_t k = 0; k < universe; k++) {
        if (coin(rng)) out.set(k);
    }
    return out;
}

int total_radius(const std::vector<Ball> &balls) {
    int r = 0;
    for (const Ball &b : balls) r += b.radius;
    return r;
}

std::vector<int> graph_distances(const SyndromeGraph &g, uint32_t src) {
    std::vector<int> dist(g.num_vertices(), -1);
    std::deque<uint32_t> q{src};
    dist[src] = 0;
    while (!q.empty()) {
        uint32_t x = q.front();
        q.pop_front();
        for (uint32_t e : g.incident[x]) {
            uint32_t y = g.other_end(e, x);
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                q.push_back(y);
            }
        }
    }
    return dist;
}

BitVec ball_edges(const SyndromeGraph &g, const Ball &b) {
    if (b.radius <= 0) throw std::invalid_argument("ball_edges: radius must be positive");
    std::vector<int> dist = graph_distances(g, b.center);
    BitVec out(g.num_edges());
    for (uint32_t e = 0; e < g.num_edges(); e++) {
        int du = dist[g.edges[e].u], dv = dist[g.edges[e].v];
        if (du >= 0 && dv >= 0 && du <= b.radius && dv <= b.radius) out.set(e);
    }
    return out;
}

BitVec ball_union(const SyndromeGraph &g, const std::vector<Ball> &balls) {
    BitVec out(g.num_edges());
    for (const Ball &b : balls) out |= ball_edges(g, b);
    return out;
}

Spherification spherify(const SyndromeGraph &g, const std::vector<BitVec> &K) {
    for (const BitVec &k : K) {
        if (edge_components(g, k).size() > 1) throw std::invalid_argument("spherify: input set is not connected");
    }
    std::vector<size_t> order(K.size());
    for (size_t i = 0; i < K.size(); i++) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return K[a].popcount() > K[b].popcount(); });
    Spherification out;
    std::vector<bool> dropped(K.size(), false);
    for (size_t i : order) {
        if (dropped[i] || K[i].none()) continue;
        out.chosen.push_back(i);
        uint32_t e = static_cast<uint32_t>(K[i].first_one());
        uint32_t center = std::min(g.edges[e].u, g.edges[e].v);
        K[i].for_each_one([&](size_t f) { center = std::min({center, g.edges[f].u, g.edges[f].v}); });
        out.balls.push_back(Ball{center, 2 * static_cast<int>(K[i].popcount())});
        for (size_t j = 0; j < K.size(); j++) {
            if (K[j].intersects(K[i])) dropped[j] = true;
        }
    }
    return out;
}

std::vector<AggregateBall> aggregate(const SyndromeGraph &g, const std::vector<Ball> &balls) {
    std::vector<BitVec> ball_sets;
    BitVec all(g.num_edges());
    for (const Ball &b : balls) {
        ball_sets.push_back(ball_edges(g, b));
        all |= ball_sets.back();
    }
    std::vector<AggregateBall> out;
    for (BitVec &comp : edge_components(g, all)) {
        AggregateBall a;
        for (size_t i = 0; i < balls.size(); i++) {
            if (ball_sets[i].intersects(comp)) a.members.push_back(i);
        }
        std::vector<uint32_t> verts;
        comp.for_each_one([&](size_t e) {
            verts.push_back(g.edges[e].u);
            verts.push_back(g.edges[e].v);
        });
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        int diameter = -1;
        uint32_t center = verts.front();
        for (uint32_t v : verts) {
            std::vector<int> dist = graph_distances(g, v);
            for (uint32_t w : verts) {
                if (dist[w] > diameter) {
                    diameter = dist[w];
                    center = v;
                }
            }
        }
        std::vector<Ball> members;
        for (size_t i : a.members) members.push_back(balls[i]);
        if (diameter > 2 * total_radius(members)) throw std::logic_error("aggregate: diameter exceeds twice the total radius");
        a.ball = Ball{center, std::max(diameter, 1)};
        a.component = std::move(comp);
        out.push_back(std::move(a));
    }
    return out;
}

double spherification_p0(double alpha, double c) { return std::pow(2 * alpha, -c); }

double aggregation_p0(double alpha) {
    double x = 2 / (3 * std::exp(1.0) * alpha);
    return x * x;
}

size_t TailReport::violations() const {
    return static_cast<size_t>(std::count_if(rows.begin(), rows.end(), [](const TailRow &r) { return r.violated; }));
}

TailReport tail_estimate(const std::vector<std::vector<Ball>> &runs, size_t num_vertices, double p, double c,
                         double alpha, int max_radius) {
    TailReport rep;
    rep.p = p;
    rep.c = c;
    rep.alpha = alpha;
    rep.p0 = spherification_p0(alpha, c);
    rep.trials = runs.size();
    std::map<int, std::map<uint32_t, uint64_t>> seen;
    for (const auto &w : runs) {
        for (const Ball &b : w) {
            if (b.radius <= max_radius) seen[b.radius][b.center]++;
        }
    }
    double t = static_cast<double>(std::max<size_t>(runs.size(), 1));
    for (int r = 1; r <= max_radius; r++) {
        TailRow row;
        row.radius = r;
        uint64_t most = 0;
        for (auto [v, n] : seen[r]) {
            row.count += n;
            most = std::max(most, n);
        }
        row.mean_frequency = static_cast<double>(row.count) / (t * static_cast<double>(std::max<size_t>(num_vertices, 1)));
        row.max_frequency = static_cast<double>(most) / t;
        row.bound = p == 0 ? 0 : std::pow(p / rep.p0, r / (2 * c));
        double b = std::min(row.bound, 1.0);
        double se = std::sqrt(std::max(b * (1 - b), 1 / t) / t);
        row.violated = row.max_frequency > row.bound + 4 * se;
        rep.rows.push_back(row);
    }
    return rep;
}

void write_tail_csv(std::ostream &out, const TailReport &rep) {
    out << "radius,count,mean_frequency,max_frequency,bound,violated\n";
    for (const TailRow &r : rep.rows) {
        out << r.radius << ',' << r.count << ',' << r.mean_frequency << ',' << r.max_frequency << ',' << r.bound << ','
            << (r.violated ? 1 : 0) << '\n';
    }
}

namespace {

struct AlphaSearch {
    const SyndromeGraph &g;
    int n_max;
    uint64_t budget;
    uint64_t visited = 0;
    bool partial = false;
    std::vector<uint64_t> counts;
    std::vector<bool> known;

    // Each connected set is reached exactly once: every extension edge is either taken
    // or, once its branch is done, excluded for the remaining siblings.
    void rec(int size, const std::vector<uint32_t> &ext) {
        counts[static_cast<size_t>(size)]++;
        if (++visited > budget) {
            partial = true;
            return;
        }
        if (size == n_max) return;
        for (size_t idx = 0; idx < ext.size() && !partial; idx++) {
            uint32_t e = ext[idx];
            std::vector<uint32_t> next(ext.begin() + static_cast<std::ptrdiff_t>(idx) + 1, ext.end());
            std::vector<uint32_t> fresh;
            for (uint32_t x : {g.edges[e].u, g.edges[e].v}) {
                for (uint32_t f : g.incident[x]) {
                    if (!known[f]) {
                        known[f] = true;
                        fresh.push_back(f);
                    }
                }
            }
            next.insert(next.end(), fresh.begin(), fresh.end());
            rec(size + 1, next);
            for (uint32_t f : fresh) known[f] = false;
        }
    }
};

}  // namespace

AlphaReport enumerate_alpha(const SyndromeGraph &g, uint32_t v, int n_max, uint64_t budget) {
    if (n_max < 0 || n_max > 6) throw std::invalid_argument("enumerate_alpha: n_max must be in [0, 6]");
    AlphaSearch s{g, n_max, budget, 0, false, std::vector<uint64_t>(static_cast<size_t>(n_max) + 1, 0),
                  std::vector<bool>(g.num_edges(), false)};
    std::vector<uint32_t> ext;
    for (uint32_t f : g.incident[v]) {
        if (!s.known[f]) {
            s.known[f] = true;
            ext.push_back(f);
        }
    }
    s.rec(0, ext);
    AlphaReport rep;
    rep.counts = s.counts;
    rep.partial = s.partial;
    for (int n = 1; n <= n_max; n++) {
        double c = static_cast<double>(rep.counts[static_cast<size_t>(n)]);
        if (c > 0) rep.alpha = std::max(rep.alpha, std::pow(c, 1.0 / n));
    }
    return rep;
}

}  // namespace colorjit
