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

#include "colorjit/decoders/matching.h"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace colorjit {

namespace {

// Primal-dual blossom algorithm. Vertices are [0, n); blossoms are [n, 2n). Edge k has
// endpoints 2k and 2k+1, endpoint(p) is the vertex at that end and p^1 the other end.
class Blossom {
   public:
    Blossom(size_t n, const std::vector<WeightedEdge> &edges, bool max_card)
        : n_(static_cast<int64_t>(n)), edges_(edges), max_card_(max_card) {}

    std::vector<int64_t> run();

   private:
    int64_t n_;
    const std::vector<WeightedEdge> &edges_;
    bool max_card_;

    std::vector<int64_t> endpoint, mate, label, labelend, inblossom, blossomparent, blossombase, bestedge, dualvar;
    std::vector<std::vector<int64_t>> neighbend, blossomchilds, blossomendps, blossombestedges;
    std::vector<bool> has_bestedges, allowedge;
    std::vector<int64_t> unused, queue;

    int64_t slack(int64_t k) const {
        const auto &e = edges_[static_cast<size_t>(k)];
        return dualvar[e.u] + dualvar[e.v] - 2 * e.weight;
    }
    int64_t eu(int64_t k) const { return edges_[static_cast<size_t>(k)].u; }
    int64_t ev(int64_t k) const { return edges_[static_cast<size_t>(k)].v; }

    static size_t wrap(int64_t j, size_t len) {
        int64_t l = static_cast<int64_t>(len);
        return static_cast<size_t>(((j % l) + l) % l);
    }

    void leaves(int64_t b, std::vector<int64_t> &out) const {
        if (b < n_) {
            out.push_back(b);
            return;
        }
        for (int64_t t : blossomchilds[b]) leaves(t, out);
    }
    std::vector<int64_t> leaves(int64_t b) const {
        std::vector<int64_t> out;
        leaves(b, out);
        return out;
    }

    void assign_label(int64_t w, int64_t t, int64_t p);
    int64_t scan_blossom(int64_t v, int64_t w);
    void add_blossom(int64_t base, int64_t k);
    void expand_blossom(int64_t b, bool endstage);
    void augment_blossom(int64_t b, int64_t v);
    void augment_matching(int64_t k);
};

void Blossom::assign_label(int64_t w, int64_t t, int64_t p) {
    int64_t b = inblossom[w];
    assert(label[w] == 0 && label[b] == 0);
    label[w] = label[b] = t;
    labelend[w] = labelend[b] = p;
    bestedge[w] = bestedge[b] = -1;
    if (t == 1) {
        leaves(b, queue);
    } else if (t == 2) {
        int64_t base = blossombase[b];
        assert(mate[base] >= 0);
        assign_label(endpoint[mate[base]], 1, mate[base] ^ 1);
    }
}

int64_t Blossom::scan_blossom(int64_t v, int64_t w) {
    std::vector<int64_t> path;
    int64_t base = -1;
    while (v != -1 || w != -1) {
        int64_t b = inblossom[v];
        if (label[b] & 4) {
            base = blossombase[b];
            break;
        }
        assert(label[b] == 1);
        path.push_back(b);
        label[b] = 5;
        if (labelend[b] == -1) {
            v = -1;
        } else {
            v = endpoint[labelend[b]];
            b = inblossom[v];
            assert(label[b] == 2);
            v = endpoint[labelend[b]];
        }
        if (w != -1) std::swap(v, w);
    }
    for (int64_t b : path) label[b] = 1;
    return base;
}

void Blossom::add_blossom(int64_t base, int64_t k) {
    int64_t v = eu(k), w = ev(k);
    int64_t bb = inblossom[base], bv = inblossom[v], bw = inblossom[w];
    int64_t b = unused.back();
    unused.pop_back();
    blossombase[b] = base;
    blossomparent[b] = -1;
    blossomparent[bb] = b;
    auto &path = blossomchilds[b];
    auto &endps = blossomendps[b];
    path.clear();
    endps.clear();
    while (bv != bb) {
        blossomparent[bv] = b;
        path.push_back(bv);
        endps.push_back(labelend[bv]);
        v = endpoint[labelend[bv]];
        bv = inblossom[v];
    }
    path.push_back(bb);
    std::reverse(path.begin(), path.end());
    std::reverse(endps.begin(), endps.end());
    endps.push_back(2 * k);
    while (bw != bb) {
        blossomparent[bw] = b;
        path.push_back(bw);
        endps.push_back(labelend[bw] ^ 1);
        w = endpoint[labelend[bw]];
        bw = inblossom[w];
    }
    assert(label[bb] == 1);
    label[b] = 1;
    labelend[b] = labelend[bb];
    dualvar[b] = 0;
    for (int64_t x : leaves(b)) {
        if (label[inblossom[x]] == 2) queue.push_back(x);
        inblossom[x] = b;
    }
    std::vector<int64_t> bestedgeto(static_cast<size_t>(2 * n_), -1);
    for (int64_t sub : path) {
        std::vector<int64_t> cand;
        if (!has_bestedges[sub]) {
            for (int64_t x : leaves(sub)) {
                for (int64_t p : neighbend[x]) cand.push_back(p / 2);
            }
        } else {
            cand = blossombestedges[sub];
        }
        for (int64_t kk : cand) {
            int64_t i = eu(kk), j = ev(kk);
            if (inblossom[j] == b) std::swap(i, j);
            int64_t bj = inblossom[j];
            if (bj != b && label[bj] == 1 && (bestedgeto[bj] == -1 || slack(kk) < slack(bestedgeto[bj]))) {
                bestedgeto[bj] = kk;
            }
        }
        blossombestedges[sub].clear();
        has_bestedges[sub] = false;
        bestedge[sub] = -1;
    }
    blossombestedges[b].clear();
    for (int64_t kk : bestedgeto) {
        if (kk != -1) blossombestedges[b].push_back(kk);
    }
    has_bestedges[b] = true;
    bestedge[b] = -1;
    for (int64_t kk : blossombestedges[b]) {
        if (bestedge[b] == -1 || slack(kk) < slack(bestedge[b])) bestedge[b] = kk;
    }
}

void Blossom::expand_blossom(int64_t b, bool endstage) {
    std::vector<int64_t> childs = blossomchilds[b];
    for (int64_t s : childs) {
        blossomparent[s] = -1;
        if (s < n_) {
            inblossom[s] = s;
        } else if (endstage && dualvar[s] == 0) {
            expand_blossom(s, endstage);
        } else {
            for (int64_t x : leaves(s)) inblossom[x] = s;
        }
    }
    if (!endstage && label[b] == 2) {
        const auto &ch = blossomchilds[b];
        const auto &ep = blossomendps[b];
        size_t len = ch.size();
        int64_t entrychild = inblossom[endpoint[labelend[b] ^ 1]];
        int64_t j = std::find(ch.begin(), ch.end(), entrychild) - ch.begin();
        int64_t jstep, endptrick;
        if (j & 1) {
            j -= static_cast<int64_t>(len);
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        int64_t p = labelend[b];
        while (j != 0) {
            label[endpoint[p ^ 1]] = 0;
            label[endpoint[ep[wrap(j - endptrick, len)] ^ endptrick ^ 1]] = 0;
            assign_label(endpoint[p ^ 1], 2, p);
            allowedge[static_cast<size_t>(ep[wrap(j - endptrick, len)] / 2)] = true;
            j += jstep;
            p = ep[wrap(j - endptrick, len)] ^ endptrick;
            allowedge[static_cast<size_t>(p / 2)] = true;
            j += jstep;
        }
        int64_t bv = ch[wrap(j, len)];
        label[endpoint[p ^ 1]] = label[bv] = 2;
        labelend[endpoint[p ^ 1]] = labelend[bv] = p;
        bestedge[bv] = -1;
        j += jstep;
        while (ch[wrap(j, len)] != entrychild) {
            bv = ch[wrap(j, len)];
            if (label[bv] == 1) {
                j += jstep;
                continue;
            }
            int64_t found = -1;
            for (int64_t x : leaves(bv)) {
                if (label[x] != 0) {
                    found = x;
                    break;
                }
            }
            if (found >= 0) {
                assert(label[found] == 2 && inblossom[found] == bv);
                label[found] = 0;
                label[endpoint[mate[blossombase[bv]]]] = 0;
                assign_label(found, 2, labelend[found]);
            }
            j += jstep;
        }
    }
    label[b] = labelend[b] = -1;
    blossomchilds[b].clear();
    blossomendps[b].clear();
    blossombase[b] = -1;
    blossombestedges[b].clear();
    has_bestedges[b] = false;
    bestedge[b] = -1;
    unused.push_back(b);
}

void Blossom::augment_blossom(int64_t b, int64_t v) {
    int64_t t = v;
    while (blossomparent[t] != b) t = blossomparent[t];
    if (t >= n_) augment_blossom(t, v);
    auto &ch = blossomchilds[b];
    auto &ep = blossomendps[b];
    size_t len = ch.size();
    int64_t i = std::find(ch.begin(), ch.end(), t) - ch.begin();
    int64_t j = i, jstep, endptrick;
    if (i & 1) {
        j -= static_cast<int64_t>(len);
        jstep = 1;
        endptrick = 0;
    } else {
        jstep = -1;
        endptrick = 1;
    }
    while (j != 0) {
        j += jstep;
        t = ch[wrap(j, len)];
        int64_t p = ep[wrap(j - endptrick, len)] ^ endptrick;
        if (t >= n_) augment_blossom(t, endpoint[p]);
        j += jstep;
        t = ch[wrap(j, len)];
        if (t >= n_) augment_blossom(t, endpoint[p ^ 1]);
        mate[endpoint[p]] = p ^ 1;
        mate[endpoint[p ^ 1]] = p;
    }
    std::rotate(ch.begin(), ch.begin() + i, ch.end());
    std::rotate(ep.begin(), ep.begin() + i, ep.end());
    blossombase[b] = blossombase[ch[0]];
    assert(blossombase[b] == v);
}

void Blossom::augment_matching(int64_t k) {
    int64_t v = eu(k), w = ev(k);
    for (auto [s, p] : {std::pair{v, 2 * k + 1}, std::pair{w, 2 * k}}) {
        while (true) {
            int64_t bs = inblossom[s];
            assert(label[bs] == 1);
            if (bs >= n_) augment_blossom(bs, s);
            mate[s] = p;
            if (labelend[bs] == -1) break;
            int64_t t = endpoint[labelend[bs]];
            int64_t bt = inblossom[t];
            assert(label[bt] == 2);
            s = endpoint[labelend[bt]];
            int64_t j = endpoint[labelend[bt] ^ 1];
            assert(blossombase[bt] == t);
            if (bt >= n_) augment_blossom(bt, j);
            mate[j] = labelend[bt];
            p = labelend[bt] ^ 1;
        }
    }
}

std::vector<int64_t> Blossom::run() {
    size_t n = static_cast<size_t>(n_), m = edges_.size();
    if (m == 0) return std::vector<int64_t>(n, -1);
    int64_t maxweight = 0;
    for (const auto &e : edges_) {
        if (e.u >= n || e.v >= n || e.u == e.v) throw std::invalid_argument("matching: bad edge");
        maxweight = std::max(maxweight, e.weight);
    }
    endpoint.resize(2 * m);
    neighbend.assign(n, {});
    for (size_t k = 0; k < m; k++) {
        endpoint[2 * k] = edges_[k].u;
        endpoint[2 * k + 1] = edges_[k].v;
        neighbend[edges_[k].u].push_back(static_cast<int64_t>(2 * k + 1));
        neighbend[edges_[k].v].push_back(static_cast<int64_t>(2 * k));
    }
    mate.assign(n, -1);
    label.assign(2 * n, 0);
    labelend.assign(2 * n, -1);
    inblossom.resize(n);
    for (size_t i = 0; i < n; i++) inblossom[i] = static_cast<int64_t>(i);
    blossomparent.assign(2 * n, -1);
    blossomchilds.assign(2 * n, {});
    blossombase.assign(2 * n, -1);
    for (size_t i = 0; i < n; i++) blossombase[i] = static_cast<int64_t>(i);
    blossomendps.assign(2 * n, {});
    bestedge.assign(2 * n, -1);
    blossombestedges.assign(2 * n, {});
    has_bestedges.assign(2 * n, false);
    unused.clear();
    for (size_t b = n; b < 2 * n; b++) unused.push_back(static_cast<int64_t>(b));
    dualvar.assign(2 * n, 0);
    for (size_t i = 0; i < n; i++) dualvar[i] = maxweight;
    allowedge.assign(m, false);

    for (size_t stage = 0; stage < n; stage++) {
        std::fill(label.begin(), label.end(), 0);
        std::fill(bestedge.begin(), bestedge.end(), -1);
        for (size_t b = n; b < 2 * n; b++) {
            blossombestedges[b].clear();
            has_bestedges[b] = false;
        }
        std::fill(allowedge.begin(), allowedge.end(), false);
        queue.clear();
        for (size_t v = 0; v < n; v++) {
            if (mate[v] == -1 && label[inblossom[v]] == 0) assign_label(static_cast<int64_t>(v), 1, -1);
        }
        bool augmented = false;
        while (true) {
            while (!queue.empty() && !augmented) {
                int64_t v = queue.back();
                queue.pop_back();
                assert(label[inblossom[v]] == 1);
                for (int64_t p : neighbend[v]) {
                    int64_t k = p / 2;
                    int64_t w = endpoint[p];
                    if (inblossom[v] == inblossom[w]) continue;
                    int64_t kslack = 0;
                    if (!allowedge[k]) {
                        kslack = slack(k);
                        if (kslack <= 0) allowedge[k] = true;
                    }
                    if (allowedge[k]) {
                        if (label[inblossom[w]] == 0) {
                            assign_label(w, 2, p ^ 1);
                        } else if (label[inblossom[w]] == 1) {
                            int64_t base = scan_blossom(v, w);
                            if (base >= 0) {
                                add_blossom(base, k);
                            } else {
                                augment_matching(k);
                                augmented = true;
                                break;
                            }
                        } else if (label[w] == 0) {
                            assert(label[inblossom[w]] == 2);
                            label[w] = 2;
                            labelend[w] = p ^ 1;
                        }
                    } else if (label[inblossom[w]] == 1) {
                        int64_t b = inblossom[v];
                        if (bestedge[b] == -1 || kslack < slack(bestedge[b])) bestedge[b] = k;
                    } else if (label[w] == 0) {
                        if (bestedge[w] == -1 || kslack < slack(bestedge[w])) bestedge[w] = k;
                    }
                }
            }
            if (augmented) break;

            int deltatype = -1;
            int64_t delta = 0, deltaedge = -1, deltablossom = -1;
            if (!max_card_) {
                deltatype = 1;
                delta = *std::min_element(dualvar.begin(), dualvar.begin() + n_);
            }
            for (size_t v = 0; v < n; v++) {
                if (label[inblossom[v]] == 0 && bestedge[v] != -1) {
                    int64_t d = slack(bestedge[v]);
                    if (deltatype == -1 || d < delta) {
                        delta = d;
                        deltatype = 2;
                        deltaedge = bestedge[v];
                    }
                }
            }
            for (size_t b = 0; b < 2 * n; b++) {
                if (blossomparent[b] == -1 && label[b] == 1 && bestedge[b] != -1) {
                    int64_t kslack = slack(bestedge[b]);
                    assert(kslack % 2 == 0);
                    int64_t d = kslack / 2;
                    if (deltatype == -1 || d < delta) {
                        delta = d;
                        deltatype = 3;
                        deltaedge = bestedge[b];
                    }
                }
            }
            for (size_t b = n; b < 2 * n; b++) {
                if (blossombase[b] >= 0 && blossomparent[b] == -1 && label[b] == 2 &&
                    (deltatype == -1 || dualvar[b] < delta)) {
                    delta = dualvar[b];
                    deltatype = 4;
                    deltablossom = static_cast<int64_t>(b);
                }
            }
            if (deltatype == -1) {
                deltatype = 1;
                delta = std::max<int64_t>(0, *std::min_element(dualvar.begin(), dualvar.begin() + n_));
            }
            for (size_t v = 0; v < n; v++) {
                if (label[inblossom[v]] == 1) {
                    dualvar[v] -= delta;
                } else if (label[inblossom[v]] == 2) {
                    dualvar[v] += delta;
                }
            }
            for (size_t b = n; b < 2 * n; b++) {
                if (blossombase[b] >= 0 && blossomparent[b] == -1) {
                    if (label[b] == 1) {
                        dualvar[b] += delta;
                    } else if (label[b] == 2) {
                        dualvar[b] -= delta;
                    }
                }
            }
            if (deltatype == 1) {
                break;
            } else if (deltatype == 2) {
                allowedge[deltaedge] = true;
                int64_t i = eu(deltaedge), j = ev(deltaedge);
                if (label[inblossom[i]] == 0) std::swap(i, j);
                assert(label[inblossom[i]] == 1);
                queue.push_back(i);
            } else if (deltatype == 3) {
                allowedge[deltaedge] = true;
                int64_t i = eu(deltaedge);
                assert(label[inblossom[i]] == 1);
                queue.push_back(i);
            } else {
                expand_blossom(deltablossom, false);
            }
        }
        if (!augmented) break;
        for (size_t b = n; b < 2 * n; b++) {
            if (blossomparent[b] == -1 && blossombase[b] >= 0 && label[b] == 1 && dualvar[b] == 0) {
                expand_blossom(static_cast<int64_t>(b), true);
            }
        }
    }
    std::vector<int64_t> out(n, -1);
    for (size_t v = 0; v < n; v++) {
        if (mate[v] >= 0) out[v] = endpoint[mate[v]];
    }
    return out;
}

}  // namespace

std::vector<int64_t> max_weight_matching(size_t num_nodes, const std::vector<WeightedEdge> &edges, bool max_cardinality) {
    return Blossom(num_nodes, edges, max_cardinality).run();
}

std::optional<std::vector<int64_t>> min_weight_perfect_matching(size_t num_nodes, const std::vector<WeightedEdge> &edges) {
    if (num_nodes % 2) return std::nullopt;
    if (num_nodes == 0) return std::vector<int64_t>{};
    int64_t top = 0;
    for (const auto &e : edges) {
        if (e.weight < 0) throw std::invalid_argument("min_weight_perfect_matching: negative weight");
        top = std::max(top, e.weight);
    }
    std::vector<WeightedEdge> flipped(edges);
    for (auto &e : flipped) e.weight = top + 1 - e.weight;
    auto mate = max_weight_matching(num_nodes, flipped, true);
    for (int64_t m : mate) {
        if (m < 0) return std::nullopt;
    }
    return mate;
}

}  // namespace colorjit
