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

#include "colorjit/jit/jit.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "colorjit/errors.h"

namespace colorjit {

JitDecoder::JitDecoder(const LayeredDecoders &dec, JitOptions opts) : dec_(&dec), opts_(opts) {
    if (opts_.lookahead < 0) throw std::invalid_argument("JitDecoder: negative lookahead");
}

JitState JitDecoder::initial_state() const {
    size_t m = dec_->graph().num_edges();
    return JitState{0, BitVec(m), BitVec(m)};
}

int JitDecoder::visible_layer(const JitState &s) const {
    return std::min(s.layer + 1 + opts_.lookahead, num_layers());
}

JitStep JitDecoder::step(JitState &s, const BitVec &observed) const {
    int n = num_layers();
    if (s.layer >= n) throw std::invalid_argument("jit step: all layers settled");
    int i = s.layer + 1, j = visible_layer(s), prev = i - 1;
    if (!observed.subset_of(dec_->past(j))) throw std::invalid_argument("jit step: outcomes from unseen layers");

    JitStep out;
    out.layer = i;
    out.gamma_prime = dec_->open_decoder(j, observed);
    const BitVec &before = dec_->past(prev);
    bool restricted = opts_.alternative_compensation || opts_.lookahead > 0;
    BitVec x = restricted ? ((s.gamma ^ out.gamma_prime) & before) : (s.gamma ^ (out.gamma_prime & before));
    out.epsilon = dec_->estimated_error(prev, x);
    out.gamma = out.gamma_prime ^ x ^ out.epsilon;
    if ((out.gamma & before) != s.committed) throw LedgerViolation("jit step: committed faces changed");
    BitVec layer_faces = dec_->past(i);
    layer_faces.andnot(before);
    out.committed = out.gamma & layer_faces;
    s.committed |= out.committed;
    s.gamma = out.gamma;
    s.layer = i;
    return out;
}

namespace {

std::vector<JitStep> run_steps(const JitDecoder &jd, const BitVec &phi_tilde, JitState &s) {
    std::vector<JitStep> steps;
    while (s.layer < jd.num_layers()) {
        BitVec seen = phi_tilde & jd.decoders().past(jd.visible_layer(s));
        steps.push_back(jd.step(s, seen));
    }
    if (s.committed != s.gamma) throw LedgerViolation("jit run: output differs from the last gamma");
    if (!syndrome_of(jd.decoders().graph(), s.committed).empty()) throw LedgerViolation("jit run: output is not a codeword");
    return steps;
}

}  // namespace

BitVec jit_decode(const JitDecoder &jd, const BitVec &phi_tilde) {
    JitState s = jd.initial_state();
    run_steps(jd, phi_tilde, s);
    return s.committed;
}

JitRun jit_run(const JitDecoder &jd, const BitVec &phi, const BitVec &omega) {
    const LayeredDecoders &dec = jd.decoders();
    JitState s = jd.initial_state();
    JitRun run;
    run.steps = run_steps(jd, phi ^ omega, s);
    run.phi_hat = s.committed;
    size_t m = dec.graph().num_edges();
    ErrorLedger &L = run.ledger;
    L.omega = omega;
    L.omega_hat = phi ^ run.phi_hat;
    L.omega_prime.assign(1, BitVec(m));
    L.omega_layer.assign(1, BitVec(m));
    L.epsilon.assign(1, BitVec(m));
    for (const JitStep &st : run.steps) {
        BitVec truth = phi & dec.past(st.layer);
        L.omega_prime.push_back(st.gamma_prime ^ truth);
        L.omega_layer.push_back(st.gamma ^ truth);
        L.epsilon.push_back(st.epsilon);
    }
    return run;
}

LedgerReport verify_ledger(const LayeredDecoders &dec, const ErrorLedger &L) {
    LedgerReport rep;
    int n = dec.num_layers();
    auto fail = [&](int i, const std::string &what) { rep.violations.push_back("layer " + std::to_string(i) + ": " + what); };
    if (static_cast<int>(L.omega_prime.size()) != n + 1 || static_cast<int>(L.omega_layer.size()) != n + 1 ||
        static_cast<int>(L.epsilon.size()) != n + 1) {
        rep.violations.push_back("ledger does not cover every layer");
        return rep;
    }
    size_t m = dec.graph().num_edges();
    BitVec sum(m);
    for (int i = 1; i <= n; i++) {
        BitVec restricted = L.omega & dec.past(i);
        if (L.omega_prime[i] != (restricted ^ dec.open_correction(i, restricted))) fail(i, "estimated error");
        BitVec layer_faces = dec.past(i);
        layer_faces.andnot(dec.past(i - 1));
        try {
            BitVec want = dec.estimated_error(i - 1, L.omega_prime[i - 1] ^ (L.omega_prime[i] & dec.past(i - 1)));
            if (want != L.epsilon[i]) fail(i, "compensating configuration");
        } catch (const NoMatch &ex) {
            fail(i, std::string("compensation undefined: ") + ex.what());
        }
        BitVec term = (L.omega_prime[i] & layer_faces) ^ L.epsilon[i];
        if (L.omega_layer[i] != (L.omega_layer[i - 1] ^ term)) fail(i, "effective error recursion");
        sum ^= term;
    }
    if (L.omega_hat != L.omega_layer[n]) fail(n, "residual differs from the last effective error");
    if (L.omega_hat != sum) fail(n, "residual differs from the sum over layers");
    return rep;
}

BitVec differential_syndrome(const BitVec &phi_hat, const BitVec &phi_bar) { return phi_hat ^ phi_bar; }

double confinement_constant(double k_min, double k_close) { return 2 * k_min * (k_min * k_close + 1) + 1; }

ConfinementReport confinement_check(const LayeredDecoders &dec, const ErrorLedger &L, double k_min, double k_close) {
    ConfinementReport rep;
    rep.c = confinement_constant(k_min, k_close);
    const SyndromeGraph &g = dec.graph();
    int n = dec.num_layers();
    BitVec cover(g.num_edges());
    for (int i = 1; i <= n; i++) {
        BitVec delta = L.omega_prime[i - 1] ^ (L.omega_prime[i] & dec.past(i - 1));
        BitVec big = L.epsilon[i] | L.omega_prime[i - 1] | L.omega_prime[i] | L.omega;
        BitVec mu(g.num_edges());
        for (const BitVec &k : edge_components(g, big)) {
            BitVec share = k & delta;
            if (share.none()) continue;
            BitVec closing = dec.estimated_error(i - 1, share);
            rep.worst_closure_ratio = std::max(
                rep.worst_closure_ratio, static_cast<double>(closing.popcount()) / static_cast<double>(share.popcount()));
            mu |= closing;
        }
        for (const BitVec &k : edge_components(g, big | mu)) {
            rep.components++;
            size_t hit = (k & L.omega).popcount();
            double ratio = hit ? static_cast<double>(k.popcount()) / static_cast<double>(hit) : INFINITY;
            rep.worst_ratio = std::max(rep.worst_ratio, ratio);
            if (ratio > rep.c) rep.violations++;
            cover |= k;
            rep.clusters.push_back(k);
        }
    }
    rep.covered = L.omega_hat.subset_of(cover);
    return rep;
}

nlohmann::json trace_to_json(const JitRun &run) {
    auto ids = [](const BitVec &b) {
        std::vector<size_t> v = b.ones();
        return nlohmann::json(v);
    };
    nlohmann::json j;
    j["format"] = "colorjit.jit_trace";
    j["version"] = 1;
    j["phi_hat"] = ids(run.phi_hat);
    j["omega"] = ids(run.ledger.omega);
    j["omega_hat"] = ids(run.ledger.omega_hat);
    auto &layers = j["layers"] = nlohmann::json::array();
    for (size_t k = 0; k < run.steps.size(); k++) {
        const JitStep &s = run.steps[k];
        nlohmann::json l;
        l["layer"] = s.layer;
        l["committed"] = ids(s.committed);
        l["gamma_prime"] = ids(s.gamma_prime);
        l["gamma"] = ids(s.gamma);
        l["epsilon"] = ids(s.epsilon);
        if (k + 1 < run.ledger.omega_prime.size()) l["omega_prime"] = ids(run.ledger.omega_prime[k + 1]);
        layers.push_back(l);
    }
    return j;
}

}  // namespace colorjit
