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

#include <gtest/gtest.h>

#include <random>

#include "colorjit/colex/geometry.h"
#include "colorjit/errors.h"
#include "colorjit/jit/frame.h"
#include "colorjit/jit/jit.h"

using namespace colorjit;

namespace {

BitVec random_codeword(const Lattice &lat, std::mt19937_64 &rng, int count) {
    BitVec out(lat.num_faces());
    for (int k = 0; k < count; k++) {
        const DualTriangle &t = lat.triangles[rng() % lat.triangles.size()];
        for (uint32_t e : t.e) {
            if (e < lat.num_faces()) out.flip(e);
        }
    }
    return out;
}

BitVec iid(size_t n, double p, std::mt19937_64 &rng) {
    std::bernoulli_distribution coin(p);
    BitVec out(n);
    for (size_t k = 0; k < n; k++) out.set(k, coin(rng));
    return out;
}

// Minimum-weight flux correction by enumeration over at most two faces.
BitVec tiny_flux_decoder(const Lattice &lat, const BitVec &noisy) {
    if (lat.is_syndrome(noisy)) return noisy;
    for (uint32_t a = 0; a < lat.num_faces(); a++) {
        BitVec t = noisy;
        t.flip(a);
        if (lat.is_syndrome(t)) return t;
    }
    for (uint32_t a = 0; a < lat.num_faces(); a++) {
        for (uint32_t b = a + 1; b < lat.num_faces(); b++) {
            BitVec t = noisy;
            t.flip(a);
            t.flip(b);
            if (lat.is_syndrome(t)) return t;
        }
    }
    throw NoMatch("tiny_flux_decoder: more than two flips");
}

}  // namespace

TEST(jit, first_step_needs_no_compensation) {
    std::mt19937_64 rng(1);
    Lattice lat = build_lattice(Family::Slab, 3);
    LayeredDecoders dec(lat);
    JitDecoder jd(dec);
    JitState s = jd.initial_state();
    BitVec noisy = random_codeword(lat, rng, 4) ^ iid(lat.num_faces(), 0.05, rng);
    JitStep st = jd.step(s, noisy & dec.past(1));
    ASSERT_EQ(st.layer, 1);
    ASSERT_TRUE(st.epsilon.none());
    ASSERT_EQ(st.gamma, st.gamma_prime);
    ASSERT_EQ(s.committed, st.gamma & dec.past(1));
}

TEST(jit, noiseless_runs_reproduce_the_syndrome) {
    std::mt19937_64 rng(2);
    for (Family f : {Family::Slab, Family::Wedge, Family::Forbidden}) {
        Lattice lat = build_lattice(f, 3);
        LayeredDecoders dec(lat);
        JitDecoder jd(dec);
        for (int t = 0; t < 10; t++) {
            BitVec phi = random_codeword(lat, rng, 6);
            JitRun run = jit_run(jd, phi, BitVec(lat.num_faces()));
            ASSERT_EQ(run.phi_hat, phi);
            ASSERT_TRUE(run.ledger.omega_hat.none());
            ASSERT_TRUE(verify_ledger(dec, run.ledger).ok());
            ASSERT_TRUE(differential_syndrome(run.phi_hat, dec.conventional(phi)).none());
        }
    }
}

TEST(jit, ledger_identities_hold) {
    std::mt19937_64 rng(3);
    for (Family f : {Family::Slab, Family::Wedge, Family::Forbidden}) {
        for (int d : {3, 4}) {
            Lattice lat = build_lattice(f, d);
            LayeredDecoders dec(lat);
            JitDecoder jd(dec);
            for (int t = 0; t < 40; t++) {
                double p = 0.01 * static_cast<double>(1 + t % 5);
                BitVec phi = random_codeword(lat, rng, 5);
                BitVec omega = iid(lat.num_faces(), p, rng);
                JitRun run = jit_run(jd, phi, omega);
                LedgerReport rep = verify_ledger(dec, run.ledger);
                ASSERT_TRUE(rep.ok()) << family_name(f) << " d=" << d << ": " << rep.violations.front();
                ASSERT_TRUE(syndrome_of(dec.graph(), run.phi_hat).empty());
                ASSERT_EQ(run.ledger.omega_hat, phi ^ run.phi_hat);
            }
        }
    }
}

TEST(jit, tampered_ledger_is_caught) {
    std::mt19937_64 rng(4);
    Lattice lat = build_lattice(Family::Slab, 3);
    LayeredDecoders dec(lat);
    JitDecoder jd(dec);
    BitVec omega = iid(lat.num_faces(), 0.05, rng);
    omega.set(0);
    JitRun run = jit_run(jd, BitVec(lat.num_faces()), omega);
    ErrorLedger bad = run.ledger;
    bad.omega_hat.flip(0);
    ASSERT_FALSE(verify_ledger(dec, bad).ok());
    bad = run.ledger;
    bad.epsilon[2].flip(lat.num_faces() - 1);
    ASSERT_FALSE(verify_ledger(dec, bad).ok());
}

TEST(jit, steps_see_only_their_layers) {
    Lattice lat = build_lattice(Family::Slab, 3);
    LayeredDecoders dec(lat);
    JitDecoder jd(dec);
    JitState s = jd.initial_state();
    EXPECT_THROW(jd.step(s, dec.past(2)), std::invalid_argument);
    JitDecoder ahead(dec, {.lookahead = 1});
    JitState s2 = ahead.initial_state();
    ASSERT_EQ(ahead.visible_layer(s2), 2);
    ahead.step(s2, dec.past(2) & BitVec(lat.num_faces()));
}

TEST(jit, lookahead_and_alternative_compensation_give_codewords) {
    std::mt19937_64 rng(5);
    Lattice lat = build_lattice(Family::Slab, 4);
    LayeredDecoders dec(lat);
    for (JitOptions opts : {JitOptions{1, false}, JitOptions{3, false}, JitOptions{0, true}}) {
        JitDecoder jd(dec, opts);
        for (int t = 0; t < 30; t++) {
            BitVec phi = random_codeword(lat, rng, 5);
            BitVec out = jit_decode(jd, phi ^ iid(lat.num_faces(), 0.03, rng));
            ASSERT_TRUE(syndrome_of(dec.graph(), out).empty());
            ASSERT_EQ(jit_decode(jd, phi), phi);
        }
    }
}

TEST(jit, differential_syndrome_appears_under_noise) {
    std::mt19937_64 rng(6);
    Lattice lat = build_lattice(Family::Slab, 4);
    LayeredDecoders dec(lat);
    JitDecoder jd(dec);
    size_t nonempty = 0;
    for (int t = 0; t < 200; t++) {
        BitVec noisy = iid(lat.num_faces(), 0.05, rng);
        BitVec delta = differential_syndrome(jit_decode(jd, noisy), dec.conventional(noisy));
        ASSERT_TRUE(syndrome_of(dec.graph(), delta).empty());
        nonempty += delta.any();
    }
    ASSERT_GT(nonempty, 0u);
}

TEST(frame, residual_frame_error) {
    std::mt19937_64 rng(7);
    Lattice lat = build_lattice(Family::Slab, 2);
    for (int t = 0; t < 50; t++) {
        BitVec phi = lat.x_syndrome(iid(lat.num_qubits(), 0.3, rng));
        FrameError same = residual_frame_error(lat, phi, phi);
        ASSERT_TRUE(same.omega_bar.none());
        ASSERT_TRUE(lat.x_syndrome(same.x_mask).none());

        BitVec noisy = phi;
        noisy.flip(rng() % lat.num_faces());
        FrameError fixed = residual_frame_error(lat, phi, tiny_flux_decoder(lat, noisy));
        ASSERT_TRUE(fixed.omega_bar.none());

        BitVec other = lat.x_syndrome(iid(lat.num_qubits(), 0.3, rng));
        FrameError fe = residual_frame_error(lat, phi, other);
        ASSERT_EQ(lat.x_syndrome(fe.x_mask), fe.omega_bar);
    }
    BitVec broken(lat.num_faces());
    broken.set(0);
    EXPECT_THROW(residual_frame_error(lat, broken, BitVec(lat.num_faces())), InfeasibleSyndrome);
}

TEST(confinement, constant) {
    ASSERT_DOUBLE_EQ(confinement_constant(2, 4), 37);
}

TEST(confinement, holds_on_random_runs) {
    std::mt19937_64 rng(8);
    for (Family f : {Family::Slab, Family::Wedge}) {
        Lattice lat = build_lattice(f, 4);
        LayeredDecoders dec(lat);
        JitDecoder jd(dec);
        double k_close = check_closure_geometry(lat).k_close_z2;
        JitRun empty = jit_run(jd, BitVec(lat.num_faces()), BitVec(lat.num_faces()));
        ConfinementReport vac = confinement_check(dec, empty.ledger, 2, k_close);
        ASSERT_TRUE(vac.ok());
        ASSERT_EQ(vac.components, 0u);
        for (int t = 0; t < 100; t++) {
            BitVec phi = random_codeword(lat, rng, 4);
            JitRun run = jit_run(jd, phi, iid(lat.num_faces(), 0.02, rng));
            ConfinementReport rep = confinement_check(dec, run.ledger, 2, k_close);
            ASSERT_TRUE(rep.covered);
            ASSERT_EQ(rep.violations, 0u) << "worst ratio " << rep.worst_ratio;
            ASSERT_LE(rep.worst_closure_ratio, k_close);
        }
    }
}

TEST(jit, trace_json) {
    std::mt19937_64 rng(9);
    Lattice lat = build_lattice(Family::Slab, 3);
    LayeredDecoders dec(lat);
    JitDecoder jd(dec);
    JitRun run = jit_run(jd, BitVec(lat.num_faces()), iid(lat.num_faces(), 0.05, rng));
    nlohmann::json j = trace_to_json(run);
    ASSERT_EQ(j["format"], "colorjit.jit_trace");
    ASSERT_EQ(j["layers"].size(), static_cast<size_t>(dec.num_layers()));
    ASSERT_EQ(j["omega_hat"].size(), run.ledger.omega_hat.popcount());
}
