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

#include "colorjit/harness/verify.h"

#include <algorithm>
#include <array>
#include <chrono>
#include <memory>
#include <random>

#include "colorjit/colex/closure.h"
#include "colorjit/colex/geometry.h"
#include "colorjit/decoders/layered.h"
#include "colorjit/errors.h"
#include "colorjit/jit/jit.h"
#include "colorjit/noise/noise.h"

namespace colorjit {

namespace {

constexpr std::array<Family, 3> FAMILIES{Family::Slab, Family::Wedge, Family::Forbidden};

class Timer {
   public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

   private:
    std::chrono::steady_clock::time_point start_;
};

void note(SuiteResult &r, const std::string &what) {
    r.failures++;
    if (r.detail.empty()) r.detail = what;
}

BitVec random_codeword(const Lattice &lat, std::mt19937_64 &rng) {
    BitVec phi(lat.num_faces());
    sample_iid(0.5, lat.triangles.size(), rng).for_each_one([&](size_t t) {
        for (uint32_t e : lat.triangles[t].e)
            if (e < lat.num_faces()) phi.flip(e);
    });
    return phi;
}

}  // namespace

SuiteResult verify_ball_identity_suite(const std::vector<int> &sizes) {
    Timer timer;
    SuiteResult r;
    r.name = "ball identities";
    for (Family f : FAMILIES)
        for (int d : sizes) {
            r.cases++;
            if (!verify_ball_identities(build_lattice(f, d)).ok())
                note(r, family_name(f) + " size " + std::to_string(d));
        }
    r.seconds = timer.seconds();
    return r;
}

SuiteResult verify_oracle_suite(uint64_t instances, const std::vector<int> &sizes, size_t max_defects, uint64_t seed) {
    Timer timer;
    SuiteResult r;
    r.name = "matching oracle";
    std::mt19937_64 rng(seed);
    std::vector<Lattice> lats;
    std::vector<SyndromeGraph> graphs;
    for (int d : sizes) lats.push_back(build_lattice(Family::Slab, d));
    for (const auto &lat : lats) graphs.push_back(SyndromeGraph::from_lattice(lat));
    std::vector<std::unique_ptr<MatchingDecoder>> decs;
    for (const auto &g : graphs) decs.push_back(std::make_unique<MatchingDecoder>(g));
    std::uniform_real_distribution<double> rate(0.005, 0.05);
    for (uint64_t t = 0; t < instances; t++) {
        size_t k = t % graphs.size();
        const SyndromeGraph &g = graphs[k];
        BitVec w;
        std::vector<uint32_t> sigma;
        do {
            w = sample_iid(rate(rng), g.num_edges(), rng);
            sigma = syndrome_of(g, w);
        } while (sigma.size() > max_defects);
        r.cases++;
        BitVec a = decs[k]->decode(sigma);
        BitVec b = bruteforce_decode(g, sigma);
        if (chain_weight(g, a) != chain_weight(g, b) || syndrome_of(g, a) != sigma) {
            note(r, "instance " + std::to_string(t) + " on size " + std::to_string(sizes[k]));
            continue;
        }
        r.measured = std::max(r.measured, minimization_ratio(g, w, a));
    }
    r.seconds = timer.seconds();
    return r;
}

SuiteResult verify_ledger_suite(uint64_t runs, const std::vector<int> &sizes, double max_rate, uint64_t seed) {
    Timer timer;
    SuiteResult r;
    r.name = "ledger identities";
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> rate(0, max_rate);
    std::vector<std::unique_ptr<Lattice>> lats;
    std::vector<std::unique_ptr<LayeredDecoders>> decs;
    std::vector<std::unique_ptr<JitDecoder>> jds;
    for (Family f : FAMILIES)
        for (int d : sizes) {
            lats.push_back(std::make_unique<Lattice>(build_lattice(f, d)));
            decs.push_back(std::make_unique<LayeredDecoders>(*lats.back()));
            jds.push_back(std::make_unique<JitDecoder>(*decs.back()));
        }
    for (uint64_t t = 0; t < runs; t++) {
        size_t k = t % lats.size();
        const Lattice &lat = *lats[k];
        BitVec phi = random_codeword(lat, rng);
        BitVec omega = sample_iid(rate(rng), lat.num_faces(), rng);
        r.cases++;
        try {
            JitRun run = jit_run(*jds[k], phi, omega);
            LedgerReport rep = verify_ledger(*decs[k], run.ledger);
            if (!rep.ok()) note(r, family_name(lat.family) + " size " + std::to_string(lat.size) + ": " + rep.violations[0]);
        } catch (const LedgerViolation &e) {
            note(r, e.what());
        }
    }
    r.seconds = timer.seconds();
    return r;
}

SuiteResult verify_closure_suite(uint64_t per_layer, const std::vector<int> &sizes, uint64_t seed) {
    Timer timer;
    SuiteResult r;
    r.name = "closure constructor";
    std::mt19937_64 rng(seed);
    for (Family f : FAMILIES)
        for (int d : sizes) {
            Lattice lat = build_lattice(f, d);
            ClosureGeometry geo = check_closure_geometry(lat);
            for (int i = 1; i < lat.layers.num_layers; i++) {
                BitVec future = ~lat.faces_upto(i);
                for (uint64_t t = 0; t < per_layer; t++) {
                    BitVec phi = random_open_configuration(lat, i, rng, 1 + static_cast<int>(rng() % 4),
                                                           static_cast<int>(rng() % 3));
                    r.cases++;
                    std::string where = family_name(f) + " size " + std::to_string(d) + " layer " + std::to_string(i);
                    ClosureResult c;
                    try {
                        c = close_flux(lat, i, phi);
                    } catch (const std::exception &e) {
                        note(r, where + ": " + e.what());
                        continue;
                    }
                    auto want = lat.boundary(phi), got = lat.boundary(c.flux);
                    bool same = true;
                    for (uint32_t v = 0; v < lat.num_cells(); v++) same = same && want[v] == got[v];
                    double ratio = phi.none() ? 0
                                              : static_cast<double>(c.flux.popcount()) /
                                                    static_cast<double>(phi.popcount());
                    r.measured = std::max(r.measured, ratio);
                    if (!same || !c.flux.subset_of(future) || ratio > geo.k_close) note(r, where);
                }
            }
        }
    r.seconds = timer.seconds();
    return r;
}

SuiteResult verify_confinement_suite(uint64_t runs, Family family, int size, double rate, uint64_t seed) {
    Timer timer;
    SuiteResult r;
    r.name = "confinement";
    std::mt19937_64 rng(seed);
    Lattice lat = build_lattice(family, size);
    LayeredDecoders dec(lat);
    JitDecoder jd(dec);
    double k_close = check_closure_geometry(lat).k_close_z2;
    for (uint64_t t = 0; t < runs; t++) {
        BitVec phi = random_codeword(lat, rng);
        BitVec omega = sample_iid(rate, lat.num_faces(), rng);
        r.cases++;
        JitRun run = jit_run(jd, phi, omega);
        ConfinementReport rep = confinement_check(dec, run.ledger, 2, k_close);
        r.measured = std::max(r.measured, rep.worst_ratio);
        if (!rep.ok()) note(r, "run " + std::to_string(t));
    }
    r.seconds = timer.seconds();
    return r;
}

}  // namespace colorjit
