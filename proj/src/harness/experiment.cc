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

#include "colorjit/harness/experiment.h"

#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <random>
#include <thread>

#include "colorjit/colex/geometry.h"
#include "colorjit/decoders/layered.h"
#include "colorjit/errors.h"
#include "colorjit/harness/failure.h"
#include "colorjit/jit/jit.h"
#include "colorjit/noise/noise.h"

namespace colorjit {

bool ResultRecord::same_outcome(const ResultRecord &o) const {
    return family == o.family && size == o.size && rate == o.rate && decoder == o.decoder && trials == o.trials &&
           failures == o.failures && mean_delta == o.mean_delta && mean_omega_hat == o.mean_omega_hat &&
           nonzero_delta == o.nonzero_delta && max_delta == o.max_delta && ledger_violations == o.ledger_violations &&
           confinement_violations == o.confinement_violations;
}

std::pair<double, double> wilson_interval(uint64_t k, uint64_t n, double z) {
    if (n == 0) return {0, 1};
    double nn = static_cast<double>(n);
    double ph = static_cast<double>(k) / nn;
    double z2 = z * z;
    double denom = 1 + z2 / nn;
    double centre = (ph + z2 / (2 * nn)) / denom;
    double half = z * std::sqrt(ph * (1 - ph) / nn + z2 / (4 * nn * nn)) / denom;
    double lo = k == 0 ? 0.0 : std::max(0.0, centre - half);
    double hi = k == n ? 1.0 : std::min(1.0, centre + half);
    return {lo, hi};
}

namespace {

// Uniformly random element of the Z2 code: a random sum of triangle boundaries.
BitVec random_codeword(const Lattice &lat, std::mt19937_64 &rng) {
    BitVec phi(lat.num_faces());
    BitVec pick = sample_iid(0.5, lat.triangles.size(), rng);
    pick.for_each_one([&](size_t t) {
        for (uint32_t e : lat.triangles[t].e)
            if (e < lat.num_faces()) phi.flip(e);
    });
    return phi;
}

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Integer tallies for one (size, rate) point; merging is plain addition, so the
// result does not depend on how trials were split over threads.
struct Tally {
    uint64_t conv_failures = 0;
    uint64_t jit_failures = 0;
    uint64_t conv_omega_hat = 0;
    uint64_t jit_omega_hat = 0;
    uint64_t delta_sum = 0;
    uint64_t nonzero_delta = 0;
    uint64_t max_delta = 0;
    uint64_t ledger_violations = 0;
    uint64_t confinement_violations = 0;

    void merge(const Tally &o) {
        conv_failures += o.conv_failures;
        jit_failures += o.jit_failures;
        conv_omega_hat += o.conv_omega_hat;
        jit_omega_hat += o.jit_omega_hat;
        delta_sum += o.delta_sum;
        nonzero_delta += o.nonzero_delta;
        max_delta = std::max(max_delta, o.max_delta);
        ledger_violations += o.ledger_violations;
        confinement_violations += o.confinement_violations;
    }
};

struct PointContext {
    const ExperimentConfig *cfg;
    const Lattice *lat;
    const LayeredDecoders *dec;
    const JitDecoder *jd;
    const FailureCriterion *fail;
    double k_close;
    double rate;
    size_t rate_index;
};

void run_trial(const PointContext &ctx, uint64_t trial, Tally &t) {
    const ExperimentConfig &cfg = *ctx.cfg;
    const Lattice &lat = *ctx.lat;
    std::mt19937_64 rng(trial_seed(cfg.seed, lat.size, ctx.rate_index, trial));
    BitVec phi = random_codeword(lat, rng);
    BitVec omega = sample_iid(ctx.rate, lat.num_faces(), rng);
    BitVec phi_tilde = phi ^ omega;
    bool want_conv = cfg.decoder != DecoderSelection::Jit;
    bool want_jit = cfg.decoder != DecoderSelection::Conventional;
    BitVec phi_bar;
    if (want_conv) {
        phi_bar = ctx.dec->conventional(phi_tilde);
        BitVec residual = phi ^ phi_bar;
        t.conv_omega_hat += residual.popcount();
        t.conv_failures += ctx.fail->fails(residual);
    }
    if (!want_jit) return;
    BitVec phi_hat;
    if (cfg.kind == ExperimentKind::Comparison) {
        JitRun run;
        try {
            run = jit_run(*ctx.jd, phi, omega);
        } catch (const LedgerViolation &) {
            t.ledger_violations++;
            t.jit_failures++;
            return;
        }
        phi_hat = run.phi_hat;
        if (cfg.lookahead == 0 && !verify_ledger(*ctx.dec, run.ledger).ok()) t.ledger_violations++;
        if (cfg.confinement && !confinement_check(*ctx.dec, run.ledger, 2, ctx.k_close).ok())
            t.confinement_violations++;
        size_t d = differential_syndrome(phi_hat, phi_bar).popcount();
        t.delta_sum += d;
        t.nonzero_delta += d != 0;
        t.max_delta = std::max<uint64_t>(t.max_delta, d);
    } else {
        phi_hat = jit_decode(*ctx.jd, phi_tilde);
    }
    BitVec residual = phi ^ phi_hat;
    t.jit_omega_hat += residual.popcount();
    t.jit_failures += ctx.fail->fails(residual);
}

Tally run_point(const PointContext &ctx) {
    uint64_t trials = ctx.cfg->trials;
    unsigned threads = ctx.cfg->threads ? ctx.cfg->threads : std::max(1u, std::thread::hardware_concurrency());
    constexpr uint64_t CHUNK = 256;
    uint64_t chunks = (trials + CHUNK - 1) / CHUNK;
    threads = static_cast<unsigned>(std::min<uint64_t>(threads, chunks));
    std::vector<Tally> partial(chunks);
    std::atomic<uint64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        try {
            for (uint64_t c; (c = next.fetch_add(1)) < chunks;) {
                uint64_t end = std::min(trials, (c + 1) * CHUNK);
                for (uint64_t k = c * CHUNK; k < end; k++) run_trial(ctx, k, partial[c]);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
            next = chunks;
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < threads; k++) pool.emplace_back(worker);
        for (auto &th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);
    Tally total;
    for (const Tally &p : partial) total.merge(p);
    return total;
}

}  // namespace

uint64_t trial_seed(uint64_t master, int size, size_t rate_index, uint64_t trial) {
    uint64_t h = splitmix64(master);
    h = splitmix64(h ^ static_cast<uint64_t>(size));
    h = splitmix64(h ^ rate_index);
    return splitmix64(h ^ trial);
}

std::vector<ResultRecord> run_experiment(const ExperimentConfig &cfg) {
    cfg.validate();
    std::vector<ResultRecord> out;
    for (int d : cfg.sizes) {
        Lattice lat = build_lattice(cfg.family, d, cfg.thickness);
        LayeredDecoders dec(lat);
        JitDecoder jd(dec, JitOptions{cfg.lookahead, false});
        FailureCriterion fail(dec.graph(), cfg.fail_distance ? cfg.fail_distance : default_fail_distance(d));
        double k_close = cfg.confinement ? check_closure_geometry(lat).k_close_z2 : 0;
        for (size_t r = 0; r < cfg.rates.size(); r++) {
            auto start = std::chrono::steady_clock::now();
            PointContext ctx{&cfg, &lat, &dec, &jd, &fail, k_close, cfg.rates[r], r};
            Tally t = run_point(ctx);
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            double n = static_cast<double>(cfg.trials);
            ResultRecord base;
            base.family = family_name(cfg.family);
            base.size = d;
            base.rate = cfg.rates[r];
            base.trials = cfg.trials;
            base.wall_seconds = secs;
            if (cfg.decoder != DecoderSelection::Jit) {
                ResultRecord rec = base;
                rec.decoder = "conventional";
                rec.failures = t.conv_failures;
                rec.mean_omega_hat = static_cast<double>(t.conv_omega_hat) / n;
                out.push_back(rec);
            }
            if (cfg.decoder != DecoderSelection::Conventional) {
                ResultRecord rec = base;
                rec.decoder = "jit";
                rec.failures = t.jit_failures;
                rec.mean_omega_hat = static_cast<double>(t.jit_omega_hat) / n;
                rec.mean_delta = static_cast<double>(t.delta_sum) / n;
                rec.nonzero_delta = t.nonzero_delta;
                rec.max_delta = t.max_delta;
                rec.ledger_violations = t.ledger_violations;
                rec.confinement_violations = t.confinement_violations;
                out.push_back(rec);
            }
        }
    }
    return out;
}

std::vector<ResultRecord> run_threshold_experiment(ExperimentConfig cfg) {
    cfg.kind = ExperimentKind::Threshold;
    return run_experiment(cfg);
}

std::vector<ResultRecord> run_jit_comparison(ExperimentConfig cfg) {
    cfg.kind = ExperimentKind::Comparison;
    cfg.decoder = DecoderSelection::Both;
    return run_experiment(cfg);
}

void write_results_csv(std::ostream &out, const std::vector<ResultRecord> &records) {
    out << "# colorjit.results v" << RESULTS_FORMAT_VERSION << "\n";
    out << "family,size,rate,decoder,trials,failures,failure_rate,wilson_low,wilson_high,mean_delta,"
           "nonzero_delta,max_delta,mean_omega_hat,ledger_violations,confinement_violations,wall_seconds\n";
    for (const auto &r : records) {
        auto [lo, hi] = wilson_interval(r.failures, r.trials);
        out << r.family << ',' << r.size << ',' << r.rate << ',' << r.decoder << ',' << r.trials << ',' << r.failures
            << ',' << r.failure_rate() << ',' << lo << ',' << hi << ',' << r.mean_delta << ',' << r.nonzero_delta << ','
            << r.max_delta << ',' << r.mean_omega_hat << ',' << r.ledger_violations << ',' << r.confinement_violations
            << ',' << r.wall_seconds << '\n';
    }
}

nlohmann::json results_to_json(const ExperimentConfig &cfg, const std::vector<ResultRecord> &records) {
    using nlohmann::json;
    json rs = json::array();
    for (const auto &r : records) {
        auto [lo, hi] = wilson_interval(r.failures, r.trials);
        rs.push_back(json{{"family", r.family},
                          {"size", r.size},
                          {"rate", r.rate},
                          {"decoder", r.decoder},
                          {"trials", r.trials},
                          {"failures", r.failures},
                          {"failure_rate", r.failure_rate()},
                          {"wilson", {lo, hi}},
                          {"mean_delta", r.mean_delta},
                          {"nonzero_delta", r.nonzero_delta},
                          {"max_delta", r.max_delta},
                          {"mean_omega_hat", r.mean_omega_hat},
                          {"ledger_violations", r.ledger_violations},
                          {"confinement_violations", r.confinement_violations},
                          {"wall_seconds", r.wall_seconds}});
    }
    return json{{"format", "colorjit.results"},
                {"version", RESULTS_FORMAT_VERSION},
                {"config", format_config(cfg)},
                {"records", rs}};
}

void write_results(const ExperimentConfig &cfg, const std::vector<ResultRecord> &records) {
    std::ofstream file;
    std::ostream *out = &std::cout;
    if (!cfg.out.empty()) {
        file.open(cfg.out);
        if (!file) throw std::runtime_error("cannot open '" + cfg.out + "' for writing");
        out = &file;
    }
    if (cfg.format == "json")
        *out << results_to_json(cfg, records).dump(2) << '\n';
    else
        write_results_csv(*out, records);
    out->flush();
    if (!*out) throw std::runtime_error("write to '" + (cfg.out.empty() ? std::string("stdout") : cfg.out) + "' failed");
}

}  // namespace colorjit
