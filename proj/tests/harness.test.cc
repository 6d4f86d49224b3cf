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

#include <set>
#include <sstream>

#include "colorjit/decoders/layered.h"
#include "colorjit/errors.h"
#include "colorjit/harness/config.h"
#include "colorjit/harness/experiment.h"
#include "colorjit/harness/failure.h"

using namespace colorjit;

TEST(failure, spans_of_small_chains) {
    Lattice lat = build_lattice(Family::Slab, 2);
    SyndromeGraph g = SyndromeGraph::from_lattice(lat);
    FailureCriterion fc(g, default_fail_distance(2));
    ASSERT_EQ(fc.min_distance(), 3);
    ASSERT_EQ(fc.span(BitVec(g.num_edges())), -1);

    // Two leaves of the same cell.
    for (uint32_t c = 0; c < lat.num_cells(); c++) {
        std::vector<uint32_t> to_leaves;
        for (uint32_t e : g.incident[c])
            if (g.outer[g.other_end(e, c)]) to_leaves.push_back(e);
        if (to_leaves.size() < 2) continue;
        BitVec chain(g.num_edges());
        chain.set(to_leaves[0]);
        chain.set(to_leaves[1]);
        ASSERT_EQ(fc.span(chain), 2);
        ASSERT_FALSE(fc.fails(chain));
        ASSERT_EQ(fc.outer_distance(g.other_end(to_leaves[0], c), g.other_end(to_leaves[1], c)), 2);
        break;
    }

    // A leaf-cell-cell-leaf path spans 3.
    bool found = false;
    for (uint32_t e = 0; e < g.num_edges() && !found; e++) {
        uint32_t a = g.edges[e].u, b = g.edges[e].v;
        if (g.outer[a] || g.outer[b]) continue;
        int64_t la = -1, lb = -1;
        for (uint32_t f : g.incident[a])
            if (g.outer[g.other_end(f, a)]) la = f;
        for (uint32_t f : g.incident[b])
            if (g.outer[g.other_end(f, b)]) lb = f;
        if (la < 0 || lb < 0) continue;
        BitVec chain(g.num_edges());
        chain.set(e);
        chain.set(la);
        chain.set(lb);
        ASSERT_EQ(fc.span(chain), 3);
        ASSERT_TRUE(fc.fails(chain));
        found = true;
    }
    ASSERT_TRUE(found);
}

TEST(failure, outer_paths_avoid_other_outer_vertices) {
    Lattice lat = build_lattice(Family::Wedge, 3);
    SyndromeGraph g = SyndromeGraph::from_lattice(lat);
    FailureCriterion fc(g, 5);
    for (uint32_t a = 0; a < g.num_vertices(); a++) {
        if (!g.outer[a]) continue;
        for (uint32_t b = a + 1; b < g.num_vertices(); b++) {
            if (!g.outer[b]) continue;
            int64_t d = fc.outer_distance(a, b);
            ASSERT_GE(d, 2);
            ASSERT_EQ(d, fc.outer_distance(b, a));
        }
    }
}

TEST(config, parse_and_format) {
    auto cfg = parse_config_text(
        "# scaling run\n"
        "experiment = comparison\n"
        "family = wedge\n"
        "sizes = 2, 3\n"
        "rates = 0.01,0.002   # two points\n"
        "trials = 500\n"
        "seed = 99\n"
        "lookahead = 0\n"
        "confinement = true\n"
        "format = json\n");
    ASSERT_EQ(cfg.kind, ExperimentKind::Comparison);
    ASSERT_EQ(cfg.family, Family::Wedge);
    ASSERT_EQ(cfg.sizes, (std::vector<int>{2, 3}));
    ASSERT_EQ(cfg.rates, (std::vector<double>{0.01, 0.002}));
    ASSERT_EQ(cfg.trials, 500);
    ASSERT_EQ(cfg.seed, 99);
    ASSERT_TRUE(cfg.confinement);
    cfg.validate();
    auto again = parse_config_text(format_config(cfg));
    ASSERT_EQ(format_config(again), format_config(cfg));
}

TEST(config, errors) {
    EXPECT_THROW(parse_config_text("colour = red\n"), ParseError);
    EXPECT_THROW(parse_config_text("trials\n"), ParseError);
    EXPECT_THROW(parse_config_text("trials = ten\n"), ParseError);
    EXPECT_THROW(parse_config_text("rates = 0.1,\n"), ParseError);
    EXPECT_THROW(parse_config_text("family = cube\n"), ParseError);
    EXPECT_THROW(parse_config_text("confinement = maybe\n"), ParseError);
    EXPECT_THROW(parse_config_text("sizes = 1\n").validate(), std::invalid_argument);
    EXPECT_THROW(parse_config_text("trials = 0\n").validate(), std::invalid_argument);
    EXPECT_THROW(parse_config_text("rates = 1.5\n").validate(), std::invalid_argument);
    EXPECT_THROW(parse_config_text("format = xml\n").validate(), std::invalid_argument);
    EXPECT_THROW(parse_config_text("experiment = comparison\ndecoder = jit\n").validate(), std::invalid_argument);
}

TEST(stats, wilson_interval) {
    auto [lo, hi] = wilson_interval(0, 10);
    EXPECT_EQ(lo, 0);
    EXPECT_NEAR(hi, 0.2775, 1e-4);
    auto [lo2, hi2] = wilson_interval(50, 100);
    EXPECT_NEAR(lo2, 0.4038, 1e-4);
    EXPECT_NEAR(hi2, 0.5962, 1e-4);
    auto [lo3, hi3] = wilson_interval(10, 10);
    EXPECT_NEAR(lo3, 0.7225, 1e-4);
    EXPECT_EQ(hi3, 1);
}

TEST(stats, trial_seeds_differ) {
    std::set<uint64_t> seen;
    for (int d = 2; d <= 4; d++)
        for (size_t r = 0; r < 3; r++)
            for (uint64_t t = 0; t < 100; t++) seen.insert(trial_seed(7, d, r, t));
    ASSERT_EQ(seen.size(), 900);
    ASSERT_NE(trial_seed(7, 2, 0, 0), trial_seed(8, 2, 0, 0));
}

TEST(experiment, noiseless_runs_never_fail) {
    ExperimentConfig cfg;
    cfg.kind = ExperimentKind::Comparison;
    cfg.rates = {0};
    cfg.trials = 200;
    auto recs = run_experiment(cfg);
    ASSERT_EQ(recs.size(), 6);
    for (const auto &r : recs) {
        EXPECT_EQ(r.failures, 0);
        EXPECT_EQ(r.mean_omega_hat, 0);
        EXPECT_EQ(r.nonzero_delta, 0);
        EXPECT_EQ(r.ledger_violations, 0);
    }
}

TEST(experiment, deterministic_across_threads) {
    ExperimentConfig cfg;
    cfg.sizes = {2, 3};
    cfg.rates = {0.02, 0.05};
    cfg.trials = 1000;
    cfg.seed = 11;
    cfg.threads = 1;
    auto a = run_threshold_experiment(cfg);
    cfg.threads = 5;
    auto b = run_threshold_experiment(cfg);
    ASSERT_EQ(a.size(), b.size());
    for (size_t k = 0; k < a.size(); k++) ASSERT_TRUE(a[k].same_outcome(b[k])) << k;
    cfg.seed = 12;
    auto c = run_threshold_experiment(cfg);
    bool differs = false;
    for (size_t k = 0; k < a.size(); k++) differs = differs || !a[k].same_outcome(c[k]);
    ASSERT_TRUE(differs);
}

TEST(experiment, comparison_statistics) {
    ExperimentConfig cfg;
    cfg.sizes = {3};
    cfg.rates = {0.005, 0.02, 0.05};
    cfg.trials = 600;
    cfg.confinement = true;
    auto recs = run_jit_comparison(cfg);
    ASSERT_EQ(recs.size(), 6);
    double last_delta = -1;
    for (const auto &r : recs) {
        if (r.decoder != "jit") continue;
        EXPECT_EQ(r.ledger_violations, 0);
        EXPECT_EQ(r.confinement_violations, 0);
        EXPECT_GT(r.mean_delta, last_delta);
        last_delta = r.mean_delta;
    }
    // Failures of each decoder are counted on the same samples.
    for (size_t k = 0; k < recs.size(); k += 2) {
        ASSERT_EQ(recs[k].decoder, "conventional");
        ASSERT_EQ(recs[k + 1].decoder, "jit");
        ASSERT_EQ(recs[k].rate, recs[k + 1].rate);
    }
}

TEST(experiment, output_formats) {
    ExperimentConfig cfg;
    cfg.sizes = {2};
    cfg.rates = {0.01};
    cfg.trials = 50;
    auto recs = run_threshold_experiment(cfg);
    std::ostringstream csv;
    write_results_csv(csv, recs);
    std::istringstream lines(csv.str());
    std::string first, header, row;
    std::getline(lines, first);
    std::getline(lines, header);
    ASSERT_EQ(first, "# colorjit.results v1");
    ASSERT_EQ(header,
              "family,size,rate,decoder,trials,failures,failure_rate,wilson_low,wilson_high,mean_delta,"
              "nonzero_delta,max_delta,mean_omega_hat,ledger_violations,confinement_violations,wall_seconds");
    size_t rows = 0;
    while (std::getline(lines, row)) rows++;
    ASSERT_EQ(rows, 2);
    auto j = results_to_json(cfg, recs);
    ASSERT_EQ(j["format"], "colorjit.results");
    ASSERT_EQ(j["records"].size(), 2);
    ASSERT_EQ(parse_config_text(j["config"].get<std::string>()).trials, 50);

    cfg.out = "/nonexistent-dir/results.csv";
    EXPECT_THROW(write_results(cfg, recs), std::runtime_error);
}
