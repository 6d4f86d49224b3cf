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

#ifndef COLORJIT_HARNESS_EXPERIMENT_H
#define COLORJIT_HARNESS_EXPERIMENT_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "colorjit/harness/config.h"
#include "json.hpp"

namespace colorjit {

constexpr int RESULTS_FORMAT_VERSION = 1;

struct ResultRecord {
    std::string family;
    int size = 0;
    double rate = 0;
    std::string decoder;  // "conventional" or "jit"
    uint64_t trials = 0;
    uint64_t failures = 0;
    /// Mean |delta| and |omega_hat| per trial, and the number of trials with a
    /// nonzero delta (JIT records of comparison experiments only).
    double mean_delta = 0;
    double mean_omega_hat = 0;
    uint64_t nonzero_delta = 0;
    uint64_t max_delta = 0;
    uint64_t ledger_violations = 0;
    uint64_t confinement_violations = 0;
    double wall_seconds = 0;

    double failure_rate() const { return trials ? static_cast<double>(failures) / static_cast<double>(trials) : 0; }
    /// Equality of everything except the wall clock.
    bool same_outcome(const ResultRecord &o) const;
};

/// Wilson score interval for k successes in n trials at the given normal quantile.
std::pair<double, double> wilson_interval(uint64_t k, uint64_t n, double z = 1.959963984540054);

/// 64-bit seed for one trial, derived from the master seed and the trial coordinates.
uint64_t trial_seed(uint64_t master, int size, size_t rate_index, uint64_t trial);

/// Samples omega i.i.d. over the faces and a uniformly random syndrome phi, decodes
/// phi + omega, and counts failures of the residual (see FailureCriterion). Records come
/// out per (size, rate, decoder) in configuration order. Comparison experiments also
/// audit every JIT run's ledger and collect delta statistics against the
/// conventional decoder.
std::vector<ResultRecord> run_experiment(const ExperimentConfig &cfg);
std::vector<ResultRecord> run_threshold_experiment(ExperimentConfig cfg);
std::vector<ResultRecord> run_jit_comparison(ExperimentConfig cfg);

/// Fixed columns, preceded by a `# colorjit.results v1` line.
void write_results_csv(std::ostream &out, const std::vector<ResultRecord> &records);
nlohmann::json results_to_json(const ExperimentConfig &cfg, const std::vector<ResultRecord> &records);
/// Writes to cfg.out (or standard output) in cfg.format. Throws std::runtime_error on IO failure.
void write_results(const ExperimentConfig &cfg, const std::vector<ResultRecord> &records);

}  // namespace colorjit

#endif
