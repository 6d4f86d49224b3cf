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

#ifndef COLORJIT_HARNESS_VERIFY_H
#define COLORJIT_HARNESS_VERIFY_H

#include <cstdint>
#include <string>
#include <vector>

#include "colorjit/colex/lattice.h"

namespace colorjit {

/// Outcome of a property suite: how many cases ran, how many failed, and one
/// suite-specific measurement (for example the largest ratio seen).
struct SuiteResult {
    std::string name;
    uint64_t cases = 0;
    uint64_t failures = 0;
    double measured = 0;
    std::string detail;
    double seconds = 0;
    bool ok() const { return cases > 0 && failures == 0; }
};

/// Ball identities on every family at the given sizes.
SuiteResult verify_ball_identity_suite(const std::vector<int> &sizes);

/// Matching decoder against the exact oracle on random errors with at most
/// `max_defects` defects, spread over the sizes. `measured` is the largest
/// minimization ratio |k| / |k & omega| seen.
SuiteResult verify_oracle_suite(uint64_t instances, const std::vector<int> &sizes, size_t max_defects, uint64_t seed);

/// Ledger identities on JIT runs over every family and the given sizes, with rates
/// drawn uniformly from [0, max_rate].
SuiteResult verify_ledger_suite(uint64_t runs, const std::vector<int> &sizes, double max_rate, uint64_t seed);

/// Closure constructor on `per_layer` random open configurations for every layer
/// boundary: same inner charges, support after the layer, and weight within
/// k_close = 4k(k_face - 1) times the input. `measured` is the largest weight ratio.
SuiteResult verify_closure_suite(uint64_t per_layer, const std::vector<int> &sizes, uint64_t seed);

/// Confinement check with k_min = 2 and the measured k_close on `runs` JIT runs.
/// `measured` is the largest component ratio seen.
SuiteResult verify_confinement_suite(uint64_t runs, Family family, int size, double rate, uint64_t seed);

}  // namespace colorjit

#endif
