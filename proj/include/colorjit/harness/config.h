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

#ifndef COLORJIT_HARNESS_CONFIG_H
#define COLORJIT_HARNESS_CONFIG_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "colorjit/colex/lattice.h"

namespace colorjit {

enum class DecoderSelection { Conventional, Jit, Both };
enum class ExperimentKind { Threshold, Comparison };

std::string decoder_selection_name(DecoderSelection d);
DecoderSelection parse_decoder_selection(const std::string &name);
std::string experiment_kind_name(ExperimentKind k);
ExperimentKind parse_experiment_kind(const std::string &name);

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::Threshold;
    Family family = Family::Slab;
    std::vector<int> sizes{2, 3, 4};
    int thickness = 1;
    std::vector<double> rates{0.005};
    uint64_t trials = 10000;
    uint64_t seed = 1;
    DecoderSelection decoder = DecoderSelection::Both;
    int lookahead = 0;
    /// Minimum outer-to-outer span counted as a failure; 0 picks the code distance.
    int64_t fail_distance = 0;
    /// Run the confinement check on every JIT run (comparison experiments).
    bool confinement = false;
    unsigned threads = 0;  // 0: hardware concurrency
    std::string out;       // empty: standard output
    std::string format = "csv";

    /// Throws std::invalid_argument describing the first problem found.
    void validate() const;
};

/// Flat `key = value` text, one setting per line, `#` starts a comment. Lists are
/// comma separated. Unknown keys and malformed values throw ParseError.
ExperimentConfig parse_config(std::istream &in);
ExperimentConfig parse_config_text(const std::string &text);
/// Applies a single setting to `cfg`, with the same keys as the file format.
void apply_setting(ExperimentConfig &cfg, const std::string &key, const std::string &value);
std::string format_config(const ExperimentConfig &cfg);

}  // namespace colorjit

#endif
