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

#ifndef COLORJIT_ENCODING_SCHEDULE_H
#define COLORJIT_ENCODING_SCHEDULE_H

#include <string>
#include <vector>

#include "colorjit/encoding/resource.h"

namespace colorjit {

/// Timestamps of every measurement. The logical outcome of a block becomes
/// available at `outcome_time`.
struct MeasurementSchedule {
    std::vector<std::vector<int64_t>> code_time;     // [block][qubit]
    std::vector<std::vector<int64_t>> ancilla_time;  // [block][face]
    std::vector<int64_t> outcome_time;               // [block]
};

/// How the X part of the frame is fixed before code qubits of X+Y / X-Y blocks are
/// measured. Global: from all ancillas of the block. PerLayer: a code qubit of layer i
/// only needs the ancillas of layers <= i, as in the layered frame construction.
enum class FrameCommitment { Global, PerLayer };

struct ScheduleViolation {
    uint32_t block = 0;
    char rule = 'a';  // 'a' basis choice, 'b' logical outcome dependencies
    std::string detail;
};

struct ScheduleReport {
    std::vector<ScheduleViolation> violations;
    bool ok() const { return violations.empty(); }
    size_t count(char rule) const;
};

/// (a) In an X+Y or X-Y block every code qubit is measured strictly after the
///     ancillas that fix its frame bit.
/// (b) The logical outcome comes strictly after the block's code qubits, after its
///     own ancillas unless the basis is X, and after its neighbours' ancillas unless
///     the basis is Z.
/// At most one violation per block and rule is listed.
ScheduleReport schedule_check(const ResourceGraph &rg, const MeasurementSchedule &s,
                              FrameCommitment mode = FrameCommitment::Global);

/// All ancillas at time 0, all code qubits at 1, outcomes at 2.
MeasurementSchedule global_schedule(const ResourceGraph &rg);
/// Layer by layer: ancillas of layer i at 2i, code qubits of layer i at 2i+1,
/// outcomes after the last layer.
MeasurementSchedule rotated_schedule(const ResourceGraph &rg);

}  // namespace colorjit

#endif
