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

#include "colorjit/encoding/schedule.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace colorjit {

size_t ScheduleReport::count(char rule) const {
    return static_cast<size_t>(
        std::count_if(violations.begin(), violations.end(), [&](const ScheduleViolation &v) { return v.rule == rule; }));
}

namespace {

int64_t latest(const std::vector<int64_t> &ts) {
    int64_t m = std::numeric_limits<int64_t>::min();
    for (int64_t t : ts) m = std::max(m, t);
    return m;
}

}  // namespace

ScheduleReport schedule_check(const ResourceGraph &rg, const MeasurementSchedule &s, FrameCommitment mode) {
    size_t nb = rg.num_blocks();
    if (s.code_time.size() != nb || s.ancilla_time.size() != nb || s.outcome_time.size() != nb)
        throw std::invalid_argument("schedule_check: schedule does not cover every block");
    for (size_t b = 0; b < nb; b++) {
        const Lattice &lat = *rg.blocks[b].lattice;
        if (s.code_time[b].size() != lat.num_qubits() || s.ancilla_time[b].size() != lat.num_faces())
            throw std::invalid_argument("schedule_check: schedule does not cover every qubit");
    }
    ScheduleReport rep;
    for (uint32_t b = 0; b < nb; b++) {
        const Block &blk = rg.blocks[b];
        const Lattice &lat = *blk.lattice;
        const auto &ct = s.code_time[b];
        const auto &at = s.ancilla_time[b];
        if (is_non_pauli(blk.basis)) {
            if (mode == FrameCommitment::Global) {
                int64_t last = latest(at);
                for (uint32_t q = 0; q < lat.num_qubits(); q++)
                    if (ct[q] <= last) {
                        rep.violations.push_back({b, 'a', "code qubit " + std::to_string(q) + " measured at " +
                                                              std::to_string(ct[q]) + " before the last ancilla at " +
                                                              std::to_string(last)});
                        break;
                    }
            } else {
                int n = lat.layers.num_layers;
                std::vector<int64_t> last(n + 1, std::numeric_limits<int64_t>::min());
                for (uint32_t f = 0; f < lat.num_faces(); f++) {
                    int l = lat.layers.face_layer[f];
                    last[l] = std::max(last[l], at[f]);
                }
                for (int i = 1; i <= n; i++) last[i] = std::max(last[i], last[i - 1]);
                for (uint32_t q = 0; q < lat.num_qubits(); q++) {
                    int l = lat.layers.qubit_layer[q];
                    if (ct[q] <= last[l]) {
                        rep.violations.push_back({b, 'a', "code qubit " + std::to_string(q) + " of layer " +
                                                              std::to_string(l) + " measured before its layer's ancillas"});
                        break;
                    }
                }
            }
        }
        int64_t need = latest(ct);
        std::string what = "own code qubits";
        if (blk.basis != MeasBasis::X && latest(at) > need) {
            need = latest(at);
            what = "own ancillas";
        }
        if (blk.basis != MeasBasis::Z)
            for (uint32_t nbr : rg.neighbours(b)) {
                int64_t t = latest(s.ancilla_time[nbr]);
                if (t > need) {
                    need = t;
                    what = "ancillas of block " + std::to_string(nbr);
                }
            }
        if (s.outcome_time[b] <= need)
            rep.violations.push_back({b, 'b', "logical outcome at " + std::to_string(s.outcome_time[b]) +
                                                  " does not follow the " + what});
    }
    return rep;
}

MeasurementSchedule global_schedule(const ResourceGraph &rg) {
    MeasurementSchedule s;
    for (const auto &b : rg.blocks) {
        s.ancilla_time.emplace_back(b.lattice->num_faces(), 0);
        s.code_time.emplace_back(b.lattice->num_qubits(), 1);
        s.outcome_time.push_back(2);
    }
    return s;
}

MeasurementSchedule rotated_schedule(const ResourceGraph &rg) {
    MeasurementSchedule s;
    int64_t end = 0;
    for (const auto &b : rg.blocks) {
        const Lattice &lat = *b.lattice;
        std::vector<int64_t> at(lat.num_faces()), ct(lat.num_qubits());
        for (uint32_t f = 0; f < lat.num_faces(); f++) at[f] = 2 * int64_t{lat.layers.face_layer[f]};
        for (uint32_t q = 0; q < lat.num_qubits(); q++) ct[q] = 2 * int64_t{lat.layers.qubit_layer[q]} + 1;
        end = std::max(end, 2 * int64_t{lat.layers.num_layers} + 2);
        s.ancilla_time.push_back(std::move(at));
        s.code_time.push_back(std::move(ct));
    }
    s.outcome_time.assign(rg.num_blocks(), end);
    return s;
}

}  // namespace colorjit
