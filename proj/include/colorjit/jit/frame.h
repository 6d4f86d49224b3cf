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

#pragma once

#include "colorjit/colex/lattice.h"

namespace colorjit {

struct FrameError {
    /// phi_true + phi_corrected, a syndrome.
    BitVec omega_bar;
    /// X errors on the code qubits whose syndrome is omega_bar.
    BitVec x_mask;
};

/// Effective frame error left by correcting phi_true to phi_corrected (both syndromes,
/// as face sets). Throws InfeasibleSyndrome when either is not a syndrome.
FrameError residual_frame_error(const Lattice &lat, const BitVec &phi_true, const BitVec &phi_corrected);

}  // namespace colorjit
