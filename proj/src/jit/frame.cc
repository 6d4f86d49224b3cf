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

#include "colorjit/jit/frame.h"

#include "colorjit/errors.h"
#include "colorjit/gf2/linalg.h"

namespace colorjit {

FrameError residual_frame_error(const Lattice &lat, const BitVec &phi_true, const BitVec &phi_corrected) {
    if (!lat.is_syndrome(phi_true)) throw InfeasibleSyndrome("residual_frame_error: true configuration is not a syndrome");
    if (!lat.is_syndrome(phi_corrected)) throw InfeasibleSyndrome("residual_frame_error: corrected configuration is not a syndrome");
    FrameError out;
    out.omega_bar = phi_true ^ phi_corrected;
    auto x = solve(lat.face_checks(), out.omega_bar);
    if (!x) throw InfeasibleSyndrome("residual_frame_error: no Pauli frame has this syndrome");
    out.x_mask = *x;
    return out;
}

}  // namespace colorjit
