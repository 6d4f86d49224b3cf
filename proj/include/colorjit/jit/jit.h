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

#include <string>
#include <vector>

#include "colorjit/decoders/layered.h"
#include "json.hpp"

namespace colorjit {

struct JitOptions {
    /// Number of later layers visible when settling a layer. Ledger identities are
    /// only guaranteed at zero. A positive lookahead always uses the restricted
    /// compensation below: the other form would re-close the unsettled layers of
    /// gamma_{i-1} and discard what the extra layers revealed.
    int lookahead = 0;
    /// Compensate with (gamma_{i-1} + gamma'_i) restricted to the earlier layers instead
    /// of gamma_{i-1} + (gamma'_i restricted to the earlier layers). Both agree while
    /// every gamma_i stays inside the faces of layers <= i.
    bool alternative_compensation = false;
};

/// State carried between steps: the layer just settled, the committed part of the
/// output so far, and the last gamma.
struct JitState {
    int layer = 0;
    BitVec committed;
    BitVec gamma;
};

struct JitStep {
    int layer = 0;
    BitVec gamma_prime;
    BitVec gamma;
    /// Compensating configuration produced by the closure decoder of the previous layer.
    BitVec epsilon;
    /// Newly committed faces, gamma restricted to this layer's faces.
    BitVec committed;
};

/// Naive just-in-time decoder built from layered open and closed decoders. All
/// configurations are chains of the Z2 picture.
class JitDecoder {
   public:
    explicit JitDecoder(const LayeredDecoders &dec, JitOptions opts = {});

    const LayeredDecoders &decoders() const { return *dec_; }
    const JitOptions &options() const { return opts_; }
    int num_layers() const { return dec_->num_layers(); }

    JitState initial_state() const;
    /// Layer whose faces must be observed before settling the next layer.
    int visible_layer(const JitState &s) const;
    /// Settles layer s.layer + 1 from `observed`, the noisy outcomes on the faces of
    /// layers <= visible_layer(s). Throws std::invalid_argument on later data.
    JitStep step(JitState &s, const BitVec &observed) const;

   private:
    const LayeredDecoders *dec_;
    JitOptions opts_;
};

/// Everything needed to audit a run. Vectors are indexed by layer, entry 0 empty.
struct ErrorLedger {
    BitVec omega;
    BitVec omega_hat;
    std::vector<BitVec> omega_prime;
    std::vector<BitVec> omega_layer;
    std::vector<BitVec> epsilon;
};

struct JitRun {
    BitVec phi_hat;
    std::vector<JitStep> steps;
    ErrorLedger ledger;
};

/// Decodes phi_tilde layer by layer, revealing only the outcomes each step may see.
BitVec jit_decode(const JitDecoder &jd, const BitVec &phi_tilde);

/// Runs the decoder on phi + omega and fills the ledger against the true phi.
/// Throws LedgerViolation if the output is not a codeword or a commitment changes.
JitRun jit_run(const JitDecoder &jd, const BitVec &phi, const BitVec &omega);

struct LedgerReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Recomputes the ledger identities from omega alone:
///   omega'_i = omega&Phi_i + D_i(omega&Phi_i),
///   omega_i = omega_{i-1} + omega'_i&Lambda_i + eps_i,
///   eps_i = E_{i-1}(omega'_{i-1} + omega'_i&Phi_{i-1}),
///   omega_hat = omega_n = sum_i (omega'_i&Lambda_i + eps_i).
LedgerReport verify_ledger(const LayeredDecoders &dec, const ErrorLedger &ledger);

/// phi_hat + phi_bar.
BitVec differential_syndrome(const BitVec &phi_hat, const BitVec &phi_bar);

struct ConfinementReport {
    double c = 0;
    size_t components = 0;
    size_t violations = 0;
    bool covered = true;
    /// Largest |k| / |k & omega| over the checked components.
    double worst_ratio = 0;
    /// Largest |mu| / |k & delta| over the closures built.
    double worst_closure_ratio = 0;
    /// The checked components themselves, for spherification.
    std::vector<BitVec> clusters;
    bool ok() const { return covered && violations == 0; }
};

double confinement_constant(double k_min, double k_close);

/// Builds, for every layer, the components of Omega_i = eps_i | omega'_{i-1} | omega'_i |
/// omega, closes each component's share of delta_i with the closed decoder of the
/// previous layer, and checks |k| <= c |k & omega| for the components of mu_i | Omega_i
/// together with omega_hat lying inside their union.
ConfinementReport confinement_check(const LayeredDecoders &dec, const ErrorLedger &ledger, double k_min, double k_close);

nlohmann::json trace_to_json(const JitRun &run);

}  // namespace colorjit
