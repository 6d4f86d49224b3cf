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

#ifndef COLORJIT_ERRORS_H
#define COLORJIT_ERRORS_H

#include <stdexcept>
#include <string>

namespace colorjit {

struct InfeasibleSyndrome : std::runtime_error {
    explicit InfeasibleSyndrome(const std::string &what) : std::runtime_error("infeasible syndrome: " + what) {}
};

struct NotSimple : std::runtime_error {
    explicit NotSimple(const std::string &what) : std::runtime_error("not simple: " + what) {}
};

struct NotCausal : std::runtime_error {
    explicit NotCausal(const std::string &what) : std::runtime_error("not causal: " + what) {}
};

struct InvalidGeometry : std::runtime_error {
    explicit InvalidGeometry(const std::string &what) : std::runtime_error("invalid geometry: " + what) {}
};

struct NoMatch : std::runtime_error {
    explicit NoMatch(const std::string &what) : std::runtime_error("no match: " + what) {}
};

struct FacetMismatch : std::runtime_error {
    explicit FacetMismatch(const std::string &what) : std::runtime_error("facet mismatch: " + what) {}
};

struct LedgerViolation : std::runtime_error {
    explicit LedgerViolation(const std::string &what) : std::runtime_error("ledger violation: " + what) {}
};

struct DepthGuard : std::runtime_error {
    explicit DepthGuard(const std::string &what) : std::runtime_error("depth guard: " + what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string &what) : std::runtime_error("parse error: " + what) {}
};

}  // namespace colorjit

#endif
