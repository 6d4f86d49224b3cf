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

#include <vector>

#include "colorjit/decoders/graph.h"
#include "json.hpp"

namespace colorjit {

/// A decoding problem and a recorded answer, for regression corpora.
struct DecodeInstance {
    SyndromeGraph graph;
    std::vector<uint32_t> defects;
    BitVec chain;
};

nlohmann::json graph_to_json(const SyndromeGraph &g);
SyndromeGraph graph_from_json(const nlohmann::json &j);
nlohmann::json instance_to_json(const DecodeInstance &inst);
DecodeInstance instance_from_json(const nlohmann::json &j);

}  // namespace colorjit
