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

#ifndef COLORJIT_COLEX_SERIALIZE_H
#define COLORJIT_COLEX_SERIALIZE_H

#include <string>

#include "colorjit/colex/lattice.h"
#include "json.hpp"

namespace colorjit {

constexpr int LATTICE_FORMAT_VERSION = 1;

/// Versioned JSON form of the extended dual graph: vertices with colour, kind and
/// layer, edges with flux labels, triangles and tetrahedra (qubits).
nlohmann::json lattice_to_json(const Lattice &lat);
Lattice lattice_from_json(const nlohmann::json &j);

}  // namespace colorjit

#endif
