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

#include <memory>
#include <vector>

#include "colorjit/colex/lattice.h"
#include "colorjit/decoders/mwpm.h"

namespace colorjit {

struct LayeredDecoderOptions {
    /// Cost of absorbing a charge at a future cell in the open decoder. Zero treats
    /// those cells exactly like outer vertices.
    int64_t interface_cost = 0;
};

/// Decoders adapted to a layer structure, all on the Z2 picture of the lattice.
/// For layer i, the open problem lives on the faces of layers <= i with every later
/// cell absorbing; the closed problem lives on the remaining faces with only facets
/// absorbing. Index 0 gives the full problem for the closed side; index n for the open side.
/// Chains are BitVecs over graph().num_edges(), which equals the face count unless a
/// positive interface cost adds absorbing twins.
class LayeredDecoders {
   public:
    explicit LayeredDecoders(const Lattice &lat, LayeredDecoderOptions opts = {});

    const Lattice &lattice() const { return *lat_; }
    const SyndromeGraph &graph() const { return graph_; }
    int num_layers() const { return lat_->layers.num_layers; }
    const MatchingDecoder &full() const { return *closed_[0]; }
    const MatchingDecoder &open(int i) const { return *open_.at(static_cast<size_t>(i)); }
    const MatchingDecoder &closed(int i) const { return *closed_.at(static_cast<size_t>(i)); }

    /// Faces of layers <= i, and their complement.
    const BitVec &past(int i) const { return past_.at(static_cast<size_t>(i)); }
    const BitVec &future(int i) const { return future_.at(static_cast<size_t>(i)); }

    /// Correction for omega on the open problem; supported on past(i).
    BitVec open_correction(int i, const BitVec &omega) const;
    /// omega plus its open correction: an element of the open code for layer i.
    BitVec open_decoder(int i, const BitVec &omega) const;
    /// Minimum-weight chain on the closed problem with the defects of phi. Every defect
    /// of phi must be a cell after layer i, otherwise NoMatch.
    BitVec estimated_error(int i, const BitVec &phi) const;
    /// omega (inside future(i)) plus its estimated error.
    BitVec closed_decoder(int i, const BitVec &omega) const;
    /// phi plus its estimated error; a codeword differing from phi only in future(i).
    BitVec closure_decoder(int i, const BitVec &phi) const;
    /// Full-graph decoder output: omega plus its minimum-weight correction.
    BitVec conventional(const BitVec &omega) const;

   private:
    const Lattice *lat_;
    SyndromeGraph graph_;
    std::vector<BitVec> past_, future_;
    std::vector<std::unique_ptr<MatchingDecoder>> open_, closed_;
};

}  // namespace colorjit
