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

#include "colorjit/colex/flux.h"

#include "colorjit/errors.h"

namespace colorjit {

Color color_from_char(char c) {
    switch (c) {
        case 'r':
            return Color::R;
        case 'g':
            return Color::G;
        case 'b':
            return Color::B;
        case 'y':
            return Color::Y;
    }
    throw ParseError(std::string("unknown colour '") + c + "'");
}

Flux Flux::from_mask(uint8_t mask) {
    if ((mask & ~0xF) || (std::popcount(static_cast<unsigned>(mask)) & 1)) {
        throw std::invalid_argument("flux mask must be an even subset of four colours");
    }
    Flux f;
    f.mask_ = mask;
    return f;
}

std::string Flux::str() const {
    if (mask_ == 0) return "0";
    std::string s;
    for (Color c : ALL_COLORS) {
        if (mask_ >> static_cast<int>(c) & 1) s += color_char(c);
    }
    return s;
}

Flux Flux::parse(const std::string &text) {
    if (text == "0") return Flux();
    uint8_t m = 0;
    for (char c : text) m ^= static_cast<uint8_t>(1 << static_cast<int>(color_from_char(c)));
    return from_mask(m);
}

}  // namespace colorjit
