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

#ifndef COLORJIT_COLEX_FLUX_H
#define COLORJIT_COLEX_FLUX_H

#include <array>
#include <bit>
#include <cstdint>
#include <string>

namespace colorjit {

enum class Color : uint8_t { R = 0, G = 1, B = 2, Y = 3 };

constexpr std::array<Color, 4> ALL_COLORS = {Color::R, Color::G, Color::B, Color::Y};

inline char color_char(Color c) { return "rgby"[static_cast<int>(c)]; }
Color color_from_char(char c);

/// Element of the flux group: an even-weight subset of the four colours, so the
/// group is Z2^3. Stored as a 4-bit mask over (r, g, b, y).
class Flux {
   public:
    constexpr Flux() = default;
    static Flux from_mask(uint8_t mask);
    /// Builds from three bits over (r, g, b); the y bit is fixed by parity.
    static constexpr Flux from_bits3(uint8_t bits) {
        Flux f;
        f.mask_ = static_cast<uint8_t>((bits & 7) | ((std::popcount(static_cast<unsigned>(bits & 7)) & 1) << 3));
        return f;
    }
    /// Label carried by a dual edge between colours a and b: the other two colours.
    static constexpr Flux edge_label(Color a, Color b) {
        Flux f;
        f.mask_ = static_cast<uint8_t>(0xF ^ (1 << static_cast<int>(a)) ^ (1 << static_cast<int>(b)));
        return f;
    }

    constexpr uint8_t mask() const { return mask_; }
    constexpr uint8_t bits3() const { return mask_ & 7; }
    constexpr bool is_zero() const { return mask_ == 0; }
    /// Membership in the subgroup of elements that avoid colour c.
    constexpr bool in_subgroup(Color c) const { return !((mask_ >> static_cast<int>(c)) & 1); }

    constexpr Flux &operator+=(Flux o) {
        mask_ ^= o.mask_;
        return *this;
    }
    friend constexpr Flux operator+(Flux a, Flux b) { return a += b; }
    constexpr bool operator==(const Flux &o) const = default;

    /// "0" or the colour letters of the mask, for example "gb".
    std::string str() const;
    static Flux parse(const std::string &text);

   private:
    uint8_t mask_ = 0;
};

}  // namespace colorjit

#endif
