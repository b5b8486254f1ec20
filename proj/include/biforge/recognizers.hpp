// Copyright 2026 The Biforge Authors
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

#ifndef BIFORGE_RECOGNIZERS_HPP_
#define BIFORGE_RECOGNIZERS_HPP_

#include <cstdint>
#include <optional>
#include <string_view>

#include "biforge/syntax.hpp"

namespace biforge {

// First-order languages over the naturals, ordered by inclusion:
// L1 has 0 and S, L2 adds +, L3 adds *.
enum class LangLevel : std::uint8_t { kL1 = 1, kL2 = 2, kL3 = 3 };

constexpr bool operator<=(LangLevel a, LangLevel b) {
  return static_cast<std::uint8_t>(a) <= static_cast<std::uint8_t>(b);
}

// Smallest level whose constants cover every term constructor in c.
LangLevel level_of(const Construction& c);

// Accepts "1"/"2"/"3" and "L1".."L3" (case-insensitive).
std::optional<LangLevel> parse_level(std::string_view text);

// Well-sorted first-order term or formula (no abstraction) whose nonlogical
// constants belong to `level`.
bool is_fo(LangLevel level, const Construction& c);

// An abstraction whose body passes is_fo(level, .); false otherwise.
bool is_fo_abs(LangLevel level, const Construction& c);

}  // namespace biforge

#endif  // BIFORGE_RECOGNIZERS_HPP_
