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

#include "biforge/recognizers.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "biforge/error.hpp"

namespace biforge {

LangLevel level_of(const Construction& c) {
  LangLevel level = LangLevel::kL1;
  if (c.kind() == Kind::kPlus) level = LangLevel::kL2;
  if (c.kind() == Kind::kTimes) return LangLevel::kL3;
  for (std::size_t i = 0; i < c.arity(); ++i) {
    if (i == 1 && c.child(1).same_node(c.child(0))) break;
    const LangLevel sub = level_of(c.child(i));
    if (!(sub <= level)) level = sub;
    if (level == LangLevel::kL3) break;
  }
  return level;
}

std::optional<LangLevel> parse_level(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  if (s == "1" || s == "l1") return LangLevel::kL1;
  if (s == "2" || s == "l2") return LangLevel::kL2;
  if (s == "3" || s == "l3") return LangLevel::kL3;
  return std::nullopt;
}

bool is_fo(LangLevel level, const Construction& c) {
  // sort_of rejects abstractions below the root.
  try {
    if (sort_of(c) == Sorting::kAbsPred) return false;
  } catch (const SortError&) {
    return false;
  }
  return level_of(c) <= level;
}

bool is_fo_abs(LangLevel level, const Construction& c) {
  return is_abs(c) && is_fo(level, abs_body(c));
}

}  // namespace biforge
