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

// Text form of constructions.
//
//   term     z | (s T) | (+ T T) | (* T T) | #b<bits> | identifier
//   formula  tt | ff | (and F F) | (or F F) | (not F) | (imp F F)
//            | (= T T) | (forall v F) | (exists v F)
//   abs      (lambda v F)
//
// `#b` literals are most-significant bit first and expand to nested bnat
// terms. The printer folds every numeral subtree back into a literal, so
// print(parse(s)) is stable and parse(print(c)) == c.

#ifndef BIFORGE_SEXPR_HPP_
#define BIFORGE_SEXPR_HPP_

#include <string>
#include <string_view>

#include "biforge/syntax.hpp"

namespace biforge {

// Throws ParseError (with byte offset) on malformed text and SortError on
// well-formed but ill-sorted input.
Construction parse_construction(std::string_view text);

struct PrintOptions {
  bool fold_numerals = true;
};

// Throws std::invalid_argument on a variable whose name is not an
// identifier, such as the reserved word `z`.
std::string print(const Construction& c, const PrintOptions& options = {});

bool is_identifier(std::string_view text);

}  // namespace biforge

#endif  // BIFORGE_SEXPR_HPP_
