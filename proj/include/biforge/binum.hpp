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

// Binary numerals and the arithmetic transformers over them.
//
// A numeral exists in two forms: the explicit digit vector BinNum, on
// which the direct algorithms run, and the quoted bnat-nesting inside a
// Construction, (x + x) + y with y in {0, S 0}, on which the conditional
// rewrite engine runs. to_construction/from_construction convert between
// them without normalizing.

#ifndef BIFORGE_BINUM_HPP_
#define BIFORGE_BINUM_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "biforge/natural.hpp"
#include "biforge/syntax.hpp"

namespace biforge {

enum class BinDigit : std::uint8_t { kD0, kD1 };

// Non-empty digit sequence, least-significant digit first. High zero digits
// are legal; use normalize() for the canonical form.
class BinNum {
 public:
  // Throws std::invalid_argument on an empty sequence.
  explicit BinNum(std::vector<BinDigit> lsb_first);

  const std::vector<BinDigit>& digits() const { return digits_; }
  std::size_t length() const { return digits_.size(); }

  // Digit-wise equality; value equality is to_nat(a) == to_nat(b).
  friend bool operator==(const BinNum&, const BinNum&) = default;

 private:
  std::vector<BinDigit> digits_;
};

Natural to_nat(const BinNum& b);
// Canonical numeral: no high zero digit unless the value is 0.
BinNum of_nat(const Natural& n);
BinNum normalize(const BinNum& b);

BinNum succ_b(const BinNum& b);
// Prepends a zero digit at the least-significant end.
BinNum shift(const BinNum& b);
BinNum bplus(const BinNum& a, const BinNum& b);
BinNum btimes(const BinNum& a, const BinNum& b);

// `#b<bits>`, most-significant bit first. The printer writes the digits as
// they are; callers wanting the canonical literal normalize first.
std::string to_literal(const BinNum& b);
// Throws ParseError.
BinNum parse_literal(std::string_view text);

bool is_bnum(const Construction& c);
Construction to_construction(const BinNum& b);
// Throws NotBnum unless is_bnum(c).
BinNum from_construction(const Construction& c);

// Axiom sets driving the rewrite engine. kPublished takes the eleven BPLUS
// axioms exactly as printed; its eleventh rule repeats the left-hand side
// of the tenth, so (1)_2 BPLUS bnat(u, 1) has no applicable rule.
// kRepaired reads that left-hand side as bnat(u, 1).
enum class RuleSet : std::uint8_t { kPublished, kRepaired };

// Normal form that is not a numeral. `term` is rendered with numerals as
// #b literals and pending additions as (bplus A B).
struct Stuck {
  std::string term;
  std::size_t steps;
};

using RewriteResult = std::variant<Construction, Stuck>;

// Rewrites a BPLUS b with the axioms as left-to-right conditional rules:
// rule order follows axiom numbering, redexes are chosen leftmost-innermost.
// Throws NotBnum unless both arguments are numerals.
RewriteResult bplus_rewrite(const Construction& a, const Construction& b,
                            RuleSet rules = RuleSet::kPublished);

}  // namespace biforge

#endif  // BIFORGE_BINUM_HPP_
