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

// Seeded generators for property tests, oracle checks and randomized model
// checking. Every generator is a pure function of the engine state, so a
// fixed seed reproduces a run.

#ifndef BIFORGE_SAMPLING_HPP_
#define BIFORGE_SAMPLING_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "biforge/binum.hpp"
#include "biforge/natural.hpp"
#include "biforge/recognizers.hpp"
#include "biforge/semantics.hpp"
#include "biforge/syntax.hpp"

namespace biforge {

using Rng = std::mt19937_64;

struct FormulaShape {
  LangLevel level = LangLevel::kL2;
  std::size_t max_quantifiers = 3;
  std::size_t max_succ = 5;  // longest Succ chain above a term leaf
  std::size_t max_depth = 3;  // connective nesting
  std::size_t term_depth = 2;  // Plus/Times nesting
};

// Uniform in [lo, hi].
std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi);

// Digit vector of the given length; high zero digits included.
BinNum random_binnum(Rng& rng, std::size_t length);

Construction random_term(Rng& rng, const FormulaShape& shape,
                         const std::vector<VarName>& vars);

// Formula over `vars`; may bind further variables, subject to
// shape.max_quantifiers counted over the whole formula.
Construction random_formula(Rng& rng, const FormulaShape& shape,
                            const std::vector<VarName>& vars);

// Closed formula: free variables of a random formula are bound by an outer
// prefix of random quantifiers. At most shape.max_quantifiers quantifiers.
Construction random_sentence(Rng& rng, const FormulaShape& shape);

// Abs(v, body) with body free only in v.
Construction random_predicate(Rng& rng, const FormulaShape& shape,
                              const VarName& v);

// Equality between two degree-one terms in v (a*v + b with a, b <= 3).
Construction random_linear_predicate(Rng& rng, const VarName& v);

// Any well-sorted construction: a term, a formula or an abstraction.
Construction random_construction(Rng& rng, const FormulaShape& shape);

// Values drawn from 0..bound for each listed variable.
Environment random_environment(Rng& rng, const std::vector<VarName>& vars,
                               const Natural& bound);

std::size_t quantifier_count(const Construction& c);

}  // namespace biforge

#endif  // BIFORGE_SAMPLING_HPP_
