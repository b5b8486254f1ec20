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

#ifndef BIFORGE_SEMANTICS_HPP_
#define BIFORGE_SEMANTICS_HPP_

#include <memory>
#include <string_view>
#include <variant>

#include "biforge/natural.hpp"
#include "biforge/syntax.hpp"

namespace biforge {

// Total valuation of variables: a chain of overrides over the constant-zero
// base. Overrides share their parent, so extending an environment inside a
// quantifier loop is O(1).
class Environment {
 public:
  Environment() = default;

  Natural lookup(const VarName& v) const;
  Environment override(const VarName& v, Natural n) const;

  // Parses `name=value,name=value` (decimal values, whitespace ignored).
  // An empty string yields the zero environment. Throws ParseError.
  static Environment parse(std::string_view text);

 private:
  struct Binding;
  explicit Environment(std::shared_ptr<const Binding> head);

  std::shared_ptr<const Binding> head_;
};

Environment override(const Environment& e, const VarName& v, Natural n);

struct QuantifierFree {};

// Quantifiers range over 0..bound inclusive. A testing oracle only.
struct Bounded {
  Natural bound;
};

using EvalStrategy = std::variant<QuantifierFree, Bounded>;

// Throws SortError on a formula or abstraction.
Natural eval_nat(const Construction& c, const Environment& e);

// Classical two-valued semantics. Throws QuantifierEncountered under the
// quantifier-free strategy and SortError on a term or abstraction.
bool eval_bool(const Construction& c, const Environment& e,
               const EvalStrategy& s = QuantifierFree{});

}  // namespace biforge

#endif  // BIFORGE_SEMANTICS_HPP_
