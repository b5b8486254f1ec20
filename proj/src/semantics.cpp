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

#include "biforge/semantics.hpp"

#include <cctype>
#include <string>
#include <utility>

#include "biforge/error.hpp"

namespace biforge {

struct Environment::Binding {
  VarName var;
  Natural value;
  std::shared_ptr<const Binding> next;
};

Environment::Environment(std::shared_ptr<const Binding> head)
    : head_(std::move(head)) {}

Natural Environment::lookup(const VarName& v) const {
  for (const Binding* b = head_.get(); b != nullptr; b = b->next.get()) {
    if (b->var == v) return b->value;
  }
  return 0;
}

Environment Environment::override(const VarName& v, Natural n) const {
  if (n < 0) throw std::invalid_argument("environment values are naturals");
  return Environment(std::make_shared<const Binding>(
      Binding{v, std::move(n), head_}));
}

Environment override(const Environment& e, const VarName& v, Natural n) {
  return e.override(v, std::move(n));
}

Environment Environment::parse(std::string_view text) {
  Environment env;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) return env;
  while (true) {
    skip_ws();
    const std::size_t name_start = pos;
    while (pos < text.size() && text[pos] != '=' && text[pos] != ',' &&
           !std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos == name_start) throw ParseError("expected variable name", pos);
    const std::string name(text.substr(name_start, pos - name_start));
    skip_ws();
    if (pos >= text.size() || text[pos] != '=') throw ParseError("expected '='", pos);
    ++pos;
    skip_ws();
    const std::size_t digits_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits_start) throw ParseError("expected decimal value", pos);
    env = env.override(VarName(name),
                       Natural(std::string(text.substr(digits_start, pos - digits_start))));
    skip_ws();
    if (pos == text.size()) return env;
    if (text[pos] != ',') throw ParseError("expected ','", pos);
    ++pos;
  }
}

namespace {

Natural eval_term(const Construction& c, const Environment& e) {
  switch (c.kind()) {
    case Kind::kZero:
      return 0;
    case Kind::kVar:
      return e.lookup(c.var_name());
    case Kind::kSucc: {
      // Succ chains are common; walk them iteratively.
      std::size_t depth = 0;
      const Construction* t = &c;
      while (t->kind() == Kind::kSucc) {
        ++depth;
        t = &t->arg();
      }
      return eval_term(*t, e) + depth;
    }
    case Kind::kPlus:
    case Kind::kTimes: {
      const Natural lhs = eval_term(c.lhs(), e);
      const Natural rhs = c.rhs().same_node(c.lhs()) ? lhs : eval_term(c.rhs(), e);
      return c.kind() == Kind::kPlus ? Natural(lhs + rhs) : Natural(lhs * rhs);
    }
    default:
      throw SortError("expected a term, found a formula or abstraction");
  }
}

bool eval_formula(const Construction& c, const Environment& e,
                  const EvalStrategy& s);

bool eval_quantifier(const Construction& c, const Environment& e,
                     const EvalStrategy& s) {
  const auto* bounded = std::get_if<Bounded>(&s);
  if (bounded == nullptr) {
    throw QuantifierEncountered("quantifier under quantifier-free evaluation");
  }
  const bool universal = c.kind() == Kind::kForall;
  for (Natural n = 0; n <= bounded->bound; ++n) {
    const bool holds = eval_formula(c.body(), e.override(c.var_name(), n), s);
    if (universal && !holds) return false;
    if (!universal && holds) return true;
  }
  return universal;
}

bool eval_formula(const Construction& c, const Environment& e,
                  const EvalStrategy& s) {
  switch (c.kind()) {
    case Kind::kTrue:
      return true;
    case Kind::kFalse:
      return false;
    case Kind::kAnd:
      return eval_formula(c.lhs(), e, s) && eval_formula(c.rhs(), e, s);
    case Kind::kOr:
      return eval_formula(c.lhs(), e, s) || eval_formula(c.rhs(), e, s);
    case Kind::kImplies:
      return !eval_formula(c.lhs(), e, s) || eval_formula(c.rhs(), e, s);
    case Kind::kNot:
      return !eval_formula(c.arg(), e, s);
    case Kind::kEq:
      return eval_term(c.lhs(), e) == eval_term(c.rhs(), e);
    case Kind::kForall:
    case Kind::kExists:
      return eval_quantifier(c, e, s);
    default:
      throw SortError("expected a formula, found a term or abstraction");
  }
}

bool has_quantifier(const Construction& c) {
  if (sort_of(c) == Sorting::kNat) return false;
  if (c.kind() == Kind::kForall || c.kind() == Kind::kExists) return true;
  for (std::size_t i = 0; i < c.arity(); ++i) {
    if (has_quantifier(c.child(i))) return true;
  }
  return false;
}

}  // namespace

Natural eval_nat(const Construction& c, const Environment& e) {
  if (sort_of(c) != Sorting::kNat) {
    throw SortError("expected a term, found a formula or abstraction");
  }
  return eval_term(c, e);
}

bool eval_bool(const Construction& c, const Environment& e,
               const EvalStrategy& s) {
  if (sort_of(c) != Sorting::kBool) {
    throw SortError("expected a formula, found a term or abstraction");
  }
  if (std::holds_alternative<QuantifierFree>(s) && has_quantifier(c)) {
    throw QuantifierEncountered("quantifier under quantifier-free evaluation");
  }
  return eval_formula(c, e, s);
}

}  // namespace biforge
