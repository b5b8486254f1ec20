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

#include "biforge/sampling.hpp"

#include <algorithm>

namespace biforge {

namespace {

const std::vector<VarName>& bound_pool() {
  static const std::vector<VarName> pool{VarName("x"), VarName("y"), VarName("w"),
                                         VarName("u"), VarName("v")};
  return pool;
}

bool chance(Rng& rng, std::uint64_t numerator, std::uint64_t denominator) {
  return uniform(rng, 1, denominator) <= numerator;
}

Construction succ_chain(Construction t, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) t = Construction::succ(std::move(t));
  return t;
}

Construction term_rec(Rng& rng, const FormulaShape& shape,
                      const std::vector<VarName>& vars, std::size_t depth) {
  Construction t = Construction::zero();
  const bool composite = depth > 0 && shape.level != LangLevel::kL1 && chance(rng, 1, 3);
  if (composite) {
    Construction lhs = term_rec(rng, shape, vars, depth - 1);
    Construction rhs = term_rec(rng, shape, vars, depth - 1);
    const bool product = shape.level == LangLevel::kL3 && chance(rng, 1, 2);
    t = product ? Construction::times(std::move(lhs), std::move(rhs))
                : Construction::plus(std::move(lhs), std::move(rhs));
  } else if (!vars.empty() && chance(rng, 2, 3)) {
    t = Construction::var(vars[uniform(rng, 0, vars.size() - 1)]);
  }
  const std::size_t n = chance(rng, 1, 2) ? uniform(rng, 0, shape.max_succ) : 0;
  return succ_chain(std::move(t), n);
}

class FormulaGenerator {
 public:
  FormulaGenerator(Rng& rng, const FormulaShape& shape, std::size_t budget)
      : rng_(rng), shape_(shape), budget_(budget) {}

  Construction formula(std::size_t depth, const std::vector<VarName>& scope) {
    // weights: atom 3, not 1, binary connective 3, quantifier 2
    const std::uint64_t quantifier_weight = budget_ > 0 ? 2 : 0;
    const std::uint64_t total = depth == 0 ? 3 : 7 + quantifier_weight;
    const std::uint64_t r = uniform(rng_, 1, total);
    if (r <= 3) return atom(scope);
    if (r == 4) return Construction::neg(formula(depth - 1, scope));
    if (r <= 7) {
      Construction lhs = formula(depth - 1, scope);
      Construction rhs = formula(depth - 1, scope);
      switch (uniform(rng_, 0, 2)) {
        case 0:
          return Construction::conj(std::move(lhs), std::move(rhs));
        case 1:
          return Construction::disj(std::move(lhs), std::move(rhs));
        default:
          return Construction::implies(std::move(lhs), std::move(rhs));
      }
    }
    --budget_;
    const auto& pool = bound_pool();
    VarName v = pool[uniform(rng_, 0, pool.size() - 1)];
    std::vector<VarName> inner = scope;
    if (std::find(inner.begin(), inner.end(), v) == inner.end()) inner.push_back(v);
    Construction body = formula(depth - 1, inner);
    return chance(rng_, 1, 2) ? Construction::forall(std::move(v), std::move(body))
                              : Construction::exists(std::move(v), std::move(body));
  }

 private:
  Construction atom(const std::vector<VarName>& scope) {
    if (chance(rng_, 1, 12)) return chance(rng_, 1, 2) ? Construction::tt() : Construction::ff();
    return Construction::eq(term_rec(rng_, shape_, scope, shape_.term_depth),
                            term_rec(rng_, shape_, scope, shape_.term_depth));
  }

  Rng& rng_;
  const FormulaShape& shape_;
  std::size_t budget_;
};

}  // namespace

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

BinNum random_binnum(Rng& rng, std::size_t length) {
  std::vector<BinDigit> digits(length);
  for (BinDigit& d : digits) d = chance(rng, 1, 2) ? BinDigit::kD1 : BinDigit::kD0;
  return BinNum(std::move(digits));
}

Construction random_term(Rng& rng, const FormulaShape& shape,
                         const std::vector<VarName>& vars) {
  return term_rec(rng, shape, vars, shape.term_depth);
}

Construction random_formula(Rng& rng, const FormulaShape& shape,
                            const std::vector<VarName>& vars) {
  return FormulaGenerator(rng, shape, shape.max_quantifiers).formula(shape.max_depth, vars);
}

Construction random_sentence(Rng& rng, const FormulaShape& shape) {
  const std::size_t outer =
      shape.max_quantifiers == 0 ? 0 : uniform(rng, 1, std::min<std::size_t>(3, shape.max_quantifiers));
  std::vector<VarName> vars(bound_pool().begin(), bound_pool().begin() + outer);
  Construction body =
      FormulaGenerator(rng, shape, shape.max_quantifiers - outer).formula(shape.max_depth, vars);
  const VarSet free = free_vars(body);
  std::vector<VarName> prefix(free.begin(), free.end());
  std::shuffle(prefix.begin(), prefix.end(), rng);
  for (const VarName& v : prefix) {
    body = chance(rng, 1, 2) ? Construction::forall(v, std::move(body))
                             : Construction::exists(v, std::move(body));
  }
  return body;
}

Construction random_predicate(Rng& rng, const FormulaShape& shape, const VarName& v) {
  return Construction::abs(v, random_formula(rng, shape, {v}));
}

Construction random_linear_predicate(Rng& rng, const VarName& v) {
  auto side = [&] {
    const std::size_t a = uniform(rng, 0, 3);
    Construction t = a == 0 ? Construction::zero() : Construction::var(v);
    for (std::size_t i = 1; i < a; ++i) t = Construction::plus(std::move(t), Construction::var(v));
    return succ_chain(std::move(t), uniform(rng, 0, 3));
  };
  Construction lhs = side();
  Construction rhs = side();
  return Construction::abs(v, Construction::eq(std::move(lhs), std::move(rhs)));
}

Construction random_construction(Rng& rng, const FormulaShape& shape) {
  const std::vector<VarName> vars{VarName("x"), VarName("y")};
  switch (uniform(rng, 0, 2)) {
    case 0:
      return random_term(rng, shape, vars);
    case 1:
      return random_formula(rng, shape, vars);
    default:
      return Construction::abs(vars.front(), random_formula(rng, shape, vars));
  }
}

Environment random_environment(Rng& rng, const std::vector<VarName>& vars,
                               const Natural& bound) {
  Environment e;
  const auto hi = static_cast<std::uint64_t>(bound);
  for (const VarName& v : vars) e = e.override(v, Natural(uniform(rng, 0, hi)));
  return e;
}

std::size_t quantifier_count(const Construction& c) {
  if (sort_of(c) == Sorting::kNat) return 0;
  std::size_t n = c.kind() == Kind::kForall || c.kind() == Kind::kExists ? 1 : 0;
  for (std::size_t i = 0; i < c.arity(); ++i) n += quantifier_count(c.child(i));
  return n;
}

}  // namespace biforge
