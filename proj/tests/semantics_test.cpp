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

#include <gtest/gtest.h>

#include "biforge/binum.hpp"
#include "biforge/error.hpp"
#include "biforge/sampling.hpp"
#include "biforge/semantics.hpp"
#include "biforge/sexpr.hpp"

namespace biforge {
namespace {

using C = Construction;

const VarName kX("x");
const VarName kY("y");

TEST(EvalNat, Examples) {
  EXPECT_EQ(eval_nat(quote_unary(2), Environment{}.override(kX, 9)), 2);
  const Environment e = Environment{}.override(kX, 3).override(kY, 4);
  const C lhs = C::plus(C::var(kX), C::succ(C::var(kY)));
  EXPECT_EQ(eval_nat(lhs, e), 8);
  EXPECT_EQ(eval_nat(C::succ(C::plus(C::var(kX), C::var(kY))), e), 8);
  EXPECT_EQ(eval_nat(to_construction(BinNum({BinDigit::kD1, BinDigit::kD0, BinDigit::kD1})), {}),
            1 + 4);
}

TEST(EvalNat, RejectsFormulas) {
  EXPECT_THROW(eval_nat(C::tt(), {}), SortError);
}

TEST(EvalNat, ArbitraryPrecision) {
  const C big = parse_construction("(* #b" + std::string(80, '1') + " #b" + std::string(80, '1') + ")");
  const Natural m = (Natural(1) << 80) - 1;
  EXPECT_EQ(eval_nat(big, {}), m * m);
}

TEST(EvalBool, Examples) {
  EXPECT_FALSE(eval_bool(C::eq(C::zero(), quote_unary(1)), {}, QuantifierFree{}));
  const C a3 = C::forall(kX, C::eq(C::plus(C::var(kX), C::zero()), C::var(kX)));
  EXPECT_TRUE(eval_bool(a3, {}, Bounded{5}));
  const C not_a1 = C::exists(kY, C::eq(C::succ(C::var(kY)), C::zero()));
  EXPECT_FALSE(eval_bool(not_a1, {}, Bounded{100}));
}

TEST(EvalBool, QuantifierFreeStrategyRejectsQuantifiers) {
  const C a3 = C::forall(kX, C::eq(C::var(kX), C::var(kX)));
  EXPECT_THROW(eval_bool(a3, {}), QuantifierEncountered);
  EXPECT_THROW(eval_bool(C::zero(), {}), SortError);
}

TEST(EvalBool, ConnectivesFollowTruthTables) {
  for (bool p : {false, true}) {
    for (bool q : {false, true}) {
      const C a = p ? C::tt() : C::ff();
      const C b = q ? C::tt() : C::ff();
      EXPECT_EQ(eval_bool(C::conj(a, b), {}), p && q);
      EXPECT_EQ(eval_bool(C::disj(a, b), {}), p || q);
      EXPECT_EQ(eval_bool(C::implies(a, b), {}), !p || q);
      EXPECT_EQ(eval_bool(C::neg(a), {}), !p);
    }
  }
}

TEST(EvalBool, BoundedQuantifierIsInclusive) {
  const C c = C::exists(kX, C::eq(C::var(kX), quote_unary(7)));
  EXPECT_FALSE(eval_bool(c, {}, Bounded{6}));
  EXPECT_TRUE(eval_bool(c, {}, Bounded{7}));
}

TEST(Environment, OverrideSemantics) {
  const Environment e;
  EXPECT_EQ(override(e, kX, 3).lookup(kX), 3);
  EXPECT_EQ(override(override(e, kX, 3), kX, 5).lookup(kX), 5);
  EXPECT_EQ(override(e, kX, 3).lookup(kY), 0);
  EXPECT_EQ(e.lookup(kX), 0);
  EXPECT_THROW(e.override(kX, -1), std::invalid_argument);
}

TEST(Environment, ParsesBindings) {
  const Environment e = Environment::parse(" x = 3, y=12 ");
  EXPECT_EQ(e.lookup(kX), 3);
  EXPECT_EQ(e.lookup(kY), 12);
  EXPECT_EQ(Environment::parse("").lookup(kX), 0);
  EXPECT_THROW(Environment::parse("x"), ParseError);
  EXPECT_THROW(Environment::parse("x=a"), ParseError);
  EXPECT_THROW(Environment::parse("x=1;y=2"), ParseError);
}

// eval(c[v := t], e) == eval(c, e[v := eval(t, e)]) for quantifier-free c.
TEST(SubstitutionLemma, RandomQuantifierFreeFormulas) {
  Rng rng(21);
  const std::vector<VarName> vars{VarName("x"), VarName("y"), VarName("w")};
  FormulaShape shape{LangLevel::kL3, 0, 3, 3, 2};
  for (int i = 0; i < 500; ++i) {
    const C c = random_formula(rng, shape, vars);
    const VarName v = vars[uniform(rng, 0, 2)];
    const C t = random_term(rng, shape, vars);
    const Environment e = random_environment(rng, vars, 7);
    EXPECT_EQ(eval_bool(substitute(c, v, t), e), eval_bool(c, e.override(v, eval_nat(t, e))))
        << print(c);
  }
}

}  // namespace
}  // namespace biforge
