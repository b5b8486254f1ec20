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

#include <cstdint>

#include "biforge/binum.hpp"
#include "biforge/error.hpp"
#include "biforge/sampling.hpp"
#include "biforge/semantics.hpp"
#include "biforge/sexpr.hpp"
#include "biforge/theory_graph.hpp"

namespace biforge {
namespace {

constexpr BinDigit d0 = BinDigit::kD0;
constexpr BinDigit d1 = BinDigit::kD1;

// Positional-weight oracle, independent of to_nat.
std::uint64_t weight(const BinNum& b) {
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < b.length(); ++i) {
    if (b.digits()[i] == d1) value |= std::uint64_t{1} << i;
  }
  return value;
}

// Every digit vector of the given length, high zeros included.
BinNum nth_vector(std::size_t length, std::uint64_t bits) {
  std::vector<BinDigit> digits(length);
  for (std::size_t i = 0; i < length; ++i) digits[i] = (bits >> i) & 1 ? d1 : d0;
  return BinNum(digits);
}

TEST(BinNum, RejectsEmpty) { EXPECT_THROW(BinNum({}), std::invalid_argument); }

TEST(ToNat, Examples) {
  EXPECT_EQ(to_nat(BinNum({d0})), 0);
  EXPECT_EQ(to_nat(BinNum({d1})), 1);
  EXPECT_EQ(to_nat(BinNum({d0, d1})), 2);
}

TEST(OfNat, Examples) {
  EXPECT_EQ(of_nat(0), BinNum({d0}));
  EXPECT_EQ(of_nat(1), BinNum({d1}));
  EXPECT_EQ(of_nat(6), BinNum({d0, d1, d1}));
  EXPECT_THROW(of_nat(-1), std::invalid_argument);
}

TEST(SuccB, Examples) {
  EXPECT_EQ(succ_b(BinNum({d0})), BinNum({d1}));
  EXPECT_EQ(succ_b(BinNum({d1})), BinNum({d0, d1}));
  EXPECT_EQ(succ_b(BinNum({d1, d1})), BinNum({d0, d0, d1}));
}

TEST(Shift, Examples) {
  EXPECT_EQ(shift(BinNum({d1})), BinNum({d0, d1}));
  EXPECT_EQ(shift(BinNum({d0})), BinNum({d0, d0}));
  EXPECT_EQ(to_nat(shift(BinNum({d1, d1}))), 6);
}

TEST(Bplus, Examples) {
  EXPECT_EQ(bplus(BinNum({d1}), BinNum({d1})), BinNum({d0, d1}));
  const BinNum b({d1, d0, d1});
  EXPECT_EQ(to_nat(bplus(b, BinNum({d0}))), to_nat(b));
  EXPECT_EQ(to_nat(bplus(of_nat(13), of_nat(29))), 42);
}

TEST(Btimes, Examples) {
  const BinNum a = of_nat(11);
  EXPECT_EQ(btimes(a, BinNum({d0})), BinNum({d0}));
  EXPECT_EQ(btimes(a, BinNum({d1})), a);
  EXPECT_EQ(to_nat(btimes(of_nat(6), of_nat(7))), 42);
}

TEST(Normalize, Examples) {
  EXPECT_EQ(normalize(BinNum({d1, d0})), BinNum({d1}));
  EXPECT_EQ(normalize(BinNum({d0, d0})), BinNum({d0}));
  EXPECT_EQ(normalize(BinNum({d0, d1})), BinNum({d0, d1}));
}

TEST(Literal, PrintsAndParses) {
  EXPECT_EQ(to_literal(BinNum({d0, d1, d1})), "#b110");
  EXPECT_EQ(to_literal(BinNum({d1, d0})), "#b01");
  EXPECT_EQ(parse_literal("#b110"), BinNum({d0, d1, d1}));
  EXPECT_THROW(parse_literal("#b"), ParseError);
  EXPECT_THROW(parse_literal("#b102"), ParseError);
  EXPECT_THROW(parse_literal("110"), ParseError);
}

TEST(IsBnum, Examples) {
  const Construction zero = Construction::zero();
  EXPECT_TRUE(is_bnum(bnat(zero, zero)));
  EXPECT_FALSE(is_bnum(Construction::var("x")));
  EXPECT_TRUE(is_bnum(to_construction(of_nat(6))));
  // Wrong low digit, or the doubled operands differ.
  EXPECT_FALSE(is_bnum(bnat(zero, quote_unary(2))));
  EXPECT_FALSE(is_bnum(Construction::plus(
      Construction::plus(bnat(zero, zero), bnat(zero, quote_unary(1))), zero)));
  EXPECT_FALSE(is_bnum(zero));
}

TEST(Construction, ConversionRoundTrip) {
  const Construction zero = Construction::zero();
  EXPECT_EQ(to_construction(BinNum({d0, d1})), bnat(bnat(zero, quote_unary(1)), zero));
  EXPECT_EQ(from_construction(to_construction(of_nat(9))), of_nat(9));
  EXPECT_EQ(from_construction(to_construction(BinNum({d1, d0, d0}))), BinNum({d1, d0, d0}));
  EXPECT_THROW(from_construction(Construction::tt()), NotBnum);
}

TEST(Coherence, ExhaustiveToTenDigits) {
  for (std::size_t len = 1; len <= 10; ++len) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      const BinNum b = nth_vector(len, bits);
      ASSERT_EQ(to_nat(b), weight(b));
      ASSERT_EQ(to_nat(succ_b(b)), weight(b) + 1);
      ASSERT_EQ(to_nat(shift(b)), 2 * weight(b));
      ASSERT_EQ(eval_nat(to_construction(b), {}), weight(b));
      ASSERT_EQ(of_nat(weight(b)), normalize(b));
    }
  }
}

TEST(Arithmetic, ExhaustiveToSixDigits) {
  for (std::size_t la = 1; la <= 6; ++la) {
    for (std::size_t lb = 1; lb <= 6; ++lb) {
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << la); ++x) {
        for (std::uint64_t y = 0; y < (std::uint64_t{1} << lb); ++y) {
          const BinNum a = nth_vector(la, x);
          const BinNum b = nth_vector(lb, y);
          ASSERT_EQ(weight(bplus(a, b)), x + y);
          ASSERT_EQ(weight(btimes(a, b)), x * y);
        }
      }
    }
  }
}

TEST(Arithmetic, LargeOperands) {
  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const BinNum a = random_binnum(rng, uniform(rng, 1, 200));
    const BinNum b = random_binnum(rng, uniform(rng, 1, 200));
    EXPECT_EQ(to_nat(bplus(a, b)), to_nat(a) + to_nat(b));
    EXPECT_EQ(to_nat(btimes(a, b)), to_nat(a) * to_nat(b));
  }
}

TEST(Rewrite, AxiomExamples) {
  const Construction one = to_construction(BinNum({d1}));
  const Construction two = to_construction(BinNum({d0, d1}));
  const auto r = bplus_rewrite(one, one);
  ASSERT_TRUE(std::holds_alternative<Construction>(r));
  EXPECT_EQ(std::get<Construction>(r), two);
  const auto s = bplus_rewrite(two, to_construction(BinNum({d0})));
  ASSERT_TRUE(std::holds_alternative<Construction>(s));
  EXPECT_EQ(std::get<Construction>(s), two);
  EXPECT_THROW(bplus_rewrite(Construction::var("x"), one), NotBnum);
}

// The published eleventh rule duplicates the tenth's left-hand side, so
// (1)_2 + (11)_2 has no applicable rule; the repaired reading covers it.
TEST(Rewrite, PublishedRuleSetIsIncomplete) {
  const Construction one = to_construction(BinNum({d1}));
  const Construction three = to_construction(BinNum({d1, d1}));
  const auto published = bplus_rewrite(one, three, RuleSet::kPublished);
  ASSERT_TRUE(std::holds_alternative<Stuck>(published));
  EXPECT_EQ(std::get<Stuck>(published).term, "(bplus #b1 #b11)");
  const auto repaired = bplus_rewrite(one, three, RuleSet::kRepaired);
  ASSERT_TRUE(std::holds_alternative<Construction>(repaired));
  EXPECT_EQ(to_nat(from_construction(std::get<Construction>(repaired))), 4);
}

TEST(Rewrite, RepairedRulesAgreeWithDirectAlgorithm) {
  for (std::size_t la = 1; la <= 5; ++la) {
    for (std::size_t lb = 1; lb <= 5; ++lb) {
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << la); ++x) {
        for (std::uint64_t y = 0; y < (std::uint64_t{1} << lb); ++y) {
          const auto r = bplus_rewrite(to_construction(nth_vector(la, x)),
                                       to_construction(nth_vector(lb, y)), RuleSet::kRepaired);
          ASSERT_TRUE(std::holds_alternative<Construction>(r)) << std::get<Stuck>(r).term;
          ASSERT_EQ(weight(from_construction(std::get<Construction>(r))), x + y);
        }
      }
    }
  }
}

// The transformer laws hold of the direct algorithms, except the published
// Axiom 11, which asserts 1 + 2u = 2(u + 1).
TEST(TransformerLaws, HoldOnSmallNumerals) {
  std::vector<int> axioms;
  for (int a = 5; a <= 15; ++a) axioms.push_back(a);
  for (int a = 18; a <= 25; ++a) axioms.push_back(a);
  for (int axiom : axioms) {
    for (std::uint64_t u = 0; u < 32; ++u) {
      for (std::uint64_t v = 0; v < 32; ++v) {
        const LawInstance law = transformer_law_instance(axiom, of_nat(u), of_nat(v));
        ASSERT_EQ(to_nat(law.lhs), to_nat(law.rhs)) << "axiom " << axiom;
      }
    }
  }
  const LawInstance published =
      transformer_law_instance(11, of_nat(3), of_nat(0), RuleSet::kPublished);
  EXPECT_EQ(to_nat(published.lhs), 7);
  EXPECT_EQ(to_nat(published.rhs), 8);
  EXPECT_THROW(transformer_law_instance(16, of_nat(1), of_nat(1)), std::invalid_argument);
}

}  // namespace
}  // namespace biforge
