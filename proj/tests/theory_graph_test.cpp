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

#include <algorithm>
#include <set>

#include "biforge/error.hpp"
#include "biforge/presburger.hpp"
#include "biforge/sampling.hpp"
#include "biforge/sexpr.hpp"
#include "biforge/theory_graph.hpp"

namespace biforge {
namespace {

Construction p(const char* text) { return parse_construction(text); }

const BiformTheory& theory(const char* name) {
  const BiformTheory* t = builtin_graph().find_theory(name);
  EXPECT_NE(t, nullptr) << name;
  return *t;
}

const ReportEntry* entry(const Report& r, const std::string& item) {
  for (const ReportEntry& e : r.entries) {
    if (e.item == item) return &e;
  }
  return nullptr;
}

TEST(InductionInstance, A3Predicate) {
  const Construction instance =
      induction_instance(SchemaKind::kInductionL2, p("(lambda x (= (+ x z) x))"));
  EXPECT_TRUE(is_closed(instance));
  EXPECT_TRUE(alpha_equivalent(
      instance, p("(imp (and (= (+ z z) z) (forall x (imp (= (+ x z) x) (= (+ (s x) z) (s x))))) "
                  "(forall x (= (+ x z) x)))")));
  EXPECT_EQ(decide_bt6(instance), TruthValue::kTrue);
}

TEST(InductionInstance, Rejections) {
  EXPECT_THROW(induction_instance(SchemaKind::kInductionL2, p("tt")), NotAnAbstraction);
  EXPECT_THROW(induction_instance(SchemaKind::kInductionL2, p("(lambda x (= (* x z) z))")),
               LanguageError);
  EXPECT_THROW(induction_instance(SchemaKind::kInductionL1, p("(lambda x (= (+ x z) x))")),
               LanguageError);
  EXPECT_NO_THROW(induction_instance(SchemaKind::kInductionL3, p("(lambda x (= (* x z) z))")));
}

// A parameter named x is not captured by the schema's quantifier.
TEST(InductionInstance, AvoidsCapture) {
  const Construction instance =
      induction_instance(SchemaKind::kInductionL2, p("(lambda n (= (+ n x) (+ x n)))"));
  EXPECT_EQ(free_vars(instance), VarSet{VarName("x")});
  for (int x = 0; x < 4; ++x) {
    EXPECT_EQ(decide_bt6(instance, Environment{}.override(VarName("x"), x)), TruthValue::kTrue);
  }
}

TEST(SchemaKindTest, Names) {
  EXPECT_EQ(to_string(SchemaKind::kInductionL3), "induction-l3");
  EXPECT_EQ(parse_schema_kind("induction-l1"), SchemaKind::kInductionL1);
  EXPECT_FALSE(parse_schema_kind("induction").has_value());
  EXPECT_EQ(schema_level(SchemaKind::kInductionL2), LangLevel::kL2);
}

TEST(Registry, TheoriesAndInclusions) {
  ASSERT_EQ(registry().size(), 8u);
  const auto edges = builtin_graph().inclusions();
  const std::set<std::pair<std::string, std::string>> got(edges.begin(), edges.end());
  const std::set<std::pair<std::string, std::string>> want{
      {"BT1", "BT2"}, {"BT2", "BT3"}, {"BT3", "BT4"}, {"BT1", "BT5"}, {"BT2", "BT6"},
      {"BT3", "BT7"}, {"BT5", "BT6"}, {"BT6", "BT7"}};
  EXPECT_EQ(got, want);
  EXPECT_EQ(theory("BT4").axioms.size(), 7u);
  EXPECT_EQ(theory("BT7").axioms.size(), 6u);
  EXPECT_FALSE(theory("BT8").first_order());
  for (const BiformTheory& t : registry()) {
    if (t.first_order()) EXPECT_NO_THROW(validate(t)) << t.name;
  }
}

TEST(Validate, RejectsOpenOrOverLevelAxioms) {
  BiformTheory t{"T", LangLevel::kL1, {}, {{"open", p("(= x z)")}}, {}, {}, {}};
  EXPECT_THROW(validate(t), std::invalid_argument);
  t.axioms = {{"plus", p("(forall x (= (+ x z) x))")}};
  EXPECT_THROW(validate(t), std::invalid_argument);
  t.axioms = {};
  t.schemas = {SchemaKind::kInductionL2};
  EXPECT_THROW(validate(t), std::invalid_argument);
}

TEST(CheckAxioms, Bt2ByDecision) {
  const Report r = check_axioms(theory("BT2"), 50, 16);
  EXPECT_TRUE(r.ok());
  ASSERT_EQ(r.entries.size(), 4u);
  EXPECT_EQ(entry(r, "A3")->method, "decide-bt6");
}

TEST(CheckAxioms, Bt3MultiplicationByModelChecking) {
  const Report r = check_axioms(theory("BT3"), 50, 16);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(entry(r, "A5")->method.rfind("model-check", 0), 0u);
  EXPECT_EQ(entry(r, "A6")->method.rfind("model-check", 0), 0u);
}

TEST(CheckAxioms, AllFirstOrderTheories) {
  for (const BiformTheory& t : registry()) {
    if (t.first_order()) EXPECT_TRUE(check_axioms(t, 50, 16).ok()) << t.name;
  }
  EXPECT_THROW(check_axioms(theory("BT8"), 10, 10), std::invalid_argument);
}

TEST(CheckAxioms, CorruptedAxiomsAreReported) {
  BiformTheory t = theory("BT3");
  t.axioms.push_back({"bad-l1", p("(= z (s z))")});
  t.axioms.push_back({"bad-l2", p("(forall x (exists y (= x (+ y y))))")});
  t.axioms.push_back({"bad-l3", p("(forall x (= (* x x) x))")});
  const Report r = check_axioms(t, 100, 8);
  EXPECT_EQ(r.failures(), 3u);
  EXPECT_FALSE(entry(r, "bad-l1")->ok);
  EXPECT_FALSE(entry(r, "bad-l2")->ok);
  EXPECT_FALSE(entry(r, "bad-l3")->ok);
  EXPECT_NE(r.to_text().find("FAIL bad-l3"), std::string::npos);
  EXPECT_NE(r.to_text().find("9 checked, 3 failed"), std::string::npos);
}

TEST(CheckMorphism, Bt4ToBt7) {
  const Report r = check_morphism(*builtin_graph().find_morphism("BT4-to-BT7"));
  EXPECT_TRUE(r.ok()) << r.to_text();
  const ReportEntry* a26 = entry(r, "Axiom 26 (A7)");
  ASSERT_NE(a26, nullptr);
  EXPECT_TRUE(a26->ok);
  EXPECT_EQ(a26->method, "decide-l2");
}

TEST(CheckMorphism, Bt7ToBt8) {
  const Morphism& m = *builtin_graph().find_morphism("BT7-to-BT8");
  const Report r = check_morphism(m);
  EXPECT_TRUE(r.ok()) << r.to_text();
  EXPECT_EQ(r.entries.size(), m.obligations.size());
}

TEST(CheckMorphism, IdentityDischargesTrivially) {
  for (const BiformTheory& t : registry()) {
    if (!t.first_order()) continue;
    const Morphism id = identity_morphism(t);
    EXPECT_EQ(id.name, t.name + "-id");
    const Report r = check_morphism(id);
    EXPECT_TRUE(r.ok());
    for (const ReportEntry& e : r.entries) EXPECT_EQ(e.method, "target axiom");
  }
}

TEST(Translate, MapsConstants) {
  const Construction c = p("(forall x (= (+ x z) x))");
  EXPECT_EQ(translate(c, {}), c);
  EXPECT_EQ(translate(c, {{"+", "*"}}), p("(forall x (= (* x z) x))"));
  EXPECT_THROW(translate(c, {{"+", "S"}}), std::invalid_argument);
  EXPECT_THROW(translate(c, {{"+", "minus"}}), std::invalid_argument);
}

// Swapping + and * maps A3 to x * 0 = x, which is false in the target.
TEST(CheckMorphism, WrongSymbolMapFails) {
  Morphism m = identity_morphism(theory("BT3"));
  m.name = "swap";
  m.symbol_map = {{"+", "*"}, {"*", "+"}};
  m.obligations = axiom_obligations(theory("BT3"));
  const Report r = check_morphism(m);
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(entry(r, "A3")->ok);
}

TEST(DescriptionFile, ParsesTheoriesAndMorphisms) {
  const TheoryGraph g = parse_theory_graph(R"(
# Successor theory with a derived lemma.
theory S1
  level 1
  extends BT1
  axiom inj (forall x (forall y (imp (= (s x) (s y)) (= x y))))
end

morphism S1-to-BT5
  source S1
  target BT5
end

morphism BT3-to-BT6-bad
  source BT3
  target BT6
  obligation comm decide (forall x (forall y (= (+ x y) (+ y x))))
  obligation square sample 100 8 (forall x (= (* x x) x))
end
)");
  const BiformTheory* s1 = g.find_theory("S1");
  ASSERT_NE(s1, nullptr);
  EXPECT_EQ(s1->axioms.size(), 3u);
  EXPECT_EQ(g.theories.size(), 9u);
  EXPECT_TRUE(check_axioms(*s1, 10, 8).ok());
  EXPECT_TRUE(check_morphism(*g.find_morphism("S1-to-BT5"), g).ok());
  const Report bad = check_morphism(*g.find_morphism("BT3-to-BT6-bad"), g);
  EXPECT_EQ(bad.failures(), 1u);
  EXPECT_FALSE(entry(bad, "square")->ok);
}

TEST(DescriptionFile, Errors) {
  EXPECT_THROW(parse_theory_graph("theory T\n  level 4\nend\n"), ParseError);
  EXPECT_THROW(parse_theory_graph("theory T\n  level 1\n"), ParseError);
  EXPECT_THROW(parse_theory_graph("bogus\n"), ParseError);
  EXPECT_THROW(parse_theory_graph("theory T\n  level 1\n  extends BT9\nend\n"), ParseError);
  EXPECT_THROW(parse_theory_graph("theory T\n  level 1\n  axiom a (= x z)\nend\n"),
               ParseError);
  const std::string text = "theory T\n  level 1\n  axiom a (= z\nend\n";
  try {
    parse_theory_graph(text);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    // The S-expression runs off the end of its line.
    EXPECT_EQ(e.position(), text.find("\nend"));
    EXPECT_EQ(std::string(e.what()).rfind("line 3:", 0), 0u);
  }
}

TEST(DefiniteDescription, StandardOperationsAndWrongCandidate) {
  const Report ok = check_definite_description(16);
  EXPECT_TRUE(ok.ok());
  const Report r = check_definite_description(
      16, {CandidateFunction{"second", "+-pred", [](const Natural&, const Natural& y) { return y; }},
           CandidateFunction{"sum", "+-pred",
                             [](const Natural& x, const Natural& y) { return Natural(x + y); }}});
  EXPECT_FALSE(r.ok());
  for (const ReportEntry& e : r.entries) {
    if (e.item.find("second") != std::string::npos) EXPECT_FALSE(e.ok) << e.item;
    if (e.item.find("sum") != std::string::npos) EXPECT_TRUE(e.ok) << e.item;
  }
}

TEST(Sampling, InductionCorpusIsDecidedTrue) {
  Rng rng(kDefaultSeed);
  for (int i = 0; i < 20; ++i) {
    const Construction pred = random_linear_predicate(rng, VarName("n"));
    const Construction instance = induction_instance(SchemaKind::kInductionL2, pred);
    EXPECT_EQ(decide_bt6(instance), TruthValue::kTrue) << print(pred);
  }
}

}  // namespace
}  // namespace biforge
