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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails.
//
//   acceptance BIFORGE_BINARY [STUCK_ARCHIVE]

#include <sys/wait.h>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "biforge/binum.hpp"
#include "biforge/error.hpp"
#include "biforge/presburger.hpp"
#include "biforge/sampling.hpp"
#include "biforge/semantics.hpp"
#include "biforge/sexpr.hpp"
#include "biforge/theory_graph.hpp"

namespace biforge {
namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

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

// Every digit vector of length 1..max_length, high zeros included.
std::vector<BinNum> all_numerals(std::size_t max_length) {
  std::vector<BinNum> out;
  for (std::size_t len = 1; len <= max_length; ++len) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      std::vector<BinDigit> digits(len);
      for (std::size_t i = 0; i < len; ++i) digits[i] = (bits >> i) & 1 ? d1 : d0;
      out.emplace_back(digits);
    }
  }
  return out;
}

std::string show(const BinNum& a, const BinNum& b) {
  return to_literal(a) + ", " + to_literal(b);
}

Outcome bplus_meaning() {
  const std::vector<BinNum> small = all_numerals(8);
  std::size_t cases = 0;
  auto check = [&cases](const BinNum& a, const BinNum& b, std::string* why) {
    ++cases;
    const BinNum r = bplus(a, b);
    if (weight(r) != weight(a) + weight(b)) {
      *why = "value mismatch at " + show(a, b);
      return false;
    }
    if (!is_bnum(to_construction(r))) {
      *why = "result not a numeral at " + show(a, b);
      return false;
    }
    return true;
  };
  std::string why;
  for (const BinNum& a : small) {
    for (const BinNum& b : small) {
      if (!check(a, b, &why)) return {false, why};
    }
  }
  Rng rng(kDefaultSeed);
  for (int i = 0; i < 10000; ++i) {
    const BinNum a = random_binnum(rng, uniform(rng, 9, 12));
    const BinNum b = random_binnum(rng, uniform(rng, 1, 12));
    if (!check(a, b, &why)) return {false, why};
  }
  return {true, std::to_string(cases) + " pairs (exhaustive to 8 digits, 10000 random to 12)"};
}

Outcome btimes_meaning() {
  const std::vector<BinNum> small = all_numerals(8);
  for (const BinNum& a : small) {
    for (const BinNum& b : small) {
      const BinNum r = btimes(a, b);
      if (weight(r) != weight(a) * weight(b) || !is_bnum(to_construction(r))) {
        return {false, "mismatch at " + show(a, b)};
      }
    }
  }
  return {true, std::to_string(small.size() * small.size()) + " pairs, exhaustive to 8 digits"};
}

Outcome rewrite_agreement(const std::string& archive_path) {
  // All digit vectors of length <= 6: every numeral term of value <= 63.
  const std::vector<BinNum> small = all_numerals(6);
  std::ofstream archive(archive_path);
  archive << "# (a, b) pairs whose rewriting under the published BPLUS rules stops\n"
          << "# at a non-numeral normal form, with that normal form.\n";
  std::size_t stuck = 0;
  std::size_t repaired_stuck = 0;
  const std::size_t total = small.size() * small.size();
  for (const BinNum& a : small) {
    for (const BinNum& b : small) {
      const Construction ta = to_construction(a);
      const Construction tb = to_construction(b);
      const RewriteResult r = bplus_rewrite(ta, tb, RuleSet::kPublished);
      if (const auto* s = std::get_if<Stuck>(&r)) {
        ++stuck;
        archive << show(a, b) << " -> " << s->term << "\n";
      } else if (to_nat(from_construction(std::get<Construction>(r))) != to_nat(bplus(a, b))) {
        return {false, "published rules disagree at " + show(a, b)};
      }
      const RewriteResult fixed = bplus_rewrite(ta, tb, RuleSet::kRepaired);
      if (std::holds_alternative<Stuck>(fixed)) {
        ++repaired_stuck;
      } else if (to_nat(from_construction(std::get<Construction>(fixed))) != to_nat(bplus(a, b))) {
        return {false, "repaired rules disagree at " + show(a, b)};
      }
    }
  }
  std::ostringstream detail;
  detail.precision(1);
  detail << std::fixed << total << " pairs; published rules Stuck on " << stuck << " ("
         << 100.0 * static_cast<double>(stuck) / static_cast<double>(total)
         << "%, archived to " << archive_path << "), repaired rules Stuck on " << repaired_stuck;
  return {true, detail.str()};
}

Outcome coherence() {
  const std::vector<BinNum> numerals = all_numerals(12);
  for (const BinNum& b : numerals) {
    const std::uint64_t n = weight(b);
    if (weight(succ_b(b)) != n + 1) return {false, "+1-is-S fails at " + to_literal(b)};
    if (eval_nat(to_construction(succ_b(b)), {}) != eval_nat(Construction::succ(to_construction(b)), {})) {
      return {false, "+1-is-S (quoted) fails at " + to_literal(b)};
    }
    if (weight(shift(b)) != 2 * n) return {false, "<<-is-*2 fails at " + to_literal(b)};
    if (to_nat(b) != n || eval_nat(to_construction(b), {}) != n) {
      return {false, "evaluation fails at " + to_literal(b)};
    }
  }
  const Construction zero = Construction::zero();
  const bool lemma1 = to_nat(BinNum({d0})) == 0 && to_construction(BinNum({d0})) == bnat(zero, zero) &&
                      eval_nat(to_construction(BinNum({d0})), {}) == 0;
  const bool lemma2 = to_nat(BinNum({d1})) == 1 &&
                      to_construction(BinNum({d1})) == bnat(zero, quote_unary(1)) &&
                      eval_nat(to_construction(BinNum({d1})), {}) == 1;
  if (!lemma1 || !lemma2) return {false, "single-digit lemmas fail"};
  return {true, std::to_string(numerals.size()) + " numerals, exhaustive to 12 digits"};
}

Outcome decision_meaning() {
  Rng rng(kDefaultSeed);
  const FormulaShape shape;  // L2, <= 3 quantifiers, Succ chains <= 5
  std::size_t compared = 0;
  for (int i = 0; i < 1000; ++i) {
    const Construction c = random_sentence(rng, shape);
    Decision d;
    TruthValue negated;
    try {
      d = decide_bt6_with_bound(c, {}, 64);
      negated = decide_bt6(Construction::neg(c));
    } catch (const Error& e) {
      return {false, "no decision for " + print(c) + ": " + e.what()};
    }
    if (d.value == negated) return {false, "negation duality fails on " + print(c)};
    if (!d.sufficiency_bound) continue;
    ++compared;
    const bool oracle = bounded_oracle(c, {}, *d.sufficiency_bound);
    if (oracle != (d.value == TruthValue::kTrue)) {
      return {false, "oracle disagrees on " + print(c)};
    }
  }
  return {true, "1000 sentences decided, duality holds on all, " + std::to_string(compared) +
                    " with a sufficiency bound <= 64 agree with the oracle"};
}

Outcome named_sentences() {
  const BiformTheory& bt4 = *builtin_graph().find_theory("BT4");
  for (const NamedAxiom& a : bt4.axioms) {
    if (a.label == "A5" || a.label == "A6") continue;
    if (decide_bt6(universal_closure(a.formula)) != TruthValue::kTrue) {
      return {false, "decide_bt6 rejects " + a.label};
    }
    if ((a.label == "A1" || a.label == "A2") &&
        decide_bt5(universal_closure(a.formula)) != TruthValue::kTrue) {
      return {false, "decide_bt5 rejects " + a.label};
    }
  }
  if (decide_bt6(parse_construction("(exists y (= (s y) z))")) != TruthValue::kFalse) {
    return {false, "decide_bt6 accepts exists y. S(y) = 0"};
  }
  return {true, "A1-A4, A7 tt; exists y. S(y) = 0 ff; decide_bt5 A1, A2 tt"};
}

Outcome induction_harness() {
  Rng rng(kDefaultSeed);
  for (int i = 0; i < 20; ++i) {
    const Construction pred = random_linear_predicate(rng, VarName("n"));
    const Construction instance = induction_instance(SchemaKind::kInductionL2, pred);
    if (decide_bt6(instance) != TruthValue::kTrue) {
      return {false, "instance for " + print(pred) + " not decided tt"};
    }
  }
  try {
    induction_instance(SchemaKind::kInductionL2, parse_construction("(= n z)"));
    return {false, "non-abstraction accepted"};
  } catch (const NotAnAbstraction&) {
  }
  try {
    induction_instance(SchemaKind::kInductionL2, parse_construction("(lambda n (= (* n n) n))"));
    return {false, "L3 body accepted"};
  } catch (const LanguageError&) {
  }
  return {true, "20 corpus instances decided tt; non-abstraction and L3 body rejected"};
}

Outcome morphism_obligations() {
  const TheoryGraph& g = builtin_graph();
  const Report to7 = check_morphism(*g.find_morphism("BT4-to-BT7"));
  const auto a26 = std::find_if(to7.entries.begin(), to7.entries.end(),
                                [](const ReportEntry& e) { return e.item == "Axiom 26 (A7)"; });
  if (a26 == to7.entries.end() || !a26->ok || a26->method != "decide-l2") {
    return {false, "Axiom 26 not discharged by decide-l2"};
  }
  if (!to7.ok()) return {false, "BT4-to-BT7 has failures"};
  const Morphism& m = *g.find_morphism("BT7-to-BT8");
  const Report to8 = check_morphism(m);
  if (!to8.ok()) return {false, "BT7-to-BT8: " + std::to_string(to8.failures()) + " failures"};
  std::size_t decided = 0;
  std::size_t sampled = 0;
  for (std::size_t i = 0; i < m.obligations.size(); ++i) {
    const auto* s = std::get_if<SentenceObligation>(&m.obligations[i].content);
    if (s == nullptr) continue;
    const std::string& method = to8.entries[i].method;
    if (is_fo(LangLevel::kL2, s->formula)) {
      if (method != "decide-l2") return {false, m.obligations[i].label + " not decided"};
      ++decided;
    } else {
      if (method.rfind("model-check(1000, 32)", 0) != 0) {
        return {false, m.obligations[i].label + " not model checked with (1000, 32)"};
      }
      ++sampled;
    }
  }
  return {true, "BT4-to-BT7 " + std::to_string(to7.entries.size()) + "/" +
                    std::to_string(to7.entries.size()) + ", BT7-to-BT8 " +
                    std::to_string(to8.entries.size()) + "/" + std::to_string(to8.entries.size()) +
                    " (" + std::to_string(decided) + " decided, " + std::to_string(sampled) +
                    " model checked, rest per obligation kind)"};
}

Outcome substitution_semantics() {
  Rng rng(kDefaultSeed);
  const std::vector<VarName> vars{VarName("x"), VarName("y"), VarName("w")};
  const FormulaShape shape{LangLevel::kL3, 0, 3, 3, 2};
  for (int i = 0; i < 1000; ++i) {
    const Construction c = random_formula(rng, shape, vars);
    const VarName v = vars[uniform(rng, 0, vars.size() - 1)];
    const Construction t = random_term(rng, shape, vars);
    const Environment e = random_environment(rng, vars, 7);
    if (eval_bool(substitute(c, v, t), e) != eval_bool(c, e.override(v, eval_nat(t, e)))) {
      return {false, "lemma fails on " + print(c) + " [" + v.id() + " := " + print(t) + "]"};
    }
  }
  return {true, "1000 quadruples with values <= 7"};
}

struct Run {
  int status;
  std::string out;
};

std::string quote(const std::string& arg) {
  std::string q = "'";
  for (char ch : arg) {
    if (ch == '\'') {
      q += "'\\''";
    } else {
      q += ch;
    }
  }
  return q + "'";
}

Run run_binary(const std::string& binary, const std::vector<std::string>& args) {
  std::string command = quote(binary);
  for (const std::string& a : args) command += " " + quote(a);
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  char buffer[256];
  while (std::fgets(buffer, sizeof buffer, pipe) != nullptr) out += buffer;
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

Outcome cli_contract(const std::string& binary) {
  struct Case {
    std::vector<std::string> args;
    std::string out;
    int status;
  };
  const std::vector<Case> cases{
      {{"decide", "--theory", "bt6", "(forall x (or (= x z) (exists y (= (s y) x))))"}, "tt\n", 0},
      {{"bplus", "#b1", "#b1"}, "#b10\n", 0},
      {{"recognize", "--level", "2", "(= (* x x) x)"}, "no\n", 3},
  };
  for (const Case& c : cases) {
    const Run r = run_binary(binary, c.args);
    if (r.out != c.out || r.status != c.status) {
      return {false, c.args[0] + " printed '" + r.out + "' with exit " + std::to_string(r.status)};
    }
  }
  return {true, "3 examples bit-exact"};
}

}  // namespace
}  // namespace biforge

int main(int argc, char** argv) {
  using namespace biforge;
  if (argc < 2) {
    std::cerr << "usage: acceptance BIFORGE_BINARY [STUCK_ARCHIVE]\n";
    return 2;
  }
  const std::string binary = argv[1];
  const std::string archive = argc > 2 ? argv[2] : "stuck_cases.txt";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"BPLUS meaning formula", bplus_meaning},
      {"BTIMES meaning formula", btimes_meaning},
      {"rewrite/direct agreement", [&] { return rewrite_agreement(archive); }},
      {"coherence lemmas", coherence},
      {"decision-procedure meaning formula", decision_meaning},
      {"named sentences", named_sentences},
      {"induction harness", induction_harness},
      {"morphism obligations", morphism_obligations},
      {"substitution semantics", substitution_semantics},
      {"CLI contract", [&] { return cli_contract(binary); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " ("
              << criteria[i].first << "): " << o.detail << " [" << ms << " ms]" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
