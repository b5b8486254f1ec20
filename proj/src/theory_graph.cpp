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

#include "biforge/theory_graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "biforge/error.hpp"
#include "biforge/presburger.hpp"
#include "biforge/sampling.hpp"
#include "biforge/semantics.hpp"
#include "biforge/sexpr.hpp"

namespace biforge {

// ---------------------------------------------------------------------------
// Schemas

LangLevel schema_level(SchemaKind kind) { return static_cast<LangLevel>(kind); }

std::string to_string(SchemaKind kind) {
  return "induction-l" + std::to_string(static_cast<int>(kind));
}

std::optional<SchemaKind> parse_schema_kind(std::string_view text) {
  for (SchemaKind k :
       {SchemaKind::kInductionL1, SchemaKind::kInductionL2, SchemaKind::kInductionL3}) {
    if (text == to_string(k)) return k;
  }
  return std::nullopt;
}

Construction induction_instance(SchemaKind kind, const Construction& pred) {
  if (!is_abs(pred)) throw NotAnAbstraction("induction predicate must be an abstraction");
  if (!is_fo_abs(schema_level(kind), pred)) {
    throw LanguageError("induction predicate outside the language of " + to_string(kind));
  }
  const VarName& v = pred.var_name();
  const Construction& body = abs_body(pred);
  const VarSet avoid = free_vars(pred);
  const VarName x = avoid.contains(VarName("x")) ? fresh_variable(VarName("x"), avoid)
                                                 : VarName("x");
  const Construction xv = Construction::var(x);
  auto at = [&](const Construction& t) { return substitute(body, v, t); };
  return Construction::implies(
      Construction::conj(at(Construction::zero()),
                         Construction::forall(x, Construction::implies(
                                                     at(xv), at(Construction::succ(xv))))),
      Construction::forall(x, at(xv)));
}

// ---------------------------------------------------------------------------
// Theories

void validate(const BiformTheory& t) {
  if (!t.first_order()) {
    if (!t.axioms.empty() || !t.schemas.empty()) {
      throw std::invalid_argument(t.name + ": higher-order theories carry no axiom list");
    }
    return;
  }
  for (const NamedAxiom& a : t.axioms) {
    if (!is_closed(a.formula)) {
      throw std::invalid_argument(t.name + ": axiom " + a.label + " is not closed");
    }
    if (sort_of(a.formula) != Sorting::kBool || !is_fo(*t.level, a.formula)) {
      throw std::invalid_argument(t.name + ": axiom " + a.label +
                                  " exceeds the theory's language");
    }
  }
  for (SchemaKind k : t.schemas) {
    if (!(schema_level(k) <= *t.level)) {
      throw std::invalid_argument(t.name + ": schema " + to_string(k) +
                                  " exceeds the theory's language");
    }
  }
}

namespace {

NamedAxiom axiom(const char* label, const char* text) {
  return NamedAxiom{label, parse_construction(text)};
}

const NamedAxiom& builtin_axiom(int n) {
  static const std::vector<NamedAxiom> axioms{
      axiom("A1", "(forall x (not (= (s x) z)))"),
      axiom("A2", "(forall x (forall y (imp (= (s x) (s y)) (= x y))))"),
      axiom("A3", "(forall x (= (+ x z) x))"),
      axiom("A4", "(forall x (forall y (= (+ x (s y)) (s (+ x y)))))"),
      axiom("A5", "(forall x (= (* x z) z))"),
      axiom("A6", "(forall x (forall y (= (* x (s y)) (+ (* x y) x))))"),
      axiom("A7", "(forall x (or (= x z) (exists y (= (s y) x))))"),
  };
  return axioms.at(static_cast<std::size_t>(n - 1));
}

TransformerDescriptor transformer(int pi) {
  switch (pi) {
    case 1: return {1, "IS-FO-BT1", "is_fo(L1)"};
    case 3: return {3, "BPLUS", "bplus"};
    case 4: return {4, "BPLUS", "bplus_rewrite"};
    case 5: return {5, "IS-FO-BT2", "is_fo(L2)"};
    case 7: return {7, "BTIMES", "btimes"};
    case 9: return {9, "IS-FO-BT3", "is_fo(L3)"};
    case 11: return {11, "BT5-DEC-PROC", "decide_bt5"};
    case 12: return {12, "IS-FO-BT1-ABS", "is_fo_abs(L1)"};
    case 14: return {14, "BT6-DEC-PROC", "decide_bt6"};
    case 15: return {15, "IS-FO-BT2-ABS", "is_fo_abs(L2)"};
    case 17: return {17, "IS-FO-BT3-ABS", "is_fo_abs(L3)"};
    default: throw std::invalid_argument("no transformer " + std::to_string(pi));
  }
}

// Union of the parents' content followed by the theory's own additions.
void inherit(BiformTheory& t, const BiformTheory& parent) {
  t.extends.push_back(parent.name);
  for (const NamedAxiom& a : parent.axioms) {
    auto same = [&a](const NamedAxiom& b) { return b.label == a.label; };
    if (std::none_of(t.axioms.begin(), t.axioms.end(), same)) t.axioms.push_back(a);
  }
  for (SchemaKind k : parent.schemas) {
    if (std::find(t.schemas.begin(), t.schemas.end(), k) == t.schemas.end()) {
      t.schemas.push_back(k);
    }
  }
  for (const TransformerDescriptor& d : parent.transformers) {
    auto same = [&d](const TransformerDescriptor& e) { return e.pi == d.pi; };
    if (std::none_of(t.transformers.begin(), t.transformers.end(), same)) {
      t.transformers.push_back(d);
    }
  }
}

BiformTheory make_theory(const TheoryGraph& g, std::string name,
                         std::optional<LangLevel> level,
                         std::vector<std::string> parents, std::vector<int> axioms,
                         std::vector<SchemaKind> schemas, std::vector<int> transformers) {
  BiformTheory t;
  t.name = std::move(name);
  t.level = level;
  for (const std::string& p : parents) inherit(t, *g.find_theory(p));
  for (int n : axioms) t.axioms.push_back(builtin_axiom(n));
  for (SchemaKind k : schemas) t.schemas.push_back(k);
  for (int pi : transformers) t.transformers.push_back(transformer(pi));
  std::sort(t.transformers.begin(), t.transformers.end(),
            [](const auto& a, const auto& b) { return a.pi < b.pi; });
  validate(t);
  return t;
}

Morphism bt7_to_bt8() {
  Morphism m{"BT7-to-BT8", "BT7", "BT8", {}, {}};
  auto sentence = [&m](const std::string& label, int a, DischargePolicy policy) {
    m.obligations.push_back(
        Obligation{label, SentenceObligation{builtin_axiom(a).formula, std::move(policy)}});
  };
  auto law = [&m](int n) {
    m.obligations.push_back(Obligation{"Axiom " + std::to_string(n), TransformerLaw{n, 200}});
  };
  sentence("Axiom 3 (A3)", 3, DecideL2{});
  sentence("Axiom 4 (A4)", 4, DecideL2{});
  for (int n = 5; n <= 15; ++n) law(n);
  sentence("Axiom 16 (A5)", 5, RandomizedModelCheck{1000, 32});
  sentence("Axiom 17 (A6)", 6, RandomizedModelCheck{1000, 32});
  for (int n = 18; n <= 25; ++n) law(n);
  m.obligations.push_back(Obligation{"Axiom 27", SchemaObligation{SchemaKind::kInductionL1, 20}});
  m.obligations.push_back(Obligation{"Axiom 28", DecisionContract{LangLevel::kL1, 200}});
  m.obligations.push_back(Obligation{"Axiom 29", SchemaObligation{SchemaKind::kInductionL2, 20}});
  m.obligations.push_back(Obligation{"Axiom 30", DecisionContract{LangLevel::kL2, 200}});
  m.obligations.push_back(Obligation{"Axiom 31", SchemaObligation{SchemaKind::kInductionL3, 20}});
  return m;
}

TheoryGraph make_builtin() {
  using L = LangLevel;
  using S = SchemaKind;
  TheoryGraph g;
  auto add = [&g](BiformTheory t) { g.theories.push_back(std::move(t)); };
  add(make_theory(g, "BT1", L::kL1, {}, {1, 2}, {}, {1}));
  add(make_theory(g, "BT2", L::kL2, {"BT1"}, {3, 4}, {}, {3, 4, 5}));
  add(make_theory(g, "BT3", L::kL3, {"BT2"}, {5, 6}, {}, {7, 9}));
  add(make_theory(g, "BT4", L::kL3, {"BT3"}, {7}, {}, {}));
  add(make_theory(g, "BT5", L::kL1, {"BT1"}, {}, {S::kInductionL1}, {11, 12}));
  add(make_theory(g, "BT6", L::kL2, {"BT2", "BT5"}, {}, {S::kInductionL2}, {14, 15}));
  add(make_theory(g, "BT7", L::kL3, {"BT3", "BT6"}, {}, {S::kInductionL3}, {17}));
  BiformTheory bt8;
  bt8.name = "BT8";
  bt8.descriptors = {"+-pred", "*-pred"};
  add(std::move(bt8));

  // Labels carry the numbering of the combined axiom list alongside A1..A7.
  Morphism bt4_to_bt7{"BT4-to-BT7", "BT4", "BT7", {}, axiom_obligations(*g.find_theory("BT4"))};
  const std::map<std::string, int> numbering{{"A1", 1},  {"A2", 2},  {"A3", 3}, {"A4", 4},
                                             {"A5", 16}, {"A6", 17}, {"A7", 26}};
  for (Obligation& o : bt4_to_bt7.obligations) {
    o.label = "Axiom " + std::to_string(numbering.at(o.label)) + " (" + o.label + ")";
  }
  g.morphisms.push_back(std::move(bt4_to_bt7));
  g.morphisms.push_back(bt7_to_bt8());
  return g;
}

}  // namespace

const TheoryGraph& builtin_graph() {
  static const TheoryGraph graph = make_builtin();
  return graph;
}

const std::vector<BiformTheory>& registry() { return builtin_graph().theories; }

const BiformTheory* TheoryGraph::find_theory(std::string_view name) const {
  for (const BiformTheory& t : theories) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

const Morphism* TheoryGraph::find_morphism(std::string_view name) const {
  for (const Morphism& m : morphisms) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

std::vector<std::pair<std::string, std::string>> TheoryGraph::inclusions() const {
  std::vector<std::pair<std::string, std::string>> edges;
  for (const BiformTheory& t : theories) {
    for (const std::string& p : t.extends) edges.emplace_back(p, t.name);
  }
  return edges;
}

std::vector<Obligation> axiom_obligations(const BiformTheory& source) {
  std::vector<Obligation> out;
  for (const NamedAxiom& a : source.axioms) {
    DischargePolicy policy = DecideL2{};
    if (!is_fo(LangLevel::kL2, a.formula)) policy = RandomizedModelCheck{1000, 32};
    out.push_back(Obligation{a.label, SentenceObligation{a.formula, std::move(policy)}});
  }
  return out;
}

Morphism identity_morphism(const BiformTheory& t) {
  return Morphism{t.name + "-id", t.name, t.name, {}, axiom_obligations(t)};
}

// ---------------------------------------------------------------------------
// Translation

namespace {

std::optional<Kind> constant_kind(const std::string& symbol) {
  if (symbol == "0") return Kind::kZero;
  if (symbol == "S") return Kind::kSucc;
  if (symbol == "+") return Kind::kPlus;
  if (symbol == "*") return Kind::kTimes;
  return std::nullopt;
}

}  // namespace

Construction translate(const Construction& c, const SymbolMap& map) {
  std::map<Kind, Kind> kinds;
  for (const auto& [from, to] : map) {
    const auto a = constant_kind(from);
    const auto b = constant_kind(to);
    if (!a || !b) throw std::invalid_argument("unknown constant in symbol map: " + from + " -> " + to);
    if (arity(*a) != arity(*b)) {
      throw std::invalid_argument("symbol map changes arity: " + from + " -> " + to);
    }
    kinds[*a] = *b;
  }
  if (kinds.empty()) return c;
  std::function<Construction(const Construction&)> go = [&](const Construction& d) {
    Kind k = d.kind();
    if (auto it = kinds.find(k); it != kinds.end()) k = it->second;
    if (d.arity() == 0 && k == d.kind()) return d;
    std::vector<Construction> kids;
    for (std::size_t i = 0; i < d.arity(); ++i) kids.push_back(go(d.child(i)));
    const VarName* v = (d.kind() == Kind::kVar || d.is_binder()) ? &d.var_name() : nullptr;
    return Construction::make(k, v, kids.data());
  };
  return go(c);
}

// ---------------------------------------------------------------------------
// Transformer laws

LawInstance transformer_law_instance(int axiom, const BinNum& u, const BinNum& v,
                                     RuleSet reading) {
  const BinNum zero({BinDigit::kD0});
  const BinNum one({BinDigit::kD1});
  auto bn = [](const BinNum& x, BinDigit d) {
    std::vector<BinDigit> digits{d};
    digits.insert(digits.end(), x.digits().begin(), x.digits().end());
    return BinNum(std::move(digits));
  };
  constexpr BinDigit d0 = BinDigit::kD0;
  constexpr BinDigit d1 = BinDigit::kD1;
  switch (axiom) {
    case 5: return {bplus(u, zero), u};
    case 6: return {bplus(zero, u), u};
    case 7: return {bplus(one, one), BinNum({d0, d1})};
    case 8: return {bplus(bn(u, d0), one), bn(u, d1)};
    case 9: return {bplus(bn(u, d1), one), bn(bplus(u, one), d0)};
    case 10: return {bplus(one, bn(u, d0)), bn(u, d1)};
    case 11: {
      const BinDigit d = reading == RuleSet::kRepaired ? d1 : d0;
      return {bplus(one, bn(u, d)), bn(bplus(u, one), d0)};
    }
    case 12: return {bplus(bn(u, d0), bn(v, d0)), bn(bplus(u, v), d0)};
    case 13: return {bplus(bn(u, d0), bn(v, d1)), bn(bplus(u, v), d1)};
    case 14: return {bplus(bn(u, d1), bn(v, d0)), bn(bplus(u, v), d1)};
    case 15: return {bplus(bn(u, d1), bn(v, d1)), bn(bplus(bplus(u, v), one), d0)};
    case 18: return {btimes(u, zero), zero};
    case 19: return {btimes(zero, u), zero};
    case 20: return {btimes(u, one), u};
    case 21: return {btimes(one, u), u};
    case 22: return {btimes(bn(u, d0), v), bn(btimes(u, v), d0)};
    case 23: return {btimes(bn(u, d1), v), bplus(bn(btimes(u, v), d0), v)};
    case 24: return {btimes(v, bn(u, d0)), bn(btimes(u, v), d0)};
    case 25: return {btimes(v, bn(u, d1)), bplus(bn(btimes(u, v), d0), v)};
    default:
      throw std::invalid_argument("no transformer law for axiom " + std::to_string(axiom));
  }
}

// ---------------------------------------------------------------------------
// Reports

bool Report::ok() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const ReportEntry& e) { return !e.ok; }));
}

std::string Report::to_text() const {
  std::ostringstream out;
  for (const ReportEntry& e : entries) {
    out << (e.ok ? "ok   " : "FAIL ") << e.item << ": " << e.method;
    if (!e.detail.empty()) out << " (" << e.detail << ")";
    out << "\n";
  }
  out << subject << ": " << entries.size() << " checked, " << failures() << " failed\n";
  return out.str();
}

namespace {

constexpr std::uint64_t kSufficiencyLimit = 64;
constexpr std::uint64_t kSchemaOracleBound = 12;

std::string describe(const Environment& e, const std::vector<VarName>& vars) {
  std::string out;
  for (const VarName& v : vars) {
    if (!out.empty()) out += ", ";
    out += v.id() + "=" + e.lookup(v).str();
  }
  return out;
}

// Universal prefix and the formula under it.
std::pair<std::vector<VarName>, Construction> strip_universals(Construction c) {
  std::vector<VarName> vars;
  while (c.kind() == Kind::kForall) {
    vars.push_back(c.var_name());
    Construction body = c.body();
    c = std::move(body);
  }
  return {std::move(vars), std::move(c)};
}

ReportEntry model_check(const std::string& item, const Construction& formula,
                        const RandomizedModelCheck& policy, Rng& rng) {
  const std::string method = "model-check(" + std::to_string(policy.samples) + ", " +
                             policy.bound.str() + ")";
  const auto [vars, matrix] = strip_universals(formula);
  const std::size_t runs = vars.empty() ? 1 : policy.samples;
  for (std::size_t i = 0; i < runs; ++i) {
    const Environment e = random_environment(rng, vars, policy.bound);
    if (!bounded_oracle(matrix, e, policy.bound)) {
      return {item, false, method, "witness " + describe(e, vars)};
    }
  }
  return {item, true, method, std::to_string(runs) + " samples"};
}

ReportEntry decide_sentence(const std::string& item, const Construction& formula,
                            bool prefer_bt5) {
  const bool l1 = prefer_bt5 && is_fo(LangLevel::kL1, formula);
  const std::string method = l1 ? "decide-bt5" : "decide-bt6";
  const TruthValue v = l1 ? decide_bt5(formula) : decide_bt6(formula);
  if (v == TruthValue::kTrue) return {item, true, method, ""};
  return {item, false, method, "decided ff"};
}

ReportEntry check_law(const std::string& item, const TransformerLaw& law, Rng& rng) {
  const std::string method = "transformer-law";
  for (std::size_t i = 0; i < law.samples; ++i) {
    const BinNum u = random_binnum(rng, uniform(rng, 1, 8));
    const BinNum v = random_binnum(rng, uniform(rng, 1, 8));
    const LawInstance inst = transformer_law_instance(law.axiom, u, v);
    if (to_nat(inst.lhs) != to_nat(inst.rhs) || !is_bnum(to_construction(inst.lhs))) {
      return {item, false, method,
              "witness u=" + to_literal(u) + ", v=" + to_literal(v) + ": " +
                  to_literal(inst.lhs) + " vs " + to_literal(inst.rhs)};
    }
  }
  return {item, true, method, std::to_string(law.samples) + " samples"};
}

ReportEntry check_schema(const std::string& item, const SchemaObligation& s, Rng& rng) {
  const LangLevel level = schema_level(s.kind);
  const bool decidable = level <= LangLevel::kL2;
  const std::string method = decidable ? "induction instances by decide-l2"
                                       : "induction instances by model-check";
  FormulaShape shape;
  shape.level = level;
  shape.max_quantifiers = 1;
  shape.max_depth = 2;
  shape.term_depth = 1;
  shape.max_succ = 3;
  const VarName a("a");
  for (std::size_t i = 0; i < s.instances; ++i) {
    const Construction pred = random_predicate(rng, shape, a);
    const Construction inst = induction_instance(s.kind, pred);
    const bool holds = decidable ? decide_bt6(inst) == TruthValue::kTrue
                                 : bounded_oracle(inst, {}, kSchemaOracleBound);
    if (!holds) return {item, false, method, "witness " + print(pred)};
  }
  return {item, true, method, std::to_string(s.instances) + " instances"};
}

ReportEntry check_contract(const std::string& item, const DecisionContract& c, Rng& rng) {
  const bool l1 = c.level == LangLevel::kL1;
  const std::string method = l1 ? "decide-bt5 vs bounded oracle" : "decide-bt6 vs bounded oracle";
  FormulaShape shape;
  shape.level = c.level;
  std::size_t compared = 0;
  for (std::size_t i = 0; i < c.sentences; ++i) {
    const Construction s = random_sentence(rng, shape);
    const Decision d = decide_bt6_with_bound(s, {}, kSufficiencyLimit);
    if (l1 && decide_bt5(s) != d.value) {
      return {item, false, method, "bt5/bt6 disagree on " + print(s)};
    }
    if (!d.sufficiency_bound) continue;
    ++compared;
    if (bounded_oracle(s, {}, *d.sufficiency_bound) != (d.value == TruthValue::kTrue)) {
      return {item, false, method, "witness " + print(s)};
    }
  }
  return {item, true, method,
          std::to_string(compared) + " of " + std::to_string(c.sentences) + " compared"};
}

}  // namespace

Report check_axioms(const BiformTheory& t, std::size_t samples, const Natural& bound,
                    std::uint64_t seed) {
  if (!t.first_order()) throw std::invalid_argument(t.name + " is not first-order");
  Rng rng(seed);
  Report report{"theory " + t.name, {}};
  for (const NamedAxiom& a : t.axioms) {
    try {
      if (is_fo(LangLevel::kL2, a.formula)) {
        report.entries.push_back(decide_sentence(a.label, a.formula, true));
      } else {
        report.entries.push_back(
            model_check(a.label, a.formula, RandomizedModelCheck{samples, bound}, rng));
      }
    } catch (const Error& e) {
      report.entries.push_back({a.label, false, "error", e.what()});
    }
  }
  return report;
}

Report check_morphism(const Morphism& m, const TheoryGraph& graph, std::uint64_t seed) {
  const BiformTheory* source = graph.find_theory(m.source);
  const BiformTheory* target = graph.find_theory(m.target);
  if (source == nullptr || target == nullptr) {
    throw std::invalid_argument("morphism " + m.name + " names an unknown theory");
  }
  Rng rng(seed);
  Report report{"morphism " + m.name, {}};
  for (const Obligation& o : m.obligations) {
    try {
      if (const auto* s = std::get_if<SentenceObligation>(&o.content)) {
        const Construction f = translate(s->formula, m.symbol_map);
        const bool in_target =
            std::any_of(target->axioms.begin(), target->axioms.end(),
                        [&f](const NamedAxiom& a) { return alpha_equivalent(a.formula, f); });
        if (in_target) {
          report.entries.push_back({o.label, true, "target axiom", ""});
        } else if (const auto* rmc = std::get_if<RandomizedModelCheck>(&s->policy)) {
          report.entries.push_back(model_check(o.label, f, *rmc, rng));
        } else {
          ReportEntry e = decide_sentence(o.label, f, false);
          e.method = "decide-l2";
          report.entries.push_back(std::move(e));
        }
      } else if (const auto* law = std::get_if<TransformerLaw>(&o.content)) {
        report.entries.push_back(check_law(o.label, *law, rng));
      } else if (const auto* schema = std::get_if<SchemaObligation>(&o.content)) {
        report.entries.push_back(check_schema(o.label, *schema, rng));
      } else {
        report.entries.push_back(
            check_contract(o.label, std::get<DecisionContract>(o.content), rng));
      }
    } catch (const Error& e) {
      report.entries.push_back({o.label, false, "error", e.what()});
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Definite descriptions

namespace {

using BinaryFn = std::function<Natural(const Natural&, const Natural&)>;

// First sampled point violating a clause of the named predicate.
std::optional<std::string> clause_violation(const BinaryFn& f, const std::string& pred,
                                            int clause, std::size_t samples) {
  const bool additive = pred == "+-pred";
  for (Natural x = 0; x <= samples; ++x) {
    if (clause == 1) {
      const Natural expected = additive ? x : Natural(0);
      if (f(x, 0) != expected) return "x=" + x.str();
      continue;
    }
    for (Natural y = 0; y <= samples; ++y) {
      const Natural expected = additive ? Natural(f(x, y) + 1) : Natural(f(x, y) + x);
      if (f(x, y + 1) != expected) return "x=" + x.str() + ", y=" + y.str();
    }
  }
  return std::nullopt;
}

BinaryFn standard(const std::string& pred) {
  if (pred == "+-pred") return [](const Natural& x, const Natural& y) { return Natural(x + y); };
  if (pred == "*-pred") return [](const Natural& x, const Natural& y) { return Natural(x * y); };
  throw std::invalid_argument("unknown predicate " + pred);
}

std::string clause_text(const std::string& pred, int clause) {
  if (pred == "+-pred") return clause == 1 ? "f x 0 = x" : "f x (S y) = S (f x y)";
  return clause == 1 ? "f x 0 = 0" : "f x (S y) = f x y + x";
}

}  // namespace

Report check_definite_description(std::size_t samples,
                                  const std::vector<CandidateFunction>& candidates) {
  Report report{"definite descriptions", {}};
  const std::string method = "pointwise on 0.." + std::to_string(samples);
  for (const char* pred : {"+-pred", "*-pred"}) {
    const std::string op = pred[0] == '+' ? "+" : "*";
    for (int clause : {1, 2}) {
      const auto bad = clause_violation(standard(pred), pred, clause, samples);
      report.entries.push_back({"standard " + op + " satisfies " + pred + " clause " +
                                    std::to_string(clause) + " (" + clause_text(pred, clause) + ")",
                                !bad, method, bad ? "witness " + *bad : ""});
    }
  }
  for (const CandidateFunction& c : candidates) {
    const BinaryFn reference = standard(c.predicate);
    std::optional<std::string> bad;
    for (int clause : {1, 2}) {
      if (!bad) bad = clause_violation(c.f, c.predicate, clause, samples);
    }
    report.entries.push_back(
        {c.name + " satisfies " + c.predicate, !bad, method, bad ? "witness " + *bad : ""});
    std::optional<std::string> differs;
    for (Natural x = 0; x <= samples && !differs; ++x) {
      for (Natural y = 0; y <= samples && !differs; ++y) {
        if (c.f(x, y) != reference(x, y)) differs = "x=" + x.str() + ", y=" + y.str();
      }
    }
    report.entries.push_back({c.name + " agrees with the unique " + c.predicate + " solution",
                              !differs, method, differs ? "disagreement at " + *differs : ""});
  }
  return report;
}

// ---------------------------------------------------------------------------
// Description files

namespace {

struct Line {
  std::size_t offset;
  std::size_t number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Splits off the first whitespace-delimited word.
std::string_view next_word(std::string_view& rest) {
  rest = trim(rest);
  const auto end = rest.find_first_of(" \t");
  std::string_view word = rest.substr(0, end);
  rest = end == std::string_view::npos ? std::string_view{} : trim(rest.substr(end));
  return word;
}

class DescriptionParser {
 public:
  DescriptionParser(std::string_view text, TheoryGraph graph)
      : text_(text), graph_(std::move(graph)) {}

  TheoryGraph parse() {
    std::size_t offset = 0;
    std::size_t number = 0;
    while (offset <= text_.size()) {
      const auto end = std::min(text_.find('\n', offset), text_.size());
      ++number;
      const std::string_view raw = text_.substr(offset, end - offset);
      const std::string_view t = trim(raw);
      if (!t.empty() && t.front() != '#') {
        lines_.push_back(Line{offset + static_cast<std::size_t>(t.data() - raw.data()), number, t});
      }
      offset = end + 1;
    }
    while (pos_ < lines_.size()) {
      const Line& line = lines_[pos_++];
      std::string_view rest = line.text;
      const std::string_view keyword = next_word(rest);
      const std::string_view name = next_word(rest);
      if (name.empty() || !rest.empty()) fail(line, "expected `theory NAME` or `morphism NAME`");
      if (keyword == "theory") {
        theory(line, std::string(name));
      } else if (keyword == "morphism") {
        morphism(line, std::string(name));
      } else {
        fail(line, "expected `theory` or `morphism`");
      }
    }
    return std::move(graph_);
  }

 private:
  [[noreturn]] void fail(const Line& line, const std::string& what) const {
    throw ParseError("line " + std::to_string(line.number) + ": " + what, line.offset);
  }

  const Line& body_line(const Line& header) {
    if (pos_ >= lines_.size()) fail(header, "missing `end`");
    return lines_[pos_++];
  }

  Construction sexpr(const Line& line, std::string_view text) {
    try {
      return parse_construction(text);
    } catch (const ParseError& e) {
      std::string what = e.what();
      what.resize(what.rfind(" at offset "));
      const std::size_t start = line.offset + static_cast<std::size_t>(text.data() - line.text.data());
      throw ParseError("line " + std::to_string(line.number) + ": " + what, start + e.position());
    } catch (const SortError& e) {
      fail(line, e.what());
    }
  }

  void theory(const Line& header, std::string name) {
    if (graph_.find_theory(name) != nullptr) fail(header, "duplicate theory " + name);
    BiformTheory t;
    t.name = std::move(name);
    while (true) {
      const Line& line = body_line(header);
      std::string_view rest = line.text;
      const std::string_view key = next_word(rest);
      if (key == "end") break;
      if (key == "level") {
        const auto level = parse_level(rest);
        if (!level) fail(line, "expected level 1, 2 or 3");
        t.level = level;
      } else if (key == "extends") {
        const BiformTheory* parent = graph_.find_theory(rest);
        if (parent == nullptr) fail(line, "unknown theory " + std::string(rest));
        inherit(t, *parent);
      } else if (key == "axiom") {
        const std::string label(next_word(rest));
        if (rest.empty()) fail(line, "expected `axiom LABEL EXPRESSION`");
        t.axioms.push_back(NamedAxiom{label, sexpr(line, rest)});
      } else if (key == "schema") {
        const auto kind = parse_schema_kind(rest);
        if (!kind) fail(line, "expected induction-l1, induction-l2 or induction-l3");
        t.schemas.push_back(*kind);
      } else {
        fail(line, "unknown theory field `" + std::string(key) + "`");
      }
    }
    if (!t.level) fail(header, "theory " + t.name + " has no level");
    try {
      validate(t);
    } catch (const std::invalid_argument& e) {
      fail(header, e.what());
    }
    graph_.theories.push_back(std::move(t));
  }

  void morphism(const Line& header, std::string name) {
    if (graph_.find_morphism(name) != nullptr) fail(header, "duplicate morphism " + name);
    Morphism m;
    m.name = std::move(name);
    while (true) {
      const Line& line = body_line(header);
      std::string_view rest = line.text;
      const std::string_view key = next_word(rest);
      if (key == "end") break;
      if (key == "source" || key == "target") {
        if (graph_.find_theory(rest) == nullptr) fail(line, "unknown theory " + std::string(rest));
        (key == "source" ? m.source : m.target) = std::string(rest);
      } else if (key == "map") {
        const std::string from(next_word(rest));
        const std::string to(next_word(rest));
        if (to.empty() || !rest.empty()) fail(line, "expected `map SYMBOL SYMBOL`");
        m.symbol_map[from] = to;
      } else if (key == "obligation") {
        const std::string label(next_word(rest));
        const std::string_view policy = next_word(rest);
        if (policy == "decide") {
          m.obligations.push_back({label, SentenceObligation{sexpr(line, rest), DecideL2{}}});
        } else if (policy == "sample") {
          const std::string samples(next_word(rest));
          const std::string bound(next_word(rest));
          const bool numeric = !samples.empty() && !bound.empty() &&
                               samples.find_first_not_of("0123456789") == std::string::npos &&
                               bound.find_first_not_of("0123456789") == std::string::npos;
          if (!numeric || rest.empty()) fail(line, "expected `sample N BOUND EXPRESSION`");
          m.obligations.push_back(
              {label, SentenceObligation{sexpr(line, rest),
                                         RandomizedModelCheck{std::stoul(samples), Natural(bound)}}});
        } else {
          fail(line, "expected `decide` or `sample`");
        }
      } else {
        fail(line, "unknown morphism field `" + std::string(key) + "`");
      }
    }
    if (m.source.empty() || m.target.empty()) fail(header, "morphism needs source and target");
    try {
      translate(Construction::zero(), m.symbol_map);
    } catch (const std::invalid_argument& e) {
      fail(header, e.what());
    }
    if (m.obligations.empty()) m.obligations = axiom_obligations(*graph_.find_theory(m.source));
    graph_.morphisms.push_back(std::move(m));
  }

  std::string_view text_;
  TheoryGraph graph_;
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

}  // namespace

TheoryGraph parse_theory_graph(std::string_view text, const TheoryGraph& base) {
  return DescriptionParser(text, base).parse();
}

}  // namespace biforge
