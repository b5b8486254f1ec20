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

// Biform theories BT1..BT8, the inclusions and morphisms between them, and
// checks of their axioms and morphism obligations in the standard model.

#ifndef BIFORGE_THEORY_GRAPH_HPP_
#define BIFORGE_THEORY_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "biforge/binum.hpp"
#include "biforge/natural.hpp"
#include "biforge/recognizers.hpp"
#include "biforge/syntax.hpp"

namespace biforge {

enum class SchemaKind : std::uint8_t { kInductionL1 = 1, kInductionL2, kInductionL3 };

LangLevel schema_level(SchemaKind kind);
// "induction-l1" and so on.
std::string to_string(SchemaKind kind);
std::optional<SchemaKind> parse_schema_kind(std::string_view text);

// (A(0) and forall x. (A(x) imp A(S x))) imp forall x. A(x), where A(t) is
// pred's body with t for the abstracted variable. x is renamed if it is
// free in pred. Throws NotAnAbstraction, or LanguageError when the body is
// outside the schema's language.
Construction induction_instance(SchemaKind kind, const Construction& pred);

struct TransformerDescriptor {
  int pi;                 // transformer number
  std::string constant;   // the constant it implements
  std::string operation;  // library entry point
};

struct NamedAxiom {
  std::string label;
  Construction formula;
};

struct BiformTheory {
  std::string name;
  std::optional<LangLevel> level;  // nullopt: higher-order
  std::vector<std::string> extends;  // direct inclusions into this theory
  std::vector<NamedAxiom> axioms;  // including inherited ones
  std::vector<SchemaKind> schemas;
  std::vector<TransformerDescriptor> transformers;
  std::vector<std::string> descriptors;  // higher-order predicates

  bool first_order() const { return level.has_value(); }
};

// Throws std::invalid_argument if an axiom is open or exceeds the theory's
// level, or a schema does.
void validate(const BiformTheory& t);

// Discharge policies for sentence obligations.
struct DecideL2 {};
struct RandomizedModelCheck {
  std::size_t samples;
  Natural bound;
};
using DischargePolicy = std::variant<DecideL2, RandomizedModelCheck>;

struct SentenceObligation {
  Construction formula;
  DischargePolicy policy;
};

// A BPLUS (5..15) or BTIMES (18..25) axiom, checked on sampled numerals.
// Axiom 11 is checked in its repaired reading, (1)_2 + bnat(u, 1).
struct TransformerLaw {
  int axiom;
  std::size_t samples;
};

struct LawInstance {
  BinNum lhs;
  BinNum rhs;
};

// Both sides of a transformer law at numerals u, v, computed with the
// direct algorithms. kPublished selects Axiom 11 as printed. Throws
// std::invalid_argument for axioms outside 5..15 and 18..25.
LawInstance transformer_law_instance(int axiom, const BinNum& u, const BinNum& v,
                                     RuleSet reading = RuleSet::kRepaired);

// Sampled induction instances, each decided or model checked.
struct SchemaObligation {
  SchemaKind kind;
  std::size_t instances;
};

// Meaning formula of a decision procedure: on sampled sentences of the
// level, the procedure agrees with the bounded oracle whenever elimination
// yields a sufficiency bound.
struct DecisionContract {
  LangLevel level;
  std::size_t sentences;
};

using ObligationContent =
    std::variant<SentenceObligation, TransformerLaw, SchemaObligation, DecisionContract>;

struct Obligation {
  std::string label;
  ObligationContent content;
};

// Maps between the constants "0", "S", "+" and "*"; unlisted constants
// map to themselves.
using SymbolMap = std::map<std::string, std::string>;

struct Morphism {
  std::string name;
  std::string source;
  std::string target;
  SymbolMap symbol_map;
  std::vector<Obligation> obligations;
};

// Rewrites constants through the map. Throws std::invalid_argument when a
// constant maps to one of different arity or to an unknown name.
Construction translate(const Construction& c, const SymbolMap& map);

struct TheoryGraph {
  std::vector<BiformTheory> theories;
  std::vector<Morphism> morphisms;

  const BiformTheory* find_theory(std::string_view name) const;
  const Morphism* find_morphism(std::string_view name) const;
  // (from, to) for every `extends` entry.
  std::vector<std::pair<std::string, std::string>> inclusions() const;
};

// BT1..BT8 with the inclusion edges, BT4-to-BT7 and BT7-to-BT8.
const TheoryGraph& builtin_graph();
const std::vector<BiformTheory>& registry();

// Source axioms as obligations: DecideL2 when in L2, otherwise
// RandomizedModelCheck(1000, 32).
std::vector<Obligation> axiom_obligations(const BiformTheory& source);
Morphism identity_morphism(const BiformTheory& t);

// Parses a description file and returns `base` extended with its theories
// and morphisms. Throws ParseError, message prefixed with the line number:
// syntax errors carry the offset of the offending character, semantic
// errors (unknown theory, open axiom) that of their line or block.
//
//   theory NAME            morphism NAME
//     level 1|2|3            source THEORY
//     extends THEORY         target THEORY
//     axiom LABEL SEXPR      map SYMBOL SYMBOL
//     schema induction-lK    obligation LABEL decide SEXPR
//   end                      obligation LABEL sample N BOUND SEXPR
//                          end
//
// `extends` copies the parent's axioms and schemas. A morphism without
// obligation lines gets axiom_obligations(source). '#' starts a comment.
TheoryGraph parse_theory_graph(std::string_view text,
                               const TheoryGraph& base = builtin_graph());

struct ReportEntry {
  std::string item;
  bool ok;
  std::string method;
  std::string detail;  // witness on failure, counts on success
};

struct Report {
  std::string subject;
  std::vector<ReportEntry> entries;

  bool ok() const;
  std::size_t failures() const;
  // One line per entry, then a summary line.
  std::string to_text() const;
};

inline constexpr std::uint64_t kDefaultSeed = 20260101;

// Precondition: t is first-order (std::invalid_argument otherwise).
Report check_axioms(const BiformTheory& t, std::size_t samples, const Natural& bound,
                    std::uint64_t seed = kDefaultSeed);

// Obligations are translated through the symbol map; a translated sentence
// that is an axiom of the target is discharged as such, others per policy.
Report check_morphism(const Morphism& m, const TheoryGraph& graph = builtin_graph(),
                      std::uint64_t seed = kDefaultSeed);

struct CandidateFunction {
  std::string name;
  std::string predicate;  // "+-pred" or "*-pred"
  std::function<Natural(const Natural&, const Natural&)> f;
};

// Clauses of +-pred and *-pred for the standard operations on 0..samples,
// and for each candidate: its clauses and pointwise agreement with the
// standard operation.
Report check_definite_description(std::size_t samples,
                                  const std::vector<CandidateFunction>& candidates = {});

}  // namespace biforge

#endif  // BIFORGE_THEORY_GRAPH_HPP_
