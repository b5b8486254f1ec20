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

// Decision procedures for the successor and Presburger languages over the
// naturals, by Cooper-style quantifier elimination.
//
// Pipeline: linearize (surface formula -> linear atoms in negation normal
// form, quantifier structure kept) -> eliminate (innermost quantifier
// first; every eliminated variable carries an implicit `>= 0`) -> evaluate
// the variable-free residue. Divisibility atoms appear only between those
// two ends.

#ifndef BIFORGE_PRESBURGER_HPP_
#define BIFORGE_PRESBURGER_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "biforge/natural.hpp"
#include "biforge/semantics.hpp"
#include "biforge/syntax.hpp"

namespace biforge {

// sum(coefficient * variable) + constant; zero coefficients are never stored.
class LinearTerm {
 public:
  LinearTerm() = default;
  static LinearTerm constant(Integer k);
  static LinearTerm variable(const VarName& v, Integer coefficient = 1);

  const std::map<VarName, Integer>& coefficients() const { return coeffs_; }
  const Integer& constant_part() const { return constant_; }
  Integer coefficient(const VarName& v) const;
  bool is_constant() const { return coeffs_.empty(); }
  bool mentions(const VarName& v) const { return coeffs_.contains(v); }

  LinearTerm operator+(const LinearTerm& other) const;
  LinearTerm operator-(const LinearTerm& other) const;
  LinearTerm operator-() const;
  LinearTerm operator*(const Integer& factor) const;
  LinearTerm operator+(const Integer& k) const;

  // Replaces v by `value`.
  LinearTerm substitute(const VarName& v, const LinearTerm& value) const;

  friend bool operator==(const LinearTerm&, const LinearTerm&) = default;

  std::string to_string() const;

 private:
  std::map<VarName, Integer> coeffs_;
  Integer constant_ = 0;
};

struct LinearAtom {
  enum class Kind : std::uint8_t { kEqZero, kLtZero, kDivides };

  static LinearAtom eq_zero(LinearTerm t);
  static LinearAtom lt_zero(LinearTerm t);
  // Throws std::invalid_argument unless modulus >= 1.
  static LinearAtom divides(Integer modulus, LinearTerm t);

  Kind kind;
  Integer modulus;  // 1 unless kind == kDivides
  LinearTerm term;

  friend bool operator==(const LinearAtom&, const LinearAtom&) = default;
  std::string to_string() const;
};

enum class TruthValue : std::uint8_t { kTrue, kFalse };

// Negation-normal formula over linear atoms, with quantifiers.
class LinFormula {
 public:
  enum class Tag : std::uint8_t { kTrue, kFalse, kAtom, kAnd, kOr, kForall, kExists };

  static LinFormula truth(bool value);
  static LinFormula atom(LinearAtom a);
  // Flatten nested connectives of the same tag; no other simplification.
  static LinFormula conj(std::vector<LinFormula> operands);
  static LinFormula disj(std::vector<LinFormula> operands);
  static LinFormula forall(VarName v, LinFormula body);
  static LinFormula exists(VarName v, LinFormula body);

  Tag tag() const;
  const LinearAtom& atom() const;
  const std::vector<LinFormula>& operands() const;
  const VarName& var() const;
  const LinFormula& body() const;

  bool is_quantifier_free() const;
  bool mentions(const VarName& v) const;
  std::vector<LinearAtom> atoms() const;

  friend bool operator==(const LinFormula& a, const LinFormula& b);
  std::string to_string() const;

 private:
  struct Node;
  explicit LinFormula(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

// Surface formula to linear form. Variables that are free in c are kept as
// variables, or replaced by their value when `ground` is given. Throws
// SortError on a term and LanguageError outside the L2 language.
LinFormula linearize(const Construction& c, const Environment* ground = nullptr);

// Atom normal form plus constant folding of connectives. Quantifiers are
// kept (their bodies are simplified).
LinFormula simplify(const LinFormula& f);

// Negation of a quantifier-free formula, in negation normal form.
LinFormula negate(const LinFormula& qf);

// Quantifier-free formula equivalent over N to (exists v. matrix), with no
// occurrence of v. `matrix` must be quantifier-free.
LinFormula cooper_eliminate(const VarName& v, const LinFormula& matrix);

// Data kept per eliminated quantifier: its variable, the quantifiers
// enclosing it, and its body after the inner quantifiers were eliminated.
struct EliminationRecord {
  VarName var;
  bool universal;
  std::vector<VarName> enclosing;
  LinFormula matrix;
};

// Innermost-first elimination of every quantifier in f. The result is
// quantifier-free and simplified.
LinFormula eliminate(const LinFormula& f,
                     std::vector<EliminationRecord>* records = nullptr);

// Evaluates a quantifier-free formula; unlisted variables read as zero.
bool evaluate(const LinFormula& qf, const Environment& e);

// Smallest bound B <= limit for which bounded evaluation of the sentence the
// records came from is exact: for every quantifier, with its enclosing
// variables ranging over 0..B, past the largest critical point of its
// atoms the body is periodic in the eliminated variable, so a witness (or
// counterexample) exists iff one exists below critical point + period.
std::optional<Natural> sufficiency_bound(
    const std::vector<EliminationRecord>& records, const Natural& limit);

struct Decision {
  TruthValue value;
  // Per-sentence oracle bound computed from the elimination, if <= limit.
  std::optional<Natural> sufficiency_bound;
};

// Presburger arithmetic. Free variables are grounded through e. Throws
// SortError unless c is a formula and LanguageError unless it is in L2.
TruthValue decide_bt6(const Construction& c, const Environment& e = {});
Decision decide_bt6_with_bound(const Construction& c, const Environment& e,
                               const Natural& bound_limit);

// Complete theory of 0 and S, as the L1 fragment of decide_bt6.
// Throws LanguageError unless c is in L1.
TruthValue decide_bt5(const Construction& c, const Environment& e = {});

// Brute force: every quantifier ranges over 0..bound.
bool bounded_oracle(const Construction& c, const Environment& e,
                    const Natural& bound);

}  // namespace biforge

#endif  // BIFORGE_PRESBURGER_HPP_
