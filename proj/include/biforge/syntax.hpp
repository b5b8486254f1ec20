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

// The universal syntax type. Terms, formulas and unary predicate
// abstractions over the naturals all live in one inductive type, so that
// traversal and substitution are written once; the language recognizers
// recover the per-theory views.

#ifndef BIFORGE_SYNTAX_HPP_
#define BIFORGE_SYNTAX_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace biforge {

enum class Kind : std::uint8_t {
  kZero,
  kSucc,
  kPlus,
  kTimes,
  kVar,
  kTrue,
  kFalse,
  kAnd,
  kOr,
  kNot,
  kImplies,
  kEq,
  kForall,
  kExists,
  kAbs,
};

// Base types of the object language.
enum class Sort : std::uint8_t { kNat, kBool };

// What sort_of reports. Abstractions are classified separately: they denote
// predicates Nat -> Bool and are never a child of another node.
enum class Sorting : std::uint8_t { kNat, kBool, kAbsPred };

class VarName {
 public:
  // Throws std::invalid_argument on an empty identifier.
  explicit VarName(std::string id);

  const std::string& id() const { return id_; }

  friend auto operator<=>(const VarName&, const VarName&) = default;
  friend bool operator==(const VarName&, const VarName&) = default;

 private:
  std::string id_;
};

using VarSet = std::set<VarName>;

// Immutable syntax tree with shared, structurally-compared nodes. Copying a
// Construction copies a pointer.
class Construction {
 public:
  static Construction zero();
  static Construction succ(Construction arg);
  static Construction plus(Construction lhs, Construction rhs);
  static Construction times(Construction lhs, Construction rhs);
  static Construction var(VarName v);
  static Construction var(std::string_view id);
  static Construction tt();
  static Construction ff();
  static Construction conj(Construction lhs, Construction rhs);
  static Construction disj(Construction lhs, Construction rhs);
  static Construction neg(Construction arg);
  static Construction implies(Construction lhs, Construction rhs);
  static Construction eq(Construction lhs, Construction rhs);
  static Construction forall(VarName v, Construction body);
  static Construction exists(VarName v, Construction body);
  static Construction abs(VarName v, Construction body);

  // Generic rebuild used by traversals: same kind and variable, new
  // children. `children` must have exactly arity(kind) meaningful entries.
  static Construction make(Kind kind, const VarName* v,
                           const Construction* children);

  Kind kind() const;
  std::size_t arity() const;
  const Construction& child(std::size_t i) const;
  const Construction& lhs() const { return child(0); }
  const Construction& rhs() const { return child(1); }
  const Construction& arg() const { return child(0); }
  const Construction& body() const { return child(0); }
  // Bound or referenced variable of Var, Forall, Exists and Abs nodes.
  const VarName& var_name() const;

  bool is_binder() const;

  // Pointer identity, which implies structural equality. Numerals share
  // the doubled operand of bnat, so traversals use this to stay linear.
  bool same_node(const Construction& other) const { return node_ == other.node_; }

  friend bool operator==(const Construction& a, const Construction& b);
  friend Sorting sort_of(const Construction& c);

 private:
  struct Node;
  explicit Construction(std::shared_ptr<const Node> node);
  static void classify(Node& node);

  std::shared_ptr<const Node> node_;
};

std::size_t arity(Kind kind);
bool is_binder(Kind kind);

// Throws SortError if any child violates well-sortedness. O(1): the sort
// is computed when a node is built.
Sorting sort_of(const Construction& c);

// True iff sort_of succeeds and yields `expected`.
bool has_sort(const Construction& c, Sort expected);

// Succ applied n times to Zero.
Construction quote_unary(std::size_t n);

// Expansion of the defined constant bnat: (x + x) + y.
// Throws SortError unless both arguments are terms.
Construction bnat(const Construction& x, const Construction& y);

VarSet free_vars(const Construction& c);
bool is_closed(const Construction& c);

bool is_abs(const Construction& c);
// Throws NotAnAbstraction unless is_abs(c).
const Construction& abs_body(const Construction& c);

// Capture-avoiding replacement of the free occurrences of v in c by t.
// Binders whose variable is free in t are renamed (see fresh_variable)
// before descending. Throws SortError unless t is a term.
Construction substitute(const Construction& c, const VarName& v,
                        const Construction& t);

// `base` with the smallest numeric suffix 1, 2, ... that is not in `avoid`.
VarName fresh_variable(const VarName& base, const VarSet& avoid);

// Equality up to consistent renaming of bound variables.
bool alpha_equivalent(const Construction& a, const Construction& b);

// Universal closure over free_vars(c) in identifier order, outermost first.
Construction universal_closure(const Construction& c);

// Number of nodes; handy for generators and test diagnostics.
std::size_t size(const Construction& c);

}  // namespace biforge

#endif  // BIFORGE_SYNTAX_HPP_
