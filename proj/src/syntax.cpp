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

#include "biforge/syntax.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "biforge/error.hpp"

namespace biforge {

VarName::VarName(std::string id) : id_(std::move(id)) {
  if (id_.empty()) throw std::invalid_argument("empty variable name");
}

struct Construction::Node {
  Kind kind;
  std::optional<VarName> var;
  std::optional<Construction> children[2];
  // Computed once from the children; nullopt when ill-sorted, with
  // `ill_sorted_at` the kind of the innermost offending parent.
  std::optional<Sorting> sorting;
  Kind ill_sorted_at = Kind::kZero;
};

Construction::Construction(std::shared_ptr<const Node> node)
    : node_(std::move(node)) {}

std::size_t arity(Kind kind) {
  switch (kind) {
    case Kind::kZero:
    case Kind::kVar:
    case Kind::kTrue:
    case Kind::kFalse:
      return 0;
    case Kind::kSucc:
    case Kind::kNot:
    case Kind::kForall:
    case Kind::kExists:
    case Kind::kAbs:
      return 1;
    case Kind::kPlus:
    case Kind::kTimes:
    case Kind::kAnd:
    case Kind::kOr:
    case Kind::kImplies:
    case Kind::kEq:
      return 2;
  }
  return 0;
}

bool is_binder(Kind kind) {
  return kind == Kind::kForall || kind == Kind::kExists || kind == Kind::kAbs;
}

Construction Construction::make(Kind kind, const VarName* v,
                                const Construction* children) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  if (kind == Kind::kVar || biforge::is_binder(kind)) {
    if (v == nullptr) throw std::invalid_argument("variable required");
    node->var = *v;
  }
  for (std::size_t i = 0; i < biforge::arity(kind); ++i) {
    node->children[i] = children[i];
  }
  classify(*node);
  return Construction(std::move(node));
}

void Construction::classify(Node& node) {
  Sorting result = Sorting::kNat;
  Sorting want = Sorting::kNat;
  switch (node.kind) {
    case Kind::kZero:
    case Kind::kVar:
    case Kind::kSucc:
    case Kind::kPlus:
    case Kind::kTimes:
      break;
    case Kind::kTrue:
    case Kind::kFalse:
    case Kind::kNot:
    case Kind::kForall:
    case Kind::kExists:
    case Kind::kAnd:
    case Kind::kOr:
    case Kind::kImplies:
      result = Sorting::kBool;
      want = Sorting::kBool;
      break;
    case Kind::kEq:
      result = Sorting::kBool;
      break;
    case Kind::kAbs:
      result = Sorting::kAbsPred;
      want = Sorting::kBool;
      break;
  }
  for (std::size_t i = 0; i < biforge::arity(node.kind); ++i) {
    const Node& child = *node.children[i]->node_;
    if (!child.sorting) {
      node.ill_sorted_at = child.ill_sorted_at;
      return;
    }
    if (*child.sorting != want) {
      node.ill_sorted_at = node.kind;
      return;
    }
  }
  node.sorting = result;
}

namespace {

Construction leaf(Kind kind) { return Construction::make(kind, nullptr, nullptr); }

Construction unary(Kind kind, Construction arg) {
  return Construction::make(kind, nullptr, &arg);
}

Construction binary(Kind kind, Construction lhs, Construction rhs) {
  const Construction kids[2] = {std::move(lhs), std::move(rhs)};
  return Construction::make(kind, nullptr, kids);
}

}  // namespace

Construction Construction::zero() {
  static const Construction kZero = leaf(Kind::kZero);
  return kZero;
}
Construction Construction::succ(Construction arg) {
  return unary(Kind::kSucc, std::move(arg));
}
Construction Construction::plus(Construction lhs, Construction rhs) {
  return binary(Kind::kPlus, std::move(lhs), std::move(rhs));
}
Construction Construction::times(Construction lhs, Construction rhs) {
  return binary(Kind::kTimes, std::move(lhs), std::move(rhs));
}
Construction Construction::var(VarName v) {
  return make(Kind::kVar, &v, nullptr);
}
Construction Construction::var(std::string_view id) {
  return var(VarName(std::string(id)));
}
Construction Construction::tt() {
  static const Construction kTrue = leaf(Kind::kTrue);
  return kTrue;
}
Construction Construction::ff() {
  static const Construction kFalse = leaf(Kind::kFalse);
  return kFalse;
}
Construction Construction::conj(Construction lhs, Construction rhs) {
  return binary(Kind::kAnd, std::move(lhs), std::move(rhs));
}
Construction Construction::disj(Construction lhs, Construction rhs) {
  return binary(Kind::kOr, std::move(lhs), std::move(rhs));
}
Construction Construction::neg(Construction arg) {
  return unary(Kind::kNot, std::move(arg));
}
Construction Construction::implies(Construction lhs, Construction rhs) {
  return binary(Kind::kImplies, std::move(lhs), std::move(rhs));
}
Construction Construction::eq(Construction lhs, Construction rhs) {
  return binary(Kind::kEq, std::move(lhs), std::move(rhs));
}
Construction Construction::forall(VarName v, Construction body) {
  return make(Kind::kForall, &v, &body);
}
Construction Construction::exists(VarName v, Construction body) {
  return make(Kind::kExists, &v, &body);
}
Construction Construction::abs(VarName v, Construction body) {
  return make(Kind::kAbs, &v, &body);
}

Kind Construction::kind() const { return node_->kind; }

std::size_t Construction::arity() const { return biforge::arity(kind()); }

const Construction& Construction::child(std::size_t i) const {
  if (i >= arity()) throw std::out_of_range("construction child index");
  return *node_->children[i];
}

const VarName& Construction::var_name() const {
  if (!node_->var) throw std::logic_error("node carries no variable");
  return *node_->var;
}

bool Construction::is_binder() const { return biforge::is_binder(kind()); }

bool operator==(const Construction& a, const Construction& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.node_->var != b.node_->var) return false;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!(a.child(i) == b.child(i))) return false;
  }
  return true;
}

namespace {

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::kZero: return "Zero";
    case Kind::kSucc: return "Succ";
    case Kind::kPlus: return "Plus";
    case Kind::kTimes: return "Times";
    case Kind::kVar: return "Var";
    case Kind::kTrue: return "TT";
    case Kind::kFalse: return "FF";
    case Kind::kAnd: return "And";
    case Kind::kOr: return "Or";
    case Kind::kNot: return "Not";
    case Kind::kImplies: return "Implies";
    case Kind::kEq: return "Eq";
    case Kind::kForall: return "Forall";
    case Kind::kExists: return "Exists";
    case Kind::kAbs: return "Abs";
  }
  return "?";
}

}  // namespace

Sorting sort_of(const Construction& c) {
  const Construction::Node& node = *c.node_;
  if (node.sorting) return *node.sorting;
  throw SortError(std::string("ill-sorted argument of ") + kind_name(node.ill_sorted_at));
}

bool has_sort(const Construction& c, Sort expected) {
  try {
    const Sorting s = sort_of(c);
    return expected == Sort::kNat ? s == Sorting::kNat : s == Sorting::kBool;
  } catch (const SortError&) {
    return false;
  }
}

Construction quote_unary(std::size_t n) {
  Construction c = Construction::zero();
  for (std::size_t i = 0; i < n; ++i) c = Construction::succ(std::move(c));
  return c;
}

Construction bnat(const Construction& x, const Construction& y) {
  if (!has_sort(x, Sort::kNat) || !has_sort(y, Sort::kNat)) {
    throw SortError("bnat expects two terms");
  }
  return Construction::plus(Construction::plus(x, x), y);
}

namespace {

void collect_free(const Construction& c, std::vector<VarName>& bound,
                  VarSet& out) {
  if (c.kind() == Kind::kVar) {
    for (const VarName& b : bound) {
      if (b == c.var_name()) return;
    }
    out.insert(c.var_name());
    return;
  }
  if (c.is_binder()) {
    bound.push_back(c.var_name());
    collect_free(c.body(), bound, out);
    bound.pop_back();
    return;
  }
  for (std::size_t i = 0; i < c.arity(); ++i) {
    if (i == 1 && c.child(1).same_node(c.child(0))) break;
    collect_free(c.child(i), bound, out);
  }
}

}  // namespace

VarSet free_vars(const Construction& c) {
  VarSet out;
  std::vector<VarName> bound;
  collect_free(c, bound, out);
  return out;
}

bool is_closed(const Construction& c) { return free_vars(c).empty(); }

bool is_abs(const Construction& c) { return c.kind() == Kind::kAbs; }

const Construction& abs_body(const Construction& c) {
  if (!is_abs(c)) throw NotAnAbstraction("expected a lambda abstraction");
  return c.body();
}

VarName fresh_variable(const VarName& base, const VarSet& avoid) {
  for (std::size_t k = 1;; ++k) {
    VarName candidate(base.id() + std::to_string(k));
    if (!avoid.contains(candidate)) return candidate;
  }
}

namespace {

Construction subst(const Construction& c, const VarName& v,
                   const Construction& t, const VarSet& t_free) {
  if (c.kind() == Kind::kVar) return c.var_name() == v ? t : c;
  if (c.arity() == 0) return c;
  if (c.is_binder()) {
    const VarName& w = c.var_name();
    if (w == v) return c;
    VarSet body_free = free_vars(c.body());
    if (!body_free.contains(v)) return c;
    if (!t_free.contains(w)) {
      Construction body = subst(c.body(), v, t, t_free);
      return Construction::make(c.kind(), &w, &body);
    }
    VarSet avoid = body_free;
    avoid.insert(t_free.begin(), t_free.end());
    const VarName renamed = fresh_variable(w, avoid);
    Construction body = subst(c.body(), w, Construction::var(renamed),
                              VarSet{renamed});
    body = subst(body, v, t, t_free);
    return Construction::make(c.kind(), &renamed, &body);
  }
  Construction first = subst(c.child(0), v, t, t_free);
  if (c.arity() == 1) {
    return first.same_node(c.child(0)) ? c : Construction::make(c.kind(), nullptr, &first);
  }
  Construction second = c.child(1).same_node(c.child(0)) ? first
                                                          : subst(c.child(1), v, t, t_free);
  if (first.same_node(c.child(0)) && second.same_node(c.child(1))) return c;
  const Construction kids[2] = {std::move(first), std::move(second)};
  return Construction::make(c.kind(), nullptr, kids);
}

bool alpha_eq(const Construction& a, const Construction& b,
              std::vector<std::pair<VarName, VarName>>& scope) {
  if (a.kind() != b.kind()) return false;
  if (a.kind() == Kind::kVar) {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
      const bool left = it->first == a.var_name();
      const bool right = it->second == b.var_name();
      if (left || right) return left && right;
    }
    return a.var_name() == b.var_name();
  }
  if (a.is_binder()) {
    scope.emplace_back(a.var_name(), b.var_name());
    const bool same = alpha_eq(a.body(), b.body(), scope);
    scope.pop_back();
    return same;
  }
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!alpha_eq(a.child(i), b.child(i), scope)) return false;
  }
  return true;
}

}  // namespace

Construction substitute(const Construction& c, const VarName& v,
                        const Construction& t) {
  if (!has_sort(t, Sort::kNat)) {
    throw SortError("substitution requires a term");
  }
  return subst(c, v, t, free_vars(t));
}

bool alpha_equivalent(const Construction& a, const Construction& b) {
  std::vector<std::pair<VarName, VarName>> scope;
  return alpha_eq(a, b, scope);
}

Construction universal_closure(const Construction& c) {
  const VarSet fv = free_vars(c);
  Construction out = c;
  for (auto it = fv.rbegin(); it != fv.rend(); ++it) {
    out = Construction::forall(*it, std::move(out));
  }
  return out;
}

std::size_t size(const Construction& c) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < c.arity(); ++i) n += size(c.child(i));
  return n;
}

}  // namespace biforge
