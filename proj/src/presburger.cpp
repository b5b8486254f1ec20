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

#include "biforge/presburger.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

#include "biforge/error.hpp"
#include "biforge/recognizers.hpp"

namespace biforge {

namespace {

Integer abs_value(const Integer& a) { return a < 0 ? Integer(-a) : a; }

Integer gcd(Integer a, Integer b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != 0) {
    Integer r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs_value(a / gcd(a, b) * b);
}

// Requires d > 0.
Integer floor_div(const Integer& a, const Integer& d) {
  Integer q = a / d;
  if (a % d != 0 && a < 0) q -= 1;
  return q;
}

Integer mod_pos(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// LinearTerm

LinearTerm LinearTerm::constant(Integer k) {
  LinearTerm t;
  t.constant_ = std::move(k);
  return t;
}

LinearTerm LinearTerm::variable(const VarName& v, Integer coefficient) {
  LinearTerm t;
  if (coefficient != 0) t.coeffs_.emplace(v, std::move(coefficient));
  return t;
}

Integer LinearTerm::coefficient(const VarName& v) const {
  auto it = coeffs_.find(v);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

LinearTerm LinearTerm::operator+(const LinearTerm& other) const {
  LinearTerm out = *this;
  for (const auto& [v, a] : other.coeffs_) {
    Integer& slot = out.coeffs_[v];
    slot += a;
    if (slot == 0) out.coeffs_.erase(v);
  }
  out.constant_ += other.constant_;
  return out;
}

LinearTerm LinearTerm::operator-() const { return *this * Integer(-1); }

LinearTerm LinearTerm::operator-(const LinearTerm& other) const {
  return *this + (-other);
}

LinearTerm LinearTerm::operator*(const Integer& factor) const {
  if (factor == 0) return LinearTerm();
  LinearTerm out = *this;
  for (auto& [v, a] : out.coeffs_) a *= factor;
  out.constant_ *= factor;
  return out;
}

LinearTerm LinearTerm::operator+(const Integer& k) const {
  LinearTerm out = *this;
  out.constant_ += k;
  return out;
}

LinearTerm LinearTerm::substitute(const VarName& v, const LinearTerm& value) const {
  auto it = coeffs_.find(v);
  if (it == coeffs_.end()) return *this;
  const Integer c = it->second;
  LinearTerm rest = *this;
  rest.coeffs_.erase(v);
  return rest + value * c;
}

std::string LinearTerm::to_string() const {
  std::string out;
  auto append = [&out](const Integer& a, const std::string& name) {
    if (out.empty()) {
      if (a < 0) out += "-";
    } else {
      out += a < 0 ? " - " : " + ";
    }
    const Integer mag = abs_value(a);
    if (name.empty()) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + "*";
      out += name;
    }
  };
  for (const auto& [v, a] : coeffs_) append(a, v.id());
  if (constant_ != 0 || out.empty()) {
    if (out.empty() && constant_ == 0) return "0";
    append(constant_, "");
  }
  return out;
}

// ---------------------------------------------------------------------------
// LinearAtom

LinearAtom LinearAtom::eq_zero(LinearTerm t) {
  return LinearAtom{Kind::kEqZero, 1, std::move(t)};
}

LinearAtom LinearAtom::lt_zero(LinearTerm t) {
  return LinearAtom{Kind::kLtZero, 1, std::move(t)};
}

LinearAtom LinearAtom::divides(Integer modulus, LinearTerm t) {
  if (modulus < 1) throw std::invalid_argument("divisibility modulus must be >= 1");
  return LinearAtom{Kind::kDivides, std::move(modulus), std::move(t)};
}

std::string LinearAtom::to_string() const {
  switch (kind) {
    case Kind::kEqZero:
      return "(" + term.to_string() + " = 0)";
    case Kind::kLtZero:
      return "(" + term.to_string() + " < 0)";
    case Kind::kDivides:
      return "(" + modulus.str() + " | " + term.to_string() + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// LinFormula

struct LinFormula::Node {
  Tag tag;
  std::optional<LinearAtom> atom;
  std::vector<LinFormula> operands;  // connectives; quantifier body at [0]
  std::optional<VarName> var;
};

LinFormula::LinFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

LinFormula LinFormula::truth(bool value) {
  static const LinFormula kTrue(
      std::make_shared<const Node>(Node{Tag::kTrue, std::nullopt, {}, std::nullopt}));
  static const LinFormula kFalse(
      std::make_shared<const Node>(Node{Tag::kFalse, std::nullopt, {}, std::nullopt}));
  return value ? kTrue : kFalse;
}

LinFormula LinFormula::atom(LinearAtom a) {
  return LinFormula(
      std::make_shared<const Node>(Node{Tag::kAtom, std::move(a), {}, std::nullopt}));
}

namespace {

std::vector<LinFormula> flatten(std::vector<LinFormula> operands, LinFormula::Tag tag) {
  std::vector<LinFormula> out;
  out.reserve(operands.size());
  for (LinFormula& f : operands) {
    if (f.tag() == tag) {
      for (const LinFormula& g : f.operands()) out.push_back(g);
    } else {
      out.push_back(std::move(f));
    }
  }
  return out;
}

}  // namespace

LinFormula LinFormula::conj(std::vector<LinFormula> operands) {
  operands = flatten(std::move(operands), Tag::kAnd);
  if (operands.empty()) return truth(true);
  if (operands.size() == 1) return operands.front();
  return LinFormula(std::make_shared<const Node>(
      Node{Tag::kAnd, std::nullopt, std::move(operands), std::nullopt}));
}

LinFormula LinFormula::disj(std::vector<LinFormula> operands) {
  operands = flatten(std::move(operands), Tag::kOr);
  if (operands.empty()) return truth(false);
  if (operands.size() == 1) return operands.front();
  return LinFormula(std::make_shared<const Node>(
      Node{Tag::kOr, std::nullopt, std::move(operands), std::nullopt}));
}

LinFormula LinFormula::forall(VarName v, LinFormula body) {
  return LinFormula(std::make_shared<const Node>(
      Node{Tag::kForall, std::nullopt, {std::move(body)}, std::move(v)}));
}

LinFormula LinFormula::exists(VarName v, LinFormula body) {
  return LinFormula(std::make_shared<const Node>(
      Node{Tag::kExists, std::nullopt, {std::move(body)}, std::move(v)}));
}

LinFormula::Tag LinFormula::tag() const { return node_->tag; }

const LinearAtom& LinFormula::atom() const {
  if (!node_->atom) throw std::logic_error("not an atom");
  return *node_->atom;
}

const std::vector<LinFormula>& LinFormula::operands() const { return node_->operands; }

const VarName& LinFormula::var() const {
  if (!node_->var) throw std::logic_error("not a quantifier");
  return *node_->var;
}

const LinFormula& LinFormula::body() const {
  if (!node_->var) throw std::logic_error("not a quantifier");
  return node_->operands.front();
}

bool LinFormula::is_quantifier_free() const {
  if (tag() == Tag::kForall || tag() == Tag::kExists) return false;
  return std::all_of(operands().begin(), operands().end(),
                     [](const LinFormula& f) { return f.is_quantifier_free(); });
}

bool LinFormula::mentions(const VarName& v) const {
  if (tag() == Tag::kAtom) return atom().term.mentions(v);
  return std::any_of(operands().begin(), operands().end(),
                     [&v](const LinFormula& f) { return f.mentions(v); });
}

std::vector<LinearAtom> LinFormula::atoms() const {
  std::vector<LinearAtom> out;
  std::function<void(const LinFormula&)> walk = [&](const LinFormula& f) {
    if (f.tag() == Tag::kAtom) {
      out.push_back(f.atom());
      return;
    }
    for (const LinFormula& g : f.operands()) walk(g);
  };
  walk(*this);
  return out;
}

bool operator==(const LinFormula& a, const LinFormula& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->tag == b.node_->tag && a.node_->atom == b.node_->atom &&
         a.node_->var == b.node_->var && a.node_->operands == b.node_->operands;
}

std::string LinFormula::to_string() const {
  switch (tag()) {
    case Tag::kTrue:
      return "tt";
    case Tag::kFalse:
      return "ff";
    case Tag::kAtom:
      return atom().to_string();
    case Tag::kAnd:
    case Tag::kOr: {
      std::string out = tag() == Tag::kAnd ? "(and" : "(or";
      for (const LinFormula& f : operands()) out += " " + f.to_string();
      return out + ")";
    }
    case Tag::kForall:
      return "(forall " + var().id() + " " + body().to_string() + ")";
    case Tag::kExists:
      return "(exists " + var().id() + " " + body().to_string() + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Linearization

namespace {

class Linearizer {
 public:
  explicit Linearizer(const Environment* ground) : ground_(ground) {}

  LinearTerm term(const Construction& c) {
    switch (c.kind()) {
      case Kind::kZero:
        return LinearTerm();
      case Kind::kSucc:
        return term(c.arg()) + Integer(1);
      case Kind::kPlus: {
        LinearTerm lhs = term(c.lhs());
        if (c.rhs().same_node(c.lhs())) return lhs * Integer(2);
        return lhs + term(c.rhs());
      }
      case Kind::kVar:
        if (ground_ != nullptr && !is_bound(c.var_name())) {
          return LinearTerm::constant(ground_->lookup(c.var_name()));
        }
        return LinearTerm::variable(c.var_name());
      default:
        throw LanguageError("term outside the language of 0, S and +");
    }
  }

  // Negation normal form; `negated` is the polarity of the context.
  LinFormula formula(const Construction& c, bool negated) {
    switch (c.kind()) {
      case Kind::kTrue:
        return LinFormula::truth(!negated);
      case Kind::kFalse:
        return LinFormula::truth(negated);
      case Kind::kNot:
        return formula(c.arg(), !negated);
      case Kind::kAnd:
      case Kind::kOr: {
        std::vector<LinFormula> parts{formula(c.lhs(), negated), formula(c.rhs(), negated)};
        const bool conjunctive = (c.kind() == Kind::kAnd) != negated;
        return conjunctive ? LinFormula::conj(std::move(parts))
                           : LinFormula::disj(std::move(parts));
      }
      case Kind::kImplies: {
        std::vector<LinFormula> parts{formula(c.lhs(), !negated), formula(c.rhs(), negated)};
        return negated ? LinFormula::conj(std::move(parts))
                       : LinFormula::disj(std::move(parts));
      }
      case Kind::kEq: {
        LinearTerm d = term(c.lhs()) - term(c.rhs());
        if (!negated) return LinFormula::atom(LinearAtom::eq_zero(std::move(d)));
        return LinFormula::disj({LinFormula::atom(LinearAtom::lt_zero(d)),
                                 LinFormula::atom(LinearAtom::lt_zero(-d))});
      }
      case Kind::kForall:
      case Kind::kExists: {
        bound_.push_back(c.var_name());
        LinFormula body = formula(c.body(), negated);
        bound_.pop_back();
        const bool universal = (c.kind() == Kind::kForall) != negated;
        return universal ? LinFormula::forall(c.var_name(), std::move(body))
                         : LinFormula::exists(c.var_name(), std::move(body));
      }
      default:
        throw SortError("expected a formula");
    }
  }

 private:
  bool is_bound(const VarName& v) const {
    return std::find(bound_.begin(), bound_.end(), v) != bound_.end();
  }

  const Environment* ground_;
  std::vector<VarName> bound_;
};

}  // namespace

LinFormula linearize(const Construction& c, const Environment* ground) {
  if (sort_of(c) != Sorting::kBool) throw SortError("expected a formula");
  if (!is_fo(LangLevel::kL2, c)) {
    throw LanguageError("formula outside the language of 0, S and +");
  }
  return Linearizer(ground).formula(c, false);
}

// ---------------------------------------------------------------------------
// Simplification

namespace {

LinFormula normalize_atom(const LinearAtom& a) {
  const LinearTerm& t = a.term;
  switch (a.kind) {
    case LinearAtom::Kind::kEqZero: {
      if (t.is_constant()) return LinFormula::truth(t.constant_part() == 0);
      Integer g = 0;
      for (const auto& [v, c] : t.coefficients()) g = gcd(g, c);
      if (t.constant_part() % g != 0) return LinFormula::truth(false);
      LinearTerm out;
      const bool flip = t.coefficients().begin()->second < 0;
      for (const auto& [v, c] : t.coefficients()) {
        out = out + LinearTerm::variable(v, flip ? Integer(-c / g) : Integer(c / g));
      }
      out = out + Integer(flip ? Integer(-t.constant_part() / g) : Integer(t.constant_part() / g));
      return LinFormula::atom(LinearAtom::eq_zero(std::move(out)));
    }
    case LinearAtom::Kind::kLtZero: {
      if (t.is_constant()) return LinFormula::truth(t.constant_part() < 0);
      Integer g = 0;
      for (const auto& [v, c] : t.coefficients()) g = gcd(g, c);
      LinearTerm out;
      for (const auto& [v, c] : t.coefficients()) {
        out = out + LinearTerm::variable(v, c / g);
      }
      out = out + floor_div(t.constant_part(), g);
      return LinFormula::atom(LinearAtom::lt_zero(std::move(out)));
    }
    case LinearAtom::Kind::kDivides: {
      const Integer& d = a.modulus;
      LinearTerm reduced;
      Integer g = d;
      for (const auto& [v, c] : t.coefficients()) {
        Integer r = mod_pos(c, d);
        g = gcd(g, r);
        reduced = reduced + LinearTerm::variable(v, r);
      }
      const Integer k = mod_pos(t.constant_part(), d);
      g = gcd(g, k);
      if (reduced.is_constant()) return LinFormula::truth(k == 0);
      if (g == d) return LinFormula::truth(true);
      LinearTerm out;
      for (const auto& [v, c] : reduced.coefficients()) {
        out = out + LinearTerm::variable(v, c / g);
      }
      out = out + Integer(k / g);
      return LinFormula::atom(LinearAtom::divides(d / g, std::move(out)));
    }
  }
  return LinFormula::atom(a);
}

void push_unique(std::vector<LinFormula>& out, LinFormula f) {
  if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(std::move(f));
}

bool same_linear_part(const LinearTerm& a, const LinearTerm& b) {
  return a.coefficients() == b.coefficients();
}

bool opposite_linear_part(const LinearTerm& a, const LinearTerm& b) {
  if (a.coefficients().size() != b.coefficients().size()) return false;
  for (const auto& [v, c] : a.coefficients()) {
    if (b.coefficient(v) != -c) return false;
  }
  return true;
}

// Merges bound atoms over a common linear part p. In a conjunction
// p + k1 < 0 and p + k2 < 0 keep the larger constant, and
// p + k1 < 0 with -p + k2 < 0 is empty when k1 + k2 + 1 >= 0; a
// disjunction is dual. Returns true when `kept` collapses to the absorbing
// element.
bool refine_bounds(std::vector<LinFormula>& kept, bool conjunctive) {
  std::vector<LinFormula> out;
  for (const LinFormula& f : kept) {
    if (f.tag() != LinFormula::Tag::kAtom) {
      out.push_back(f);
      continue;
    }
    const LinearAtom& a = f.atom();
    bool merged = false;
    for (LinFormula& g : out) {
      if (g.tag() != LinFormula::Tag::kAtom || g.atom().kind != a.kind) continue;
      const LinearAtom& b = g.atom();
      if (a.kind == LinearAtom::Kind::kEqZero) {
        if (conjunctive && same_linear_part(a.term, b.term) &&
            a.term.constant_part() != b.term.constant_part()) {
          return true;
        }
        continue;
      }
      if (a.kind != LinearAtom::Kind::kLtZero) continue;
      const Integer& ka = a.term.constant_part();
      const Integer& kb = b.term.constant_part();
      if (same_linear_part(a.term, b.term)) {
        if (conjunctive ? ka > kb : ka < kb) g = f;
        merged = true;
        break;
      }
      if (opposite_linear_part(a.term, b.term)) {
        if (conjunctive && ka + kb + 1 >= 0) return true;
        if (!conjunctive && ka + kb < 0) return true;
      }
    }
    if (!merged) out.push_back(f);
  }
  kept = std::move(out);
  return false;
}

// Folds constants of an already-simplified operand list.
LinFormula combine(LinFormula::Tag tag, const std::vector<LinFormula>& parts) {
  const bool conjunctive = tag == LinFormula::Tag::kAnd;
  const LinFormula::Tag absorbing =
      conjunctive ? LinFormula::Tag::kFalse : LinFormula::Tag::kTrue;
  const LinFormula::Tag neutral =
      conjunctive ? LinFormula::Tag::kTrue : LinFormula::Tag::kFalse;
  std::vector<LinFormula> kept;
  for (const LinFormula& p : parts) {
    if (p.tag() == absorbing) return p;
    if (p.tag() == neutral) continue;
    if (p.tag() == tag) {
      for (const LinFormula& q : p.operands()) push_unique(kept, q);
    } else {
      push_unique(kept, p);
    }
  }
  if (refine_bounds(kept, conjunctive)) return LinFormula::truth(!conjunctive);
  return conjunctive ? LinFormula::conj(std::move(kept)) : LinFormula::disj(std::move(kept));
}

// Rebuilds a quantifier-free formula, mapping each atom through `fn`.
LinFormula map_atoms(const LinFormula& f,
                     const std::function<LinFormula(const LinearAtom&)>& fn) {
  switch (f.tag()) {
    case LinFormula::Tag::kTrue:
    case LinFormula::Tag::kFalse:
      return f;
    case LinFormula::Tag::kAtom:
      return fn(f.atom());
    case LinFormula::Tag::kAnd:
    case LinFormula::Tag::kOr: {
      const LinFormula::Tag absorbing =
          f.tag() == LinFormula::Tag::kAnd ? LinFormula::Tag::kFalse : LinFormula::Tag::kTrue;
      std::vector<LinFormula> parts;
      parts.reserve(f.operands().size());
      for (const LinFormula& g : f.operands()) {
        parts.push_back(map_atoms(g, fn));
        if (parts.back().tag() == absorbing) return parts.back();
      }
      return combine(f.tag(), parts);
    }
    default:
      throw std::logic_error("map_atoms on a quantified formula");
  }
}

}  // namespace

LinFormula simplify(const LinFormula& f) {
  switch (f.tag()) {
    case LinFormula::Tag::kTrue:
    case LinFormula::Tag::kFalse:
      return f;
    case LinFormula::Tag::kAtom:
      return normalize_atom(f.atom());
    case LinFormula::Tag::kAnd:
    case LinFormula::Tag::kOr: {
      std::vector<LinFormula> parts;
      parts.reserve(f.operands().size());
      for (const LinFormula& g : f.operands()) parts.push_back(simplify(g));
      return combine(f.tag(), parts);
    }
    case LinFormula::Tag::kForall:
    case LinFormula::Tag::kExists: {
      LinFormula body = simplify(f.body());
      // The domain is non-empty, so a vacuous quantifier can be dropped.
      if (!body.mentions(f.var())) return body;
      return f.tag() == LinFormula::Tag::kForall
                 ? LinFormula::forall(f.var(), std::move(body))
                 : LinFormula::exists(f.var(), std::move(body));
    }
  }
  return f;
}

LinFormula negate(const LinFormula& qf) {
  switch (qf.tag()) {
    case LinFormula::Tag::kTrue:
      return LinFormula::truth(false);
    case LinFormula::Tag::kFalse:
      return LinFormula::truth(true);
    case LinFormula::Tag::kAtom: {
      const LinearAtom& a = qf.atom();
      switch (a.kind) {
        case LinearAtom::Kind::kEqZero:
          return LinFormula::disj({LinFormula::atom(LinearAtom::lt_zero(a.term)),
                                   LinFormula::atom(LinearAtom::lt_zero(-a.term))});
        case LinearAtom::Kind::kLtZero:
          // not (t < 0)  <=>  -t - 1 < 0 over the integers
          return LinFormula::atom(LinearAtom::lt_zero(-a.term + Integer(-1)));
        case LinearAtom::Kind::kDivides: {
          std::vector<LinFormula> residues;
          for (Integer r = 1; r < a.modulus; ++r) {
            residues.push_back(
                LinFormula::atom(LinearAtom::divides(a.modulus, a.term + Integer(-r))));
          }
          return LinFormula::disj(std::move(residues));
        }
      }
      break;
    }
    case LinFormula::Tag::kAnd:
    case LinFormula::Tag::kOr: {
      std::vector<LinFormula> parts;
      for (const LinFormula& g : qf.operands()) parts.push_back(negate(g));
      return qf.tag() == LinFormula::Tag::kAnd ? LinFormula::disj(std::move(parts))
                                               : LinFormula::conj(std::move(parts));
    }
    default:
      break;
  }
  throw std::logic_error("negate expects a quantifier-free formula");
}

// ---------------------------------------------------------------------------
// Elimination

namespace {

LinFormula substitute_var(const LinFormula& f, const VarName& v, const LinearTerm& value) {
  return map_atoms(f, [&](const LinearAtom& a) {
    LinearAtom out = a;
    out.term = a.term.substitute(v, value);
    return normalize_atom(out);
  });
}

}  // namespace

namespace {

// Cooper's construction for one formula, v >= 0 added.
LinFormula cooper_core(const VarName& v, const LinFormula& matrix) {
  // v ranges over the naturals: -v - 1 < 0.
  const LinFormula phi = simplify(LinFormula::conj(
      {matrix,
       LinFormula::atom(LinearAtom::lt_zero(LinearTerm::variable(v, -1) + Integer(-1)))}));
  if (!phi.mentions(v)) return phi;

  Integer scale = 1;
  for (const LinearAtom& a : phi.atoms()) {
    const Integer c = a.term.coefficient(v);
    if (c != 0) scale = lcm(scale, c);
  }

  // Scale every atom so v has coefficient +-scale, then read scale*v as v.
  LinFormula unit = map_atoms(phi, [&](const LinearAtom& a) {
    const Integer c = a.term.coefficient(v);
    if (c == 0) return LinFormula::atom(a);
    const Integer m = scale / abs_value(c);
    LinearTerm rest = a.term.substitute(v, LinearTerm()) * m;
    LinearTerm t = rest + LinearTerm::variable(v, c < 0 ? -1 : 1);
    switch (a.kind) {
      case LinearAtom::Kind::kEqZero:
        return LinFormula::atom(LinearAtom::eq_zero(std::move(t)));
      case LinearAtom::Kind::kLtZero:
        return LinFormula::atom(LinearAtom::lt_zero(std::move(t)));
      case LinearAtom::Kind::kDivides:
        return LinFormula::atom(LinearAtom::divides(a.modulus * m, std::move(t)));
    }
    return LinFormula::atom(a);
  });
  if (scale > 1) {
    unit = LinFormula::conj(
        {unit, LinFormula::atom(LinearAtom::divides(scale, LinearTerm::variable(v)))});
  }

  // A top-level equality fixes v outright.
  const std::vector<LinFormula> top =
      unit.tag() == LinFormula::Tag::kAnd ? unit.operands() : std::vector<LinFormula>{unit};
  for (const LinFormula& f : top) {
    if (f.tag() != LinFormula::Tag::kAtom || f.atom().kind != LinearAtom::Kind::kEqZero) continue;
    const Integer c = f.atom().term.coefficient(v);
    if (c == 0) continue;
    return substitute_var(unit, v, f.atom().term.substitute(v, LinearTerm()) * Integer(-c));
  }

  // Candidate points from lower bounds (B) and upper bounds (A).
  std::vector<LinearTerm> lower, upper;
  auto add_unique = [](std::vector<LinearTerm>& set, LinearTerm t) {
    if (std::find(set.begin(), set.end(), t) == set.end()) set.push_back(std::move(t));
  };
  Integer period = 1;
  for (const LinearAtom& a : unit.atoms()) {
    const Integer c = a.term.coefficient(v);
    if (c == 0) continue;
    const LinearTerm rest = a.term.substitute(v, LinearTerm());
    switch (a.kind) {
      case LinearAtom::Kind::kEqZero: {
        // v = e with e = -c * rest
        const LinearTerm e = rest * Integer(-c);
        add_unique(lower, e + Integer(-1));
        add_unique(upper, e + Integer(1));
        break;
      }
      case LinearAtom::Kind::kLtZero:
        if (c > 0) {
          add_unique(upper, -rest);  // v < -rest
        } else {
          add_unique(lower, rest);  // v > rest
        }
        break;
      case LinearAtom::Kind::kDivides:
        period = lcm(period, a.modulus);
        break;
    }
  }

  const bool from_below = lower.size() <= upper.size();
  // The formula at v -> -infinity (from below) or +infinity (from above).
  const LinFormula at_infinity = map_atoms(unit, [&](const LinearAtom& a) {
    const Integer c = a.term.coefficient(v);
    if (c == 0 || a.kind == LinearAtom::Kind::kDivides) return LinFormula::atom(a);
    if (a.kind == LinearAtom::Kind::kEqZero) return LinFormula::truth(false);
    const bool upper_bound = c > 0;
    return LinFormula::truth(from_below ? upper_bound : !upper_bound);
  });

  std::vector<LinFormula> disjuncts;
  for (Integer j = 1; j <= period; ++j) {
    const Integer offset = from_below ? j : Integer(-j);
    disjuncts.push_back(substitute_var(at_infinity, v, LinearTerm::constant(offset)));
    if (disjuncts.back().tag() == LinFormula::Tag::kTrue) return disjuncts.back();
    for (const LinearTerm& point : from_below ? lower : upper) {
      disjuncts.push_back(substitute_var(unit, v, point + offset));
      if (disjuncts.back().tag() == LinFormula::Tag::kTrue) return disjuncts.back();
    }
  }
  return combine(LinFormula::Tag::kOr, disjuncts);
}

constexpr std::size_t kDnfLimit = 256;

using Conjunctions = std::vector<std::vector<LinFormula>>;

// Disjunctive normal form, or nullopt past kDnfLimit conjunctions.
std::optional<Conjunctions> to_dnf(const LinFormula& f) {
  switch (f.tag()) {
    case LinFormula::Tag::kTrue:
      return Conjunctions{{}};
    case LinFormula::Tag::kFalse:
      return Conjunctions{};
    case LinFormula::Tag::kAtom:
      return Conjunctions{{f}};
    case LinFormula::Tag::kOr: {
      Conjunctions out;
      for (const LinFormula& g : f.operands()) {
        auto part = to_dnf(g);
        if (!part || out.size() + part->size() > kDnfLimit) return std::nullopt;
        out.insert(out.end(), part->begin(), part->end());
      }
      return out;
    }
    case LinFormula::Tag::kAnd: {
      Conjunctions out{{}};
      for (const LinFormula& g : f.operands()) {
        auto part = to_dnf(g);
        if (!part || out.size() * part->size() > kDnfLimit) return std::nullopt;
        Conjunctions next;
        for (const auto& a : out) {
          for (const auto& b : *part) {
            std::vector<LinFormula> c = a;
            c.insert(c.end(), b.begin(), b.end());
            next.push_back(std::move(c));
          }
        }
        out = std::move(next);
      }
      return out;
    }
    default:
      return std::nullopt;
  }
}

}  // namespace

LinFormula cooper_eliminate(const VarName& v, const LinFormula& matrix) {
  if (!matrix.is_quantifier_free()) {
    throw std::invalid_argument("cooper_eliminate expects a quantifier-free matrix");
  }
  const LinFormula phi = simplify(matrix);
  if (!phi.mentions(v)) return phi;
  if (phi.tag() == LinFormula::Tag::kOr) {
    std::vector<LinFormula> parts;
    for (const LinFormula& d : phi.operands()) {
      parts.push_back(cooper_eliminate(v, d));
      if (parts.back().tag() == LinFormula::Tag::kTrue) return parts.back();
    }
    return combine(LinFormula::Tag::kOr, parts);
  }
  // Conjuncts free of v move outside the quantifier.
  std::vector<LinFormula> outside, inside;
  for (const LinFormula& f :
       phi.tag() == LinFormula::Tag::kAnd ? phi.operands() : std::vector<LinFormula>{phi}) {
    (f.mentions(v) ? inside : outside).push_back(f);
  }
  const LinFormula scope = LinFormula::conj(inside);
  std::vector<LinFormula> parts;
  if (auto dnf = to_dnf(scope); dnf && dnf->size() > 1) {
    for (const auto& conjunction : *dnf) {
      parts.push_back(cooper_core(v, LinFormula::conj(conjunction)));
      if (parts.back().tag() == LinFormula::Tag::kTrue) break;
    }
  } else {
    parts.push_back(cooper_core(v, scope));
  }
  outside.push_back(combine(LinFormula::Tag::kOr, parts));
  return combine(LinFormula::Tag::kAnd, outside);
}

namespace {

LinFormula eliminate_rec(const LinFormula& f, std::vector<VarName>& enclosing,
                         std::vector<EliminationRecord>* records) {
  switch (f.tag()) {
    case LinFormula::Tag::kTrue:
    case LinFormula::Tag::kFalse:
    case LinFormula::Tag::kAtom:
      return simplify(f);
    case LinFormula::Tag::kAnd:
    case LinFormula::Tag::kOr: {
      std::vector<LinFormula> parts;
      for (const LinFormula& g : f.operands()) {
        parts.push_back(eliminate_rec(g, enclosing, records));
      }
      return combine(f.tag(), parts);
    }
    case LinFormula::Tag::kForall:
    case LinFormula::Tag::kExists: {
      const bool universal = f.tag() == LinFormula::Tag::kForall;
      enclosing.push_back(f.var());
      LinFormula inner = eliminate_rec(f.body(), enclosing, records);
      enclosing.pop_back();
      if (records != nullptr) {
        records->push_back(EliminationRecord{f.var(), universal, enclosing, inner});
      }
      if (universal) return simplify(negate(cooper_eliminate(f.var(), negate(inner))));
      return cooper_eliminate(f.var(), inner);
    }
  }
  return f;
}

}  // namespace

LinFormula eliminate(const LinFormula& f, std::vector<EliminationRecord>* records) {
  std::vector<VarName> enclosing;
  return eliminate_rec(f, enclosing, records);
}

bool evaluate(const LinFormula& qf, const Environment& e) {
  switch (qf.tag()) {
    case LinFormula::Tag::kTrue:
      return true;
    case LinFormula::Tag::kFalse:
      return false;
    case LinFormula::Tag::kAtom: {
      const LinearAtom& a = qf.atom();
      Integer value = a.term.constant_part();
      for (const auto& [v, c] : a.term.coefficients()) value += c * e.lookup(v);
      switch (a.kind) {
        case LinearAtom::Kind::kEqZero:
          return value == 0;
        case LinearAtom::Kind::kLtZero:
          return value < 0;
        case LinearAtom::Kind::kDivides:
          return mod_pos(value, a.modulus) == 0;
      }
      return false;
    }
    case LinFormula::Tag::kAnd:
      return std::all_of(qf.operands().begin(), qf.operands().end(),
                         [&e](const LinFormula& g) { return evaluate(g, e); });
    case LinFormula::Tag::kOr:
      return std::any_of(qf.operands().begin(), qf.operands().end(),
                         [&e](const LinFormula& g) { return evaluate(g, e); });
    default:
      throw std::logic_error("evaluate expects a quantifier-free formula");
  }
}

// ---------------------------------------------------------------------------
// Oracle bounds

namespace {

// Linear constraint on B: critical(B) + period <= B for one quantifier,
// where critical(B) = max(-1, max over atoms of floor((slope*B + offset) / c)).
struct Critical {
  Integer slope;
  Integer offset;
  Integer divisor;
};

struct QuantifierShape {
  std::vector<Critical> criticals;
  Integer period = 1;
};

std::optional<QuantifierShape> shape_of(const EliminationRecord& r) {
  QuantifierShape shape;
  for (const LinearAtom& a : r.matrix.atoms()) {
    const Integer c = a.term.coefficient(r.var);
    if (c == 0) continue;
    if (a.kind == LinearAtom::Kind::kDivides) {
      shape.period = lcm(shape.period, a.modulus);
      continue;
    }
    // Critical point -(sum a_j x_j + k) / c, maximized over x_j in 0..B.
    const int sign = c > 0 ? 1 : -1;
    Critical crit{0, -sign * a.term.constant_part(), abs_value(c)};
    for (const auto& [w, coeff] : a.term.coefficients()) {
      if (w == r.var) continue;
      if (std::find(r.enclosing.begin(), r.enclosing.end(), w) == r.enclosing.end()) {
        return std::nullopt;  // a free variable was not grounded
      }
      if (-sign * coeff > 0) crit.slope += abs_value(coeff);
    }
    shape.criticals.push_back(std::move(crit));
  }
  return shape;
}

}  // namespace

std::optional<Natural> sufficiency_bound(const std::vector<EliminationRecord>& records,
                                         const Natural& limit) {
  std::vector<QuantifierShape> shapes;
  for (const EliminationRecord& r : records) {
    auto shape = shape_of(r);
    if (!shape) return std::nullopt;
    shapes.push_back(std::move(*shape));
  }
  for (Natural bound = 0; bound <= limit; ++bound) {
    const bool exact = std::all_of(shapes.begin(), shapes.end(), [&](const QuantifierShape& s) {
      Integer critical = -1;
      for (const Critical& c : s.criticals) {
        critical = std::max(critical, floor_div(c.slope * bound + c.offset, c.divisor));
      }
      return critical + s.period <= bound;
    });
    if (exact) return bound;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Decision procedures

Decision decide_bt6_with_bound(const Construction& c, const Environment& e,
                               const Natural& bound_limit) {
  const LinFormula lin = linearize(c, &e);
  std::vector<EliminationRecord> records;
  const LinFormula residue = eliminate(lin, &records);
  if (residue.tag() != LinFormula::Tag::kTrue && residue.tag() != LinFormula::Tag::kFalse) {
    throw std::logic_error("elimination left a non-constant residue: " + residue.to_string());
  }
  return Decision{residue.tag() == LinFormula::Tag::kTrue ? TruthValue::kTrue
                                                          : TruthValue::kFalse,
                  sufficiency_bound(records, bound_limit)};
}

TruthValue decide_bt6(const Construction& c, const Environment& e) {
  const LinFormula residue = eliminate(linearize(c, &e));
  if (residue.tag() == LinFormula::Tag::kTrue) return TruthValue::kTrue;
  if (residue.tag() == LinFormula::Tag::kFalse) return TruthValue::kFalse;
  throw std::logic_error("elimination left a non-constant residue: " + residue.to_string());
}

TruthValue decide_bt5(const Construction& c, const Environment& e) {
  if (sort_of(c) != Sorting::kBool) throw SortError("expected a formula");
  if (!is_fo(LangLevel::kL1, c)) {
    throw LanguageError("formula outside the language of 0 and S");
  }
  return decide_bt6(c, e);
}

bool bounded_oracle(const Construction& c, const Environment& e, const Natural& bound) {
  return eval_bool(c, e, Bounded{bound});
}

}  // namespace biforge
