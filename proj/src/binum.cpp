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

#include "biforge/binum.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>

#include "biforge/error.hpp"

namespace biforge {

BinNum::BinNum(std::vector<BinDigit> lsb_first) : digits_(std::move(lsb_first)) {
  if (digits_.empty()) throw std::invalid_argument("numeral without digits");
}

Natural to_nat(const BinNum& b) {
  Natural value = 0;
  for (auto it = b.digits().rbegin(); it != b.digits().rend(); ++it) {
    value <<= 1;
    if (*it == BinDigit::kD1) value += 1;
  }
  return value;
}

BinNum of_nat(const Natural& n) {
  if (n < 0) throw std::invalid_argument("of_nat of a negative value");
  if (n == 0) return BinNum({BinDigit::kD0});
  std::vector<BinDigit> digits;
  for (Natural rest = n; rest > 0; rest >>= 1) {
    digits.push_back(bit_test(rest, 0) ? BinDigit::kD1 : BinDigit::kD0);
  }
  return BinNum(std::move(digits));
}

BinNum normalize(const BinNum& b) {
  std::vector<BinDigit> digits = b.digits();
  while (digits.size() > 1 && digits.back() == BinDigit::kD0) digits.pop_back();
  return BinNum(std::move(digits));
}

namespace {

using Digits = std::vector<BinDigit>;
using DigitView = std::span<const BinDigit>;

void increment(Digits& d) {
  for (BinDigit& digit : d) {
    if (digit == BinDigit::kD0) {
      digit = BinDigit::kD1;
      return;
    }
    digit = BinDigit::kD0;
  }
  d.push_back(BinDigit::kD1);
}

void double_in_place(Digits& d) { d.insert(d.begin(), BinDigit::kD0); }

bool is_single(DigitView d, BinDigit digit) {
  return d.size() == 1 && d[0] == digit;
}

// The eight-case recursion on the low digits of both operands.
Digits add(DigitView a, DigitView b) {
  if (is_single(a, BinDigit::kD0)) return Digits(b.begin(), b.end());
  if (is_single(a, BinDigit::kD1)) {
    Digits out(b.begin(), b.end());
    increment(out);
    return out;
  }
  if (is_single(b, BinDigit::kD0)) return Digits(a.begin(), a.end());
  if (is_single(b, BinDigit::kD1)) {
    Digits out(a.begin(), a.end());
    increment(out);
    return out;
  }
  Digits out = add(a.subspan(1), b.subspan(1));
  double_in_place(out);
  const int carry_in =
      (a[0] == BinDigit::kD1 ? 1 : 0) + (b[0] == BinDigit::kD1 ? 1 : 0);
  for (int i = 0; i < carry_in; ++i) increment(out);
  return out;
}

Digits multiply(DigitView a, DigitView b) {
  if (is_single(b, BinDigit::kD0)) return Digits{BinDigit::kD0};
  if (is_single(b, BinDigit::kD1)) return Digits(a.begin(), a.end());
  if (is_single(a, BinDigit::kD0)) return Digits{BinDigit::kD0};
  if (is_single(a, BinDigit::kD1)) return Digits(b.begin(), b.end());
  Digits out = multiply(a.subspan(1), b);
  double_in_place(out);
  if (a[0] == BinDigit::kD1) out = add(out, b);
  return out;
}

}  // namespace

BinNum succ_b(const BinNum& b) {
  Digits d = b.digits();
  increment(d);
  return BinNum(std::move(d));
}

BinNum shift(const BinNum& b) {
  Digits d = b.digits();
  double_in_place(d);
  return BinNum(std::move(d));
}

BinNum bplus(const BinNum& a, const BinNum& b) {
  return BinNum(add(a.digits(), b.digits()));
}

BinNum btimes(const BinNum& a, const BinNum& b) {
  return BinNum(multiply(a.digits(), b.digits()));
}

std::string to_literal(const BinNum& b) {
  std::string out = "#b";
  for (auto it = b.digits().rbegin(); it != b.digits().rend(); ++it) {
    out.push_back(*it == BinDigit::kD1 ? '1' : '0');
  }
  return out;
}

BinNum parse_literal(std::string_view text) {
  if (text.size() < 3 || text.substr(0, 2) != "#b") {
    throw ParseError("expected #b followed by binary digits", 0);
  }
  Digits digits;
  for (std::size_t i = text.size(); i-- > 2;) {
    if (text[i] == '0') {
      digits.push_back(BinDigit::kD0);
    } else if (text[i] == '1') {
      digits.push_back(BinDigit::kD1);
    } else {
      throw ParseError("invalid binary digit", i);
    }
  }
  return BinNum(std::move(digits));
}

namespace {

bool is_one(const Construction& c) {
  return c.kind() == Kind::kSucc && c.arg().kind() == Kind::kZero;
}

// Digits of a numeral construction, least-significant first, or nullopt.
std::optional<Digits> numeral_digits(const Construction& c) {
  Digits digits;
  const Construction* node = &c;
  while (true) {
    if (node->kind() != Kind::kPlus || node->lhs().kind() != Kind::kPlus) {
      return std::nullopt;
    }
    const Construction& doubled = node->lhs();
    if (!(doubled.lhs() == doubled.rhs())) return std::nullopt;
    const Construction& low = node->rhs();
    if (low.kind() == Kind::kZero) {
      digits.push_back(BinDigit::kD0);
    } else if (is_one(low)) {
      digits.push_back(BinDigit::kD1);
    } else {
      return std::nullopt;
    }
    node = &doubled.lhs();
    if (node->kind() == Kind::kZero) return digits;
  }
}

}  // namespace

bool is_bnum(const Construction& c) { return numeral_digits(c).has_value(); }

Construction to_construction(const BinNum& b) {
  Construction out = Construction::zero();
  const Construction one = Construction::succ(Construction::zero());
  for (auto it = b.digits().rbegin(); it != b.digits().rend(); ++it) {
    out = bnat(out, *it == BinDigit::kD1 ? one : Construction::zero());
  }
  return out;
}

BinNum from_construction(const Construction& c) {
  auto digits = numeral_digits(c);
  if (!digits) throw NotBnum("construction is not a binary numeral");
  return BinNum(std::move(*digits));
}

// ---------------------------------------------------------------------------
// Conditional rewriting with the BPLUS axioms.

namespace {

// Engine terms: the literal 0, bnat(inner, digit), and pending additions.
struct RwNode;
using RwTerm = std::shared_ptr<const RwNode>;

struct RwNode {
  enum class Tag { kZero, kBnat, kBPlus } tag;
  RwTerm left;   // bnat: inner numeral; bplus: augend
  RwTerm right;  // bplus: addend
  bool digit = false;
};

RwTerm rw_zero() {
  static const RwTerm kZero = std::make_shared<const RwNode>(
      RwNode{RwNode::Tag::kZero, nullptr, nullptr, false});
  return kZero;
}

RwTerm rw_bnat(RwTerm inner, bool digit) {
  return std::make_shared<const RwNode>(
      RwNode{RwNode::Tag::kBnat, std::move(inner), nullptr, digit});
}

RwTerm rw_bplus(RwTerm a, RwTerm b) {
  return std::make_shared<const RwNode>(
      RwNode{RwNode::Tag::kBPlus, std::move(a), std::move(b), false});
}

bool rw_is_bnum(const RwTerm& t) {
  const RwNode* node = t.get();
  while (node->tag == RwNode::Tag::kBnat) {
    if (node->left->tag == RwNode::Tag::kZero) return true;
    node = node->left.get();
  }
  return false;
}

// The literals (0)_2 and (1)_2, i.e. bnat 0 0 and bnat 0 1.
bool is_small_literal(const RwTerm& t, bool digit) {
  return t->tag == RwNode::Tag::kBnat && t->digit == digit &&
         t->left->tag == RwNode::Tag::kZero;
}

RwTerm rw_one() { return rw_bnat(rw_zero(), true); }

// bnat(u, digit) with is-bnum u; yields u.
const RwNode* bnat_over_bnum(const RwTerm& t, bool digit) {
  if (t->tag != RwNode::Tag::kBnat || t->digit != digit) return nullptr;
  if (!rw_is_bnum(t->left)) return nullptr;
  return t.get();
}

std::optional<RwTerm> apply_rules(const RwTerm& t, RuleSet rules) {
  if (t->tag != RwNode::Tag::kBPlus) return std::nullopt;
  const RwTerm& a = t->left;
  const RwTerm& b = t->right;
  // 5: u + (0)_2 = u
  if (is_small_literal(b, false) && rw_is_bnum(a)) return a;
  // 6: (0)_2 + u = u
  if (is_small_literal(a, false) && rw_is_bnum(b)) return b;
  // 7: (1)_2 + (1)_2 = (10)_2
  if (is_small_literal(a, true) && is_small_literal(b, true)) {
    return rw_bnat(rw_one(), false);
  }
  // 8: bnat(u,0) + (1)_2 = bnat(u,1)
  if (is_small_literal(b, true)) {
    if (const RwNode* u = bnat_over_bnum(a, false)) return rw_bnat(u->left, true);
  }
  // 9: bnat(u,1) + (1)_2 = bnat(u + (1)_2, 0)
  if (is_small_literal(b, true)) {
    if (const RwNode* u = bnat_over_bnum(a, true)) {
      return rw_bnat(rw_bplus(u->left, rw_one()), false);
    }
  }
  // 10: (1)_2 + bnat(u,0) = bnat(u,1)
  if (is_small_literal(a, true)) {
    if (const RwNode* u = bnat_over_bnum(b, false)) return rw_bnat(u->left, true);
  }
  // 11: (1)_2 + bnat(u,d) = bnat(u + (1)_2, 0); d is 0 as printed, which
  // rule 10 always shadows.
  if (is_small_literal(a, true)) {
    const bool digit = rules == RuleSet::kRepaired;
    if (const RwNode* u = bnat_over_bnum(b, digit)) {
      return rw_bnat(rw_bplus(u->left, rw_one()), false);
    }
  }
  // 12-15: bnat(u,x) + bnat(v,y)
  const RwNode* u0 = bnat_over_bnum(a, false);
  const RwNode* u1 = bnat_over_bnum(a, true);
  const RwNode* v0 = bnat_over_bnum(b, false);
  const RwNode* v1 = bnat_over_bnum(b, true);
  if (u0 && v0) return rw_bnat(rw_bplus(u0->left, v0->left), false);
  if (u0 && v1) return rw_bnat(rw_bplus(u0->left, v1->left), true);
  if (u1 && v0) return rw_bnat(rw_bplus(u1->left, v0->left), true);
  if (u1 && v1) {
    return rw_bnat(rw_bplus(rw_bplus(u1->left, v1->left), rw_one()), false);
  }
  return std::nullopt;
}

// One leftmost-innermost step, or nullopt in normal form.
std::optional<RwTerm> step(const RwTerm& t, RuleSet rules) {
  switch (t->tag) {
    case RwNode::Tag::kZero:
      return std::nullopt;
    case RwNode::Tag::kBnat:
      if (auto inner = step(t->left, rules)) return rw_bnat(*inner, t->digit);
      return std::nullopt;
    case RwNode::Tag::kBPlus:
      if (auto left = step(t->left, rules)) return rw_bplus(*left, t->right);
      if (auto right = step(t->right, rules)) return rw_bplus(t->left, *right);
      return apply_rules(t, rules);
  }
  return std::nullopt;
}

RwTerm from_numeral(const Construction& c) {
  const BinNum b = from_construction(c);
  RwTerm out = rw_zero();
  for (auto it = b.digits().rbegin(); it != b.digits().rend(); ++it) {
    out = rw_bnat(out, *it == BinDigit::kD1);
  }
  return out;
}

BinNum rw_digits(const RwTerm& t) {
  Digits digits;
  for (const RwNode* node = t.get(); node->tag == RwNode::Tag::kBnat;
       node = node->left.get()) {
    digits.push_back(node->digit ? BinDigit::kD1 : BinDigit::kD0);
  }
  return BinNum(std::move(digits));
}

std::string render(const RwTerm& t) {
  if (rw_is_bnum(t)) return to_literal(rw_digits(t));
  switch (t->tag) {
    case RwNode::Tag::kZero:
      return "z";
    case RwNode::Tag::kBnat:
      return "(bnat " + render(t->left) + (t->digit ? " 1)" : " 0)");
    case RwNode::Tag::kBPlus:
      return "(bplus " + render(t->left) + " " + render(t->right) + ")";
  }
  return "?";
}

}  // namespace

RewriteResult bplus_rewrite(const Construction& a, const Construction& b,
                            RuleSet rules) {
  RwTerm term = rw_bplus(from_numeral(a), from_numeral(b));
  std::size_t steps = 0;
  while (auto next = step(term, rules)) {
    term = std::move(*next);
    ++steps;
  }
  if (rw_is_bnum(term)) return to_construction(rw_digits(term));
  return Stuck{render(term), steps};
}

}  // namespace biforge
