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

#include "biforge/sexpr.hpp"

#include <array>
#include <cctype>
#include <stdexcept>
#include <utility>

#include "biforge/binum.hpp"
#include "biforge/error.hpp"

namespace biforge {

namespace {

constexpr std::array<std::string_view, 11> kReserved = {
    "z", "s", "tt", "ff", "and", "or", "not", "imp", "forall", "exists", "lambda"};

bool is_reserved(std::string_view word) {
  for (std::string_view r : kReserved) {
    if (r == word) return true;
  }
  return false;
}

bool ident_start(char ch) {
  return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_';
}

bool ident_char(char ch) {
  return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '\'';
}

bool delimiter(char ch) {
  return ch == '(' || ch == ')' || std::isspace(static_cast<unsigned char>(ch));
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Construction parse_all() {
    Construction c = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
    return c;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  // A maximal run of non-delimiter characters.
  std::string_view word() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !delimiter(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  void expect(char ch) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != ch) {
      throw ParseError(std::string("expected '") + ch + "'", pos_);
    }
    ++pos_;
  }

  VarName binder_variable() {
    skip_ws();
    const std::size_t at = pos_;
    const std::string_view w = word();
    if (!is_identifier(w)) throw ParseError("expected a variable", at);
    return VarName(std::string(w));
  }

  Construction parse_expr() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    if (text_[pos_] == ')') throw ParseError("unexpected ')'", pos_);
    if (text_[pos_] != '(') return parse_atom();
    ++pos_;
    skip_ws();
    const std::size_t head_at = pos_;
    const std::string_view head = word();
    Construction out = parse_application(head, head_at);
    expect(')');
    return out;
  }

  Construction parse_atom() {
    const std::size_t at = pos_;
    const std::string_view w = word();
    if (w == "z") return Construction::zero();
    if (w == "tt") return Construction::tt();
    if (w == "ff") return Construction::ff();
    if (w.starts_with("#b")) {
      try {
        return to_construction(parse_literal(w));
      } catch (const ParseError& e) {
        throw ParseError("malformed binary literal", at + e.position());
      }
    }
    if (is_identifier(w)) return Construction::var(w);
    throw ParseError("unexpected token '" + std::string(w) + "'", at);
  }

  Construction parse_application(std::string_view head, std::size_t at) {
    if (head == "s") return Construction::succ(parse_expr());
    if (head == "not") return Construction::neg(parse_expr());
    if (head == "forall" || head == "exists" || head == "lambda") {
      VarName v = binder_variable();
      Construction body = parse_expr();
      if (head == "forall") return Construction::forall(std::move(v), std::move(body));
      if (head == "exists") return Construction::exists(std::move(v), std::move(body));
      return Construction::abs(std::move(v), std::move(body));
    }
    Kind kind;
    if (head == "+") {
      kind = Kind::kPlus;
    } else if (head == "*") {
      kind = Kind::kTimes;
    } else if (head == "and") {
      kind = Kind::kAnd;
    } else if (head == "or") {
      kind = Kind::kOr;
    } else if (head == "imp") {
      kind = Kind::kImplies;
    } else if (head == "=") {
      kind = Kind::kEq;
    } else {
      throw ParseError("unknown operator '" + std::string(head) + "'", at);
    }
    Construction lhs = parse_expr();
    Construction rhs = parse_expr();
    const Construction kids[2] = {std::move(lhs), std::move(rhs)};
    return Construction::make(kind, nullptr, kids);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

const std::string& printable(const VarName& v) {
  if (!is_identifier(v.id())) {
    throw std::invalid_argument("variable '" + v.id() + "' has no text form");
  }
  return v.id();
}

void emit(const Construction& c, const PrintOptions& options, std::string& out) {
  if (options.fold_numerals && c.kind() == Kind::kPlus && is_bnum(c)) {
    out += to_literal(from_construction(c));
    return;
  }
  switch (c.kind()) {
    case Kind::kZero: out += "z"; return;
    case Kind::kTrue: out += "tt"; return;
    case Kind::kFalse: out += "ff"; return;
    case Kind::kVar: out += printable(c.var_name()); return;
    default: break;
  }
  out += '(';
  switch (c.kind()) {
    case Kind::kSucc: out += "s"; break;
    case Kind::kPlus: out += "+"; break;
    case Kind::kTimes: out += "*"; break;
    case Kind::kAnd: out += "and"; break;
    case Kind::kOr: out += "or"; break;
    case Kind::kNot: out += "not"; break;
    case Kind::kImplies: out += "imp"; break;
    case Kind::kEq: out += "="; break;
    case Kind::kForall: out += "forall"; break;
    case Kind::kExists: out += "exists"; break;
    case Kind::kAbs: out += "lambda"; break;
    default: break;
  }
  if (c.is_binder()) {
    out += ' ';
    out += printable(c.var_name());
  }
  for (std::size_t i = 0; i < c.arity(); ++i) {
    out += ' ';
    emit(c.child(i), options, out);
  }
  out += ')';
}

}  // namespace

bool is_identifier(std::string_view text) {
  if (text.empty() || !ident_start(text[0]) || is_reserved(text)) return false;
  for (char ch : text) {
    if (!ident_char(ch)) return false;
  }
  return true;
}

Construction parse_construction(std::string_view text) {
  Construction c = Parser(text).parse_all();
  sort_of(c);
  return c;
}

std::string print(const Construction& c, const PrintOptions& options) {
  std::string out;
  emit(c, options, out);
  return out;
}

}  // namespace biforge
