// Copyright 2026 The hopfcalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cctype>

#include "hopfcalc/expr.hpp"

namespace hopfcalc {

namespace {

std::string join(const std::set<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

}  // namespace

ParseError::ParseError(int line, int column, const std::string& message, std::set<std::string> expected)
    : Error("syntax error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + message +
            (expected.empty() ? std::string() : " (expected " + join(expected) + ")")),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { Ident, Number, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  int line, column;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t k = 0;
  auto advance = [&](std::size_t count) {
    for (std::size_t t = 0; t < count; ++t, ++k) {
      if (s[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (k < s.size()) {
    const char c = s[k];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int l0 = line, c0 = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t e = k;
      while (e < s.size() && (std::isalnum(static_cast<unsigned char>(s[e])) || s[e] == '_')) ++e;
      out.push_back({Tok::Ident, s.substr(k, e - k), l0, c0});
      advance(e - k);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t e = k;
      while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e]))) ++e;
      out.push_back({Tok::Number, s.substr(k, e - k), l0, c0});
      advance(e - k);
    } else if (std::string("[](),;<>+-*/").find(c) != std::string::npos) {
      out.push_back({Tok::Punct, std::string(1, c), l0, c0});
      advance(1);
    } else {
      throw ParseError(l0, c0, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    if (peek().kind != Tok::End) fail({"'+'", "'-'", "'*'", "end of input"});
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool is(const char* p) const { return peek().kind == Tok::Punct && peek().text == p; }

  [[noreturn]] void fail(std::set<std::string> expected) const {
    const Token& t = peek();
    const std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.line, t.column, "unexpected " + found, std::move(expected));
  }

  void expect(const char* p) {
    if (!is(p)) fail({std::string("'") + p + "'"});
    ++pos_;
  }

  int index() {
    if (peek().kind != Tok::Number) fail({"index"});
    const Token& t = next();
    const int v = std::stoi(t.text);
    if (v < 1) throw ParseError(t.line, t.column, "indices start at 1");
    return v - 1;
  }

  std::string name() {
    if (peek().kind != Tok::Ident && peek().kind != Tok::Number) fail({"name"});
    return next().text;
  }

  static std::shared_ptr<Expr> node(Expr::Kind k, const Token& at) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->line = at.line;
    e->column = at.column;
    return e;
  }

  ExprPtr expr() {
    const Token& start = peek();
    ExprPtr left = term();
    while (is("+") || is("-")) {
      const bool minus = next().text == "-";
      ExprPtr right = term();
      if (minus) {
        auto neg = node(Expr::Kind::Neg, start);
        neg->args = {right};
        right = neg;
      }
      auto sum = node(Expr::Kind::Sum, start);
      sum->args = {left, right};
      left = sum;
    }
    return left;
  }

  ExprPtr term() {
    const Token& start = peek();
    ExprPtr left = factor();
    while (is("*")) {
      ++pos_;
      auto prod = node(Expr::Kind::Prod, start);
      prod->args = {left, factor()};
      left = prod;
    }
    return left;
  }

  ExprPtr factor() {
    const Token& t = peek();
    if (is("-")) {
      ++pos_;
      auto e = node(Expr::Kind::Neg, t);
      e->args = {factor()};
      return e;
    }
    if (is("(")) {
      ++pos_;
      ExprPtr e = expr();
      expect(")");
      return e;
    }
    if (is("<")) {
      ++pos_;
      auto e = node(Expr::Kind::Pair, t);
      ExprPtr left = expr();
      expect(",");
      ExprPtr right = expr();
      expect(">");
      e->args = {left, right};
      return e;
    }
    if (t.kind == Tok::Number) {
      ++pos_;
      auto e = node(Expr::Kind::Scalar, t);
      Integer num(t.text), den(1);
      if (is("/")) {
        ++pos_;
        if (peek().kind != Tok::Number) fail({"integer"});
        den = Integer(next().text);
        if (den == 0) throw ParseError(t.line, t.column, "zero denominator");
      }
      e->value = Rational(num) / Rational(den);
      return e;
    }
    if (t.kind == Tok::Ident) {
      ++pos_;
      const std::string& id = t.text;
      if (id == "d" && is("(")) {
        ++pos_;
        auto e = node(Expr::Kind::D, t);
        e->args = {expr()};
        expect(")");
        return e;
      }
      if (id == "L" && is("(")) {
        ++pos_;
        auto e = node(Expr::Kind::Lie, t);
        ExprPtr h = expr();
        expect(";");
        ExprPtr x = expr();
        expect(")");
        e->args = {h, x};
        return e;
      }
      if (id == "iota" && is("(")) {
        ++pos_;
        auto e = node(Expr::Kind::Iota, t);
        e->i = index();
        expect(";");
        e->args = {expr()};
        expect(")");
        return e;
      }
      if (is("[")) {
        ++pos_;
        std::shared_ptr<Expr> e;
        if (id == "e" || id == "u") {
          e = node(id == "e" ? Expr::Kind::Function : Expr::Kind::Group, t);
          e->name = name();
        } else if (id == "w" || id == "chi" || id == "gamma") {
          e = node(id == "w" ? Expr::Kind::Form : id == "chi" ? Expr::Kind::Chi : Expr::Kind::Gamma, t);
          e->i = index();
        } else if (id == "f") {
          e = node(Expr::Kind::FMatrix, t);
          e->i = index();
          expect(",");
          e->j = index();
        } else {
          throw ParseError(t.line, t.column, "unknown name '" + id + "'");
        }
        expect("]");
        return e;
      }
      throw ParseError(t.line, t.column, "unknown name '" + id + "'");
    }
    fail({"'('", "'<'", "'-'", "number", "atom", "d(", "L(", "iota("});
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expression(const std::string& text) { return Parser(text).parse(); }

std::string to_string(const Expr& e) {
  auto arg = [&](std::size_t k) { return to_string(*e.args[k]); };
  const std::string i = std::to_string(e.i + 1);
  switch (e.kind) {
    case Expr::Kind::Scalar: return to_string(e.value);
    case Expr::Kind::Function: return "e[" + e.name + "]";
    case Expr::Kind::Group: return "u[" + e.name + "]";
    case Expr::Kind::Form: return "w[" + i + "]";
    case Expr::Kind::Chi: return "chi[" + i + "]";
    case Expr::Kind::FMatrix: return "f[" + i + "," + std::to_string(e.j + 1) + "]";
    case Expr::Kind::Gamma: return "gamma[" + i + "]";
    case Expr::Kind::Neg: return "Neg(" + arg(0) + ")";
    case Expr::Kind::Sum: return "Sum(" + arg(0) + ", " + arg(1) + ")";
    case Expr::Kind::Prod: return "Prod(" + arg(0) + ", " + arg(1) + ")";
    case Expr::Kind::D: return "Diff(" + arg(0) + ")";
    case Expr::Kind::Lie: return "Lie(" + arg(0) + "; " + arg(1) + ")";
    case Expr::Kind::Iota: return "Iota(" + i + "; " + arg(0) + ")";
    case Expr::Kind::Pair: return "Pair(" + arg(0) + ", " + arg(1) + ")";
  }
  return "?";
}

}  // namespace hopfcalc
