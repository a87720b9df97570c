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

#ifndef HOPFCALC_EXPR_HPP
#define HOPFCALC_EXPR_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "hopfcalc/verify.hpp"

namespace hopfcalc {

/// Expression syntax:
///
///   expr   := term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := '-' factor | '(' expr ')' | 'd' '(' expr ')'
///           | 'L' '(' expr ';' expr ')' | 'iota' '(' index ';' expr ')'
///           | '<' expr ',' expr '>' | integer ['/' integer]
///           | 'e[' name ']' | 'u[' name ']' | 'w[' i ']' | 'chi[' i ']'
///           | 'gamma[' i ']' | 'f[' i ',' j ']'
///
/// Indices are 1-based. Whitespace is insignificant.
struct Expr {
  enum class Kind { Scalar, Function, Group, Form, Chi, FMatrix, Gamma, Neg, Sum, Prod, D, Lie, Iota, Pair };

  Kind kind;
  Rational value;      // Scalar
  std::string name;    // Function, Group
  int i = 0, j = 0;    // 0-based indices
  std::vector<std::shared_ptr<const Expr>> args;
  int line = 1, column = 1;
};

using ExprPtr = std::shared_ptr<const Expr>;

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message, std::set<std::string> expected = {});
  int line() const { return line_; }
  int column() const { return column_; }
  const std::set<std::string>& expected() const { return expected_; }

 private:
  int line_, column_;
  std::set<std::string> expected_;
};

ExprPtr parse_expression(const std::string& text);

/// Tree form for diagnostics, e.g. `Diff(e[g])`.
std::string to_string(const Expr& e);

/// Normal form of an expression. Pairings give scalars.
CrossElement evaluate(const Expr& e, const Workspace& ws);
CrossElement evaluate(const std::string& text, const Workspace& ws);

/// Printed normal form; parses back to the same element.
std::string print_normal(const CrossElement& x);

}  // namespace hopfcalc

#endif  // HOPFCALC_EXPR_HPP
