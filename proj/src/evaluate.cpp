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

#include <algorithm>

#include "hopfcalc/expr.hpp"

namespace hopfcalc {

namespace {

[[noreturn]] void type_error(const Expr& e, const std::string& message) {
  throw Error("type error at " + std::to_string(e.line) + ":" + std::to_string(e.column) + ": " + message);
}

int find_label(const HopfData& h, const std::string& label) {
  const auto it = std::find(h.labels.begin(), h.labels.end(), label);
  return it == h.labels.end() ? -1 : static_cast<int>(it - h.labels.begin());
}

class Evaluator {
 public:
  explicit Evaluator(const Workspace& ws) : ws_(ws), d_(ws.fodc()) {}

  CrossElement eval(const Expr& e) const {
    const CrossPtr& c = ws_.cross;
    switch (e.kind) {
      case Expr::Kind::Scalar: return CrossElement::scalar(c, e.value);
      case Expr::Kind::Function: {
        const int k = find_label(*d_.paired.alg, "e[" + e.name + "]");
        if (k < 0) type_error(e, "unknown group element '" + e.name + "'");
        return CrossElement::from_form(c, ws_.wedge->function(Element::basis(d_.paired.alg, k)));
      }
      case Expr::Kind::Group: {
        const int k = find_label(*d_.paired.dual, "u[" + e.name + "]");
        if (k < 0) type_error(e, "unknown group element '" + e.name + "'");
        return CrossElement::from_dual(c, dual_from_hopf(c, Element::basis(d_.paired.dual, k)));
      }
      case Expr::Kind::Form:
        check_index(e, e.i);
        return CrossElement::from_form(c, ws_.wedge->omega(e.i));
      case Expr::Kind::Chi:
        check_index(e, e.i);
        return CrossElement::from_dual(c, dual_from_hopf(c, d_.chi[static_cast<std::size_t>(e.i)]));
      case Expr::Kind::FMatrix:
        check_index(e, e.i);
        check_index(e, e.j);
        return CrossElement::from_dual(
            c, dual_from_hopf(c, d_.f[static_cast<std::size_t>(e.i)][static_cast<std::size_t>(e.j)]));
      case Expr::Kind::Gamma:
        check_index(e, e.i);
        return CrossElement::from_dual(c, gamma(c, e.i));
      case Expr::Kind::Neg: return Rational(-1) * eval(*e.args[0]);
      case Expr::Kind::Sum: return eval(*e.args[0]) + eval(*e.args[1]);
      case Expr::Kind::Prod: return cross_multiply(eval(*e.args[0]), eval(*e.args[1]));
      case Expr::Kind::D: {
        const auto rho = eval(*e.args[0]).as_form();
        if (!rho) type_error(e, "d applied to an expression with dual factors");
        return CrossElement::from_form(c, exterior_derivative(*rho));
      }
      case Expr::Kind::Iota: {
        check_index(e, e.i);
        const auto rho = eval(*e.args[0]).as_form();
        if (!rho) type_error(e, "iota applied to an expression with dual factors");
        return CrossElement::from_form(c, inner_derivation(e.i, *rho, c));
      }
      case Expr::Kind::Lie: {
        const auto h = eval(*e.args[0]).as_dual();
        if (!h || h->max_degree() > 0) type_error(e, "Lie derivative index must be a vector field");
        return lie_derivative(vector_field(*h), eval(*e.args[1]));
      }
      case Expr::Kind::Pair: {
        const auto theta = eval(*e.args[0]).as_dual();
        if (!theta) type_error(e, "left side of a pairing must be a dual expression");
        const auto rho = eval(*e.args[1]).as_form();
        if (!rho) type_error(e, "right side of a pairing must be a form expression");
        return CrossElement::scalar(c, pair(*theta, *rho));
      }
    }
    type_error(e, "unknown node");
  }

 private:
  void check_index(const Expr& e, int i) const {
    if (i < 0 || i >= d_.n)
      type_error(e, "index " + std::to_string(i + 1) + " out of range 1.." + std::to_string(d_.n));
  }

  const Workspace& ws_;
  const FodcData& d_;
};

}  // namespace

CrossElement evaluate(const Expr& e, const Workspace& ws) { return Evaluator(ws).eval(e); }

CrossElement evaluate(const std::string& text, const Workspace& ws) { return evaluate(*parse_expression(text), ws); }

std::string print_normal(const CrossElement& x) { return to_string(x); }

}  // namespace hopfcalc
