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

#include "hopfcalc/duality.hpp"

namespace hopfcalc {

namespace {

void require_alg(const PairedHopf& p, const Element& a) {
  require_same(p.alg, a.algebra(), "pairing mismatch");
}
void require_dual(const PairedHopf& p, const Element& x) {
  require_same(p.dual, x.algebra(), "pairing mismatch");
}

}  // namespace

Rational PairedHopf::pair(const Element& x, const Element& a) const {
  require_dual(*this, x);
  require_alg(*this, a);
  return x.coeffs().dot(pairing * a.coeffs());
}

PairedHopf canonical_pairing(HopfPtr alg) {
  auto dual = std::make_shared<const HopfData>(dual_hopf(*alg));
  const int n = alg->dim;
  return PairedHopf{std::move(alg), std::move(dual), Matrix::Identity(n, n)};
}

PairedHopf group_pairing(const GroupTable& g) {
  auto alg = std::make_shared<const HopfData>(function_hopf(g));
  auto dual = std::make_shared<const HopfData>(group_hopf(g));
  const int n = g.order();
  return PairedHopf{std::move(alg), std::move(dual), Matrix::Identity(n, n)};
}

Element left_act(const PairedHopf& p, const Element& x, const Element& a) {
  require_dual(p, x);
  require_alg(p, a);
  // <x, e_r> for every basis r
  const Vector weights = p.pairing.transpose() * x.coeffs();
  Vector out = zero_vector(p.alg->dim);
  for (const auto& t : coproduct(a).terms()) out(t.left) += t.coeff * weights(t.right);
  return Element(p.alg, std::move(out));
}

Element right_act(const PairedHopf& p, const Element& a, const Element& x) {
  require_dual(p, x);
  require_alg(p, a);
  const Vector weights = p.pairing.transpose() * x.coeffs();
  Vector out = zero_vector(p.alg->dim);
  for (const auto& t : coproduct(a).terms()) out(t.right) += t.coeff * weights(t.left);
  return Element(p.alg, std::move(out));
}

Element act_on_dual(const PairedHopf& p, const Element& a, const Element& h) {
  require_alg(p, a);
  require_dual(p, h);
  // <e*_r, a> for every dual basis r
  const Vector weights = p.pairing * a.coeffs();
  Vector out = zero_vector(p.dual->dim);
  for (const auto& t : coproduct(h).terms()) out(t.left) += t.coeff * weights(t.right);
  return Element(p.dual, std::move(out));
}

Element adjoint_act(const PairedHopf& p, const Element& h, const Element& theta) {
  require_dual(p, h);
  require_dual(p, theta);
  Element out = Element::zero(p.dual);
  for (const auto& t : coproduct(h).terms()) {
    const Element left = Element::basis(p.dual, t.left);
    const Element right = antipode(Element::basis(p.dual, t.right));
    out += t.coeff * multiply(multiply(left, theta), right);
  }
  return out;
}

SuiteReport check_covariance(const PairedHopf& p) {
  SuiteReport rep;
  rep.suite = "covariance";
  const int nd = p.dual->dim;
  const int na = p.alg->dim;
  for (int x = 0; x < nd; ++x) {
    const Element ex = Element::basis(p.dual, x);
    const TensorElement dx = coproduct(ex);
    for (int a = 0; a < na; ++a) {
      const Element ea = Element::basis(p.alg, a);
      for (int b = 0; b < na; ++b) {
        const Element eb = Element::basis(p.alg, b);
        const Element lhs = left_act(p, ex, multiply(ea, eb));
        Element rhs = Element::zero(p.alg);
        for (const auto& t : dx.terms())
          rhs += t.coeff * multiply(left_act(p, Element::basis(p.dual, t.left), ea),
                                    left_act(p, Element::basis(p.dual, t.right), eb));
        rep.add(p.dual->labels[static_cast<std::size_t>(x)] + " |> (" +
                    p.alg->labels[static_cast<std::size_t>(a)] + " * " +
                    p.alg->labels[static_cast<std::size_t>(b)] + ")",
                lhs == rhs, to_string(lhs), to_string(rhs));
      }
    }
  }
  return rep;
}

}  // namespace hopfcalc
