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

#include <gtest/gtest.h>

#include <random>

#include "hopfcalc/verify.hpp"

using namespace hopfcalc;

namespace {

Workspace z2(int max_degree = 3) {
  WedgeOptions o;
  o.max_degree = max_degree;
  return make_workspace(finite_group_calculus(cyclic_group(2), {1}), o);
}

Workspace z3() { return make_workspace(finite_group_calculus(cyclic_group(3), {1, 2})); }

Workspace s3(int max_degree = 3) {
  const GroupTable g = symmetric_group_s3();
  WedgeOptions o;
  o.max_degree = max_degree;
  return make_workspace(finite_group_calculus(g, {*g.find("s12"), *g.find("s13"), *g.find("s23")}), o);
}

CrossElement form(const Workspace& ws, const GradedForm& rho) { return CrossElement::from_form(ws.cross, rho); }
CrossElement dual(const Workspace& ws, const DualElement& theta) { return CrossElement::from_dual(ws.cross, theta); }
CrossElement fn(const Workspace& ws, int a) {
  return form(ws, ws.wedge->function(Element::basis(ws.fodc().paired.alg, a)));
}
CrossElement u(const Workspace& ws, int x) {
  return dual(ws, dual_from_hopf(ws.cross, Element::basis(ws.fodc().paired.dual, x)));
}
CrossElement g(const Workspace& ws, int i) { return dual(ws, gamma(ws.cross, i)); }
CrossElement w(const Workspace& ws, int i) { return form(ws, ws.wedge->omega(i)); }

}  // namespace

TEST(Cross, UnitIsNeutral) {
  const Workspace ws = s3();
  const CrossElement one = CrossElement::scalar(ws.cross, 1);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(cross_multiply(one, g(ws, i)), g(ws, i));
    EXPECT_EQ(cross_multiply(g(ws, i), one), g(ws, i));
    EXPECT_EQ(cross_multiply(dual(ws, dual_unit(ws.cross)), w(ws, i)), w(ws, i));
  }
}

TEST(Cross, Z2GammaRelations) {
  const Workspace ws = z2();
  EXPECT_EQ(cross_multiply(g(ws, 0), u(ws, 1)), cross_multiply(u(ws, 1), g(ws, 0)));
  EXPECT_TRUE(cross_multiply(g(ws, 0), g(ws, 0)).is_zero());
}

TEST(Cross, GammaCommutesWithFunctions) {
  for (const Workspace& ws : {z2(), z3(), s3()}) {
    const int n = ws.fodc().paired.alg->dim;
    for (int i = 0; i < ws.fodc().n; ++i)
      for (int a = 0; a < n; ++a)
        EXPECT_EQ(cross_multiply(g(ws, i), fn(ws, a)), cross_multiply(fn(ws, a), g(ws, i)));
  }
}

TEST(Cross, GammaPastOmega) {
  for (const Workspace& ws : {z2(), z3(), s3()}) {
    const FodcData& d = ws.fodc();
    for (int i = 0; i < d.n; ++i)
      for (int j = 0; j < d.n; ++j) {
        const CrossElement lhs = cross_multiply(g(ws, i), w(ws, j));
        const CrossElement rhs =
            dual(ws, dual_from_hopf(ws.cross, d.f[j][i])) - cross_multiply(w(ws, j), g(ws, i));
        EXPECT_EQ(lhs, rhs) << to_string(lhs) << " vs " << to_string(rhs);
      }
  }
}

TEST(Cross, PrintedOrderPutsFormsFirst) {
  const Workspace ws = z2();
  EXPECT_EQ(to_string(cross_multiply(g(ws, 0), fn(ws, 1))), "e[g] * gamma[1]");
}

TEST(Cross, LieDerivatives) {
  const Workspace ws = s3();
  const WedgeAlgebra& W = *ws.wedge;
  const Element unit = Element::unit(ws.fodc().paired.dual);
  for (int p = 0; p < W.dim(); ++p)
    EXPECT_EQ(lie_derivative(unit, W.basis(p), ws.cross), W.basis(p));
  const Workspace z = z2();
  EXPECT_TRUE(lie_derivative(z.fodc().chi[0], z.wedge->omega(0), z.cross).is_zero());
}

TEST(Cross, InnerDerivation) {
  const Workspace ws = s3();
  const auto A = ws.fodc().paired.alg;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int a = 0; a < A->dim; ++a) {
        const GradedForm rho = wedge_multiply(ws.wedge->function(Element::basis(A, a)), ws.wedge->omega(j));
        const GradedForm expected =
            i == j ? ws.wedge->function(Element::basis(A, a)) : ws.wedge->zero();
        EXPECT_EQ(inner_derivation(i, rho, ws.cross), expected);
      }
}

TEST(Cross, PairingOfGammaWithOmega) {
  const Workspace ws = z3();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      EXPECT_EQ(pair(gamma(ws.cross, i), ws.wedge->omega(j)), i == j ? 1 : 0);
}

TEST(Cross, AssociativeOnZ2Basis) {
  const Workspace ws = z2(1);
  std::vector<CrossElement> basis;
  const CrossAlgebra& c = *ws.cross;
  for (int p = 0; p < ws.wedge->dim(); ++p)
    for (const auto& m : c.monomials()) {
      CrossElement x(ws.cross);
      const Vector v = c.monomial_vector(m);
      for (int q = 0; q < c.dim(); ++q)
        if (v(q) != 0) x.add(p, q, v(q));
      basis.push_back(x);
    }
  for (const auto& x : basis)
    for (const auto& y : basis)
      for (const auto& z : basis)
        EXPECT_EQ(cross_multiply(cross_multiply(x, y), z), cross_multiply(x, cross_multiply(y, z)));
}

TEST(Cross, AssociativeOnSampledZ3Triples) {
  const Workspace ws = z3();
  const CrossAlgebra& c = *ws.cross;
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pf(0, ws.wedge->dim() - 1);
  std::uniform_int_distribution<int> pm(0, static_cast<int>(c.monomials().size()) - 1);
  auto pick = [&] {
    CrossElement x(ws.cross);
    const int p = pf(rng);
    const Vector v = c.monomial_vector(c.monomials()[static_cast<std::size_t>(pm(rng))]);
    for (int q = 0; q < c.dim(); ++q)
      if (v(q) != 0) x.add(p, q, v(q));
    return x;
  };
  for (int k = 0; k < 60; ++k) {
    const CrossElement x = pick(), y = pick(), z = pick();
    EXPECT_EQ(cross_multiply(cross_multiply(x, y), z), cross_multiply(x, cross_multiply(y, z)));
  }
}

TEST(Cross, MonomialsSpanTheDual) {
  const Workspace ws = s3(4);
  const CrossAlgebra& c = *ws.cross;
  EXPECT_EQ(static_cast<int>(c.monomials().size()), c.dim());
  for (std::size_t m = 0; m < c.monomials().size(); ++m) {
    const Vector coords = c.to_monomials(c.monomial_vector(c.monomials()[m]));
    EXPECT_EQ(coords, unit_vector(c.dim(), static_cast<int>(m)));
  }
}
