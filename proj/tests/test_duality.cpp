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

#include "hopfcalc/duality.hpp"

using namespace hopfcalc;

TEST(Duality, RightTranslation) {
  const GroupTable g = symmetric_group_s3();
  const PairedHopf p = group_pairing(g);
  for (int x = 0; x < g.order(); ++x)
    for (int t = 0; t < g.order(); ++t) {
      const Element ux = Element::basis(p.dual, x);
      const Element et = Element::basis(p.alg, t);
      EXPECT_EQ(left_act(p, ux, et), Element::basis(p.alg, g.mul(t, g.inverse(x))));
      EXPECT_EQ(right_act(p, et, ux), Element::basis(p.alg, g.mul(g.inverse(x), t)));
    }
}

TEST(Duality, PairingIntertwines) {
  const GroupTable g = symmetric_group_s3();
  const PairedHopf p = group_pairing(g);
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      for (int a = 0; a < g.order(); ++a) {
        const Element ux = Element::basis(p.dual, x), uy = Element::basis(p.dual, y);
        const Element ea = Element::basis(p.alg, a);
        Rational rhs = 0;
        for (const auto& t : coproduct(ea).terms())
          rhs += t.coeff * p.pair(ux, Element::basis(p.alg, t.left)) * p.pair(uy, Element::basis(p.alg, t.right));
        EXPECT_EQ(p.pair(multiply(ux, uy), ea), rhs);
      }
}

TEST(Duality, CovarianceOnAllGroups) {
  for (const GroupTable& g : {cyclic_group(2), cyclic_group(3), symmetric_group_s3()}) {
    const SuiteReport r = check_covariance(group_pairing(g));
    EXPECT_TRUE(r.ok()) << r.summary();
    EXPECT_EQ(r.cases.size(), static_cast<std::size_t>(g.order() * g.order() * g.order()));
  }
}

TEST(Duality, CanonicalPairingOfTransposedDual) {
  auto A = std::make_shared<const HopfData>(function_hopf(symmetric_group_s3()));
  const SuiteReport r = check_covariance(canonical_pairing(A));
  EXPECT_TRUE(r.ok()) << r.summary();
}

TEST(Duality, ActionOnDualAndAdjoint) {
  const GroupTable g = cyclic_group(3);
  const PairedHopf p = group_pairing(g);
  const Element uc = Element::basis(p.dual, 1);
  // a |> u_x = u_x a(x)
  const Element a = Element::basis(p.alg, 1) + Rational(5) * Element::basis(p.alg, 2);
  EXPECT_EQ(act_on_dual(p, a, uc), uc);
  EXPECT_EQ(act_on_dual(p, a, Element::basis(p.dual, 2)), Rational(5) * Element::basis(p.dual, 2));
  // abelian: adjoint action is trivial
  EXPECT_EQ(adjoint_act(p, uc, Element::basis(p.dual, 2)), Element::basis(p.dual, 2));
}

TEST(Duality, MismatchedAlgebrasThrow) {
  const PairedHopf p = group_pairing(cyclic_group(2));
  const PairedHopf q = group_pairing(cyclic_group(2));
  EXPECT_THROW(left_act(p, Element::unit(q.dual), Element::unit(p.alg)), Error);
}
