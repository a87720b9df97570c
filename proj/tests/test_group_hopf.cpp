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

#include "hopfcalc/hopf.hpp"

using namespace hopfcalc;

TEST(Group, S3Products) {
  const GroupTable g = symmetric_group_s3();
  const int s12 = *g.find("s12"), s13 = *g.find("s13"), c132 = *g.find("c132"), c123 = *g.find("c123");
  EXPECT_EQ(g.mul(s12, s13), c132);
  EXPECT_EQ(g.inverse(c123), c132);
  EXPECT_EQ(g.conjugate(s12, s13), *g.find("s23"));
  EXPECT_EQ(g.identity(), 0);
}

TEST(Group, CyclicNames) {
  EXPECT_EQ(cyclic_group(2).names(), (std::vector<std::string>{"e", "g"}));
  EXPECT_EQ(cyclic_group(3).names(), (std::vector<std::string>{"e", "c", "c2"}));
}

TEST(Group, RejectsNonGroups) {
  EXPECT_THROW(GroupTable({"a", "b"}, {{0, 1}, {1, 1}}), Error);
  EXPECT_THROW(GroupTable({"a", "b"}, {{0, 1}}), Error);
  // Latin square without associativity
  EXPECT_THROW(GroupTable({"e", "a", "b", "c", "d"},
                          {{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}}),
               Error);
}

class HopfAxioms : public ::testing::TestWithParam<int> {
 protected:
  GroupTable group() const {
    switch (GetParam()) {
      case 0: return cyclic_group(2);
      case 1: return cyclic_group(3);
      default: return symmetric_group_s3();
    }
  }
};

TEST_P(HopfAxioms, FunctionAlgebra) {
  const SuiteReport r = check_hopf_axioms(function_hopf(group()));
  EXPECT_TRUE(r.ok()) << r.summary();
  EXPECT_GT(r.cases.size(), 0u);
}

TEST_P(HopfAxioms, GroupAlgebra) {
  const SuiteReport r = check_hopf_axioms(group_hopf(group()));
  EXPECT_TRUE(r.ok()) << r.summary();
}

TEST_P(HopfAxioms, TransposedDual) {
  const SuiteReport r = check_hopf_axioms(dual_hopf(function_hopf(group())));
  EXPECT_TRUE(r.ok()) << r.summary();
}

INSTANTIATE_TEST_SUITE_P(Groups, HopfAxioms, ::testing::Values(0, 1, 2));

TEST(Hopf, CorruptedAntipodeFails) {
  HopfData h = group_hopf(symmetric_group_s3());
  h.antipode = Matrix::Identity(h.dim, h.dim);
  const SuiteReport r = check_hopf_axioms(h);
  EXPECT_FALSE(r.ok());
  for (const auto& c : r.cases)
    if (!c.pass) EXPECT_NE(c.lhs, c.rhs);
}

TEST(Hopf, FunctionCoproduct) {
  const GroupTable g = cyclic_group(2);
  auto A = std::make_shared<const HopfData>(function_hopf(g));
  const TensorElement t = coproduct(Element::basis(A, 1));
  EXPECT_EQ(to_string(t, *A, *A), "(e[e] | e[g]) + (e[g] | e[e])");
  EXPECT_EQ(counit(Element::basis(A, 0)), 1);
  EXPECT_EQ(to_string(Element::unit(A)), "e[e] + e[g]");
}

TEST(Hopf, ElementsOfDifferentAlgebrasDoNotMix) {
  auto A = std::make_shared<const HopfData>(function_hopf(cyclic_group(2)));
  auto B = std::make_shared<const HopfData>(function_hopf(cyclic_group(2)));
  EXPECT_THROW(Element::unit(A) + Element::unit(B), Error);
}
