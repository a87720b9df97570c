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

#include "hopfcalc/linalg.hpp"

using namespace hopfcalc;

namespace {

Matrix mat(std::initializer_list<std::initializer_list<int>> rows) {
  Matrix m = zero_matrix(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (int v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

Vector vec(std::initializer_list<int> xs) {
  Vector v = zero_vector(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (int x : xs) v(i++) = x;
  return v;
}

// Greedy choice: walk the unit vectors in order, keep each one that raises the rank.
std::vector<Eigen::Index> greedy_complement(const std::vector<Vector>& vs, Eigen::Index dim) {
  std::vector<Eigen::Index> chosen;
  std::vector<Vector> span = vs;
  for (Eigen::Index i = 0; i < dim; ++i) {
    auto trial = span;
    trial.push_back(unit_vector(dim, i));
    Matrix m = zero_matrix(dim, static_cast<Eigen::Index>(trial.size()));
    for (std::size_t k = 0; k < trial.size(); ++k) m.col(static_cast<Eigen::Index>(k)) = trial[k];
    Matrix base = zero_matrix(dim, static_cast<Eigen::Index>(span.size()));
    for (std::size_t k = 0; k < span.size(); ++k) base.col(static_cast<Eigen::Index>(k)) = span[k];
    if (rank(m) > (span.empty() ? 0 : rank(base))) {
      chosen.push_back(i);
      span = trial;
    }
  }
  return chosen;
}

}  // namespace

TEST(Linalg, RankOfSmallMatrices) {
  EXPECT_EQ(rank(mat({{1, 2}, {2, 4}})), 1);
  EXPECT_EQ(rank(mat({{1, 0}, {0, 1}})), 2);
  EXPECT_EQ(rank(zero_matrix(3, 2)), 0);
}

TEST(Linalg, KernelIsSignNormalized) {
  const auto k = kernel_basis(mat({{1, 1}, {1, 1}}));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], vec({1, -1}));
}

TEST(Linalg, KernelVectorsAreAnnihilated) {
  const Matrix m = mat({{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}});
  const auto k = kernel_basis(m);
  EXPECT_EQ(k.size(), 2u);
  for (const auto& v : k) EXPECT_TRUE(is_zero(m * v));
}

TEST(Linalg, ExactFractions) {
  const Matrix m = mat({{3, 1}, {1, 3}});
  const Matrix inv = exact_inverse(m);
  EXPECT_EQ(inv(0, 0), Rational(3, 8));
  EXPECT_EQ(inv(0, 1), Rational(-1, 8));
  EXPECT_EQ(Matrix(m * inv), Matrix(Matrix::Identity(2, 2)));
  EXPECT_THROW(exact_inverse(mat({{1, 2}, {2, 4}})), Error);
}

TEST(Linalg, ComplementMatchesGreedyChoice) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    const Eigen::Index dim = 2 + trial % 5;
    const int count = static_cast<int>(trial % dim);
    std::vector<Vector> vs;
    QuotientReducer<Rational> probe(dim);
    while (static_cast<int>(vs.size()) < count) {
      Vector v = zero_vector(dim);
      for (Eigen::Index i = 0; i < dim; ++i) v(i) = entry(rng);
      if (probe.add(v)) vs.push_back(v);
    }
    EXPECT_EQ(complement_basis(vs, dim), greedy_complement(vs, dim));
  }
}

TEST(Linalg, ComplementRejectsDependentInput) {
  EXPECT_THROW(complement_basis(std::vector<Vector>{vec({1, 1}), vec({2, 2})}, 2), Error);
}

TEST(Linalg, ReducerGivesQuotientCoordinates) {
  QuotientReducer<Rational> q(3, {vec({1, 1, 0})});
  ASSERT_EQ(q.complement(), (std::vector<Eigen::Index>{0, 2}));
  // e2 = -e1 modulo (1,1,0)
  EXPECT_EQ(q.reduce(vec({0, 1, 0})), vec({-1, 0}));
  EXPECT_EQ(q.reduce(vec({1, 1, 5})), vec({0, 5}));
}

TEST(Linalg, SolveInSpan) {
  const std::vector<Vector> vs{vec({1, 0, 1}), vec({0, 1, 1})};
  const auto c = solve_in_span(vs, vec({2, 3, 5}));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c, vec({2, 3}));
  EXPECT_FALSE(solve_in_span(vs, vec({0, 0, 1})).has_value());
}

TEST(Linalg, WorksForOtherScalars) {
  MatrixX<double> m(2, 2);
  m << 1.0, 2.0, 2.0, 4.0;
  EXPECT_EQ(rank(m), 1);
}
