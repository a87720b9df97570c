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

#ifndef HOPFCALC_RATIONAL_HPP
#define HOPFCALC_RATIONAL_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Dense>

namespace hopfcalc {

/// Exact rational scalar. Expression templates are off so the type plays
/// well inside Eigen containers.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrix = MatrixX<Rational>;
using Vector = VectorX<Rational>;

/// Sparse coefficient list (index, value); kept sorted by index with no zeros
/// wherever the library hands one out.
using SparseTerms = std::vector<std::pair<int, Rational>>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string to_string(const Rational& q);

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) return false;
  return true;
}

inline Vector zero_vector(Eigen::Index n) { return Vector::Constant(n, Rational(0)); }
inline Matrix zero_matrix(Eigen::Index r, Eigen::Index c) {
  return Matrix::Constant(r, c, Rational(0));
}
inline Vector unit_vector(Eigen::Index n, Eigen::Index i) {
  Vector v = zero_vector(n);
  v(i) = 1;
  return v;
}

SparseTerms to_sparse(const Vector& v);

/// Joins coefficient/label pairs into `a - b + 2/3 * c`. A label of "1" stands
/// for the scalar itself; zero coefficients are skipped; empty input gives "0".
std::string format_sum(const std::vector<std::pair<Rational, std::string>>& terms);
void add_scaled(Vector& acc, const SparseTerms& terms, const Rational& scale);

}  // namespace hopfcalc

#endif  // HOPFCALC_RATIONAL_HPP
