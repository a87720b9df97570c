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

#ifndef HOPFCALC_LINALG_HPP
#define HOPFCALC_LINALG_HPP

#include <optional>
#include <vector>

#include "hopfcalc/rational.hpp"

// Exact dense linear algebra over a field scalar. Everything here is written
// against Eigen dense types so the same code serves Rational (the library
// default) and any other exact field type with the usual operators.

namespace hopfcalc {

namespace detail {

// In-place reduced row echelon form with first-nonzero pivot selection.
// Returns the pivot column of each nonzero row, in row order.
template <typename Scalar>
std::vector<Eigen::Index> rref_in_place(MatrixX<Scalar>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const Scalar lead = m(row, col);
    for (Eigen::Index c = col; c < m.cols(); ++c) m(row, c) /= lead;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Scalar factor = m(r, col);
      for (Eigen::Index c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename Scalar>
MatrixX<Scalar> stack_columns(const std::vector<VectorX<Scalar>>& vectors, Eigen::Index dim) {
  MatrixX<Scalar> m = MatrixX<Scalar>::Constant(dim, static_cast<Eigen::Index>(vectors.size()),
                                                Scalar(0));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].size() != dim) throw Error("vector length does not match ambient dimension");
    m.col(static_cast<Eigen::Index>(j)) = vectors[j];
  }
  return m;
}

}  // namespace detail

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  MatrixX<typename Derived::Scalar> work = m;
  return static_cast<Eigen::Index>(detail::rref_in_place(work).size());
}

/// Basis of the null space of `m`. One vector per free column, in ascending
/// column order; each vector has a 1 (up to the final sign) in its free
/// column, and is sign-normalized so that its first nonzero entry is positive.
template <typename Derived>
std::vector<VectorX<typename Derived::Scalar>> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> work = m;
  const auto pivots = detail::rref_in_place(work);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (auto p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<VectorX<Scalar>> basis;
  for (Eigen::Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    VectorX<Scalar> v = VectorX<Scalar>::Constant(m.cols(), Scalar(0));
    v(free) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v(pivots[r]) = -work(static_cast<Eigen::Index>(r), free);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (v(i) == 0) continue;
      if (v(i) < 0) v = -v;
      break;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Row reduction of a subspace R of Scalar^dim with *trailing* pivots: every
/// stored row has a 1 in its last nonzero slot and zeros in the pivot slots of
/// all other rows. The non-pivot indices are then the lexicographically
/// smallest set of coordinates whose unit vectors complement R, and reducing a
/// vector modulo R expresses it in those coordinates.
template <typename Scalar>
class QuotientReducer {
 public:
  explicit QuotientReducer(Eigen::Index dim) : dim_(dim) {}

  QuotientReducer(Eigen::Index dim, const std::vector<VectorX<Scalar>>& spanning) : dim_(dim) {
    for (const auto& v : spanning) add(v);
  }

  /// Adds a spanning vector; returns false if it was already in the span.
  bool add(VectorX<Scalar> v) {
    if (v.size() != dim_) throw Error("vector length does not match ambient dimension");
    eliminate(v);
    Eigen::Index pivot = -1;
    for (Eigen::Index i = dim_ - 1; i >= 0; --i) {
      if (v(i) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return false;
    const Scalar lead = v(pivot);
    for (Eigen::Index i = 0; i <= pivot; ++i)
      if (v(i) != 0) v(i) /= lead;
    for (auto& row : rows_) {
      if (row.vec(pivot) == 0) continue;
      const Scalar factor = row.vec(pivot);
      for (Eigen::Index i = 0; i <= pivot; ++i)
        if (v(i) != 0) row.vec(i) -= factor * v(i);
    }
    rows_.push_back({pivot, std::move(v)});
    complement_.reset();
    return true;
  }

  Eigen::Index dim() const { return dim_; }
  Eigen::Index rank() const { return static_cast<Eigen::Index>(rows_.size()); }

  const std::vector<Eigen::Index>& complement() const {
    if (!complement_) {
      std::vector<bool> pivot(static_cast<std::size_t>(dim_), false);
      for (const auto& row : rows_) pivot[static_cast<std::size_t>(row.pivot)] = true;
      std::vector<Eigen::Index> out;
      for (Eigen::Index i = 0; i < dim_; ++i)
        if (!pivot[static_cast<std::size_t>(i)]) out.push_back(i);
      complement_ = std::move(out);
    }
    return *complement_;
  }

  /// Coordinates of v modulo the subspace, over the complement indices.
  VectorX<Scalar> reduce(VectorX<Scalar> v) const {
    eliminate(v);
    const auto& comp = complement();
    VectorX<Scalar> out(static_cast<Eigen::Index>(comp.size()));
    for (std::size_t k = 0; k < comp.size(); ++k) out(static_cast<Eigen::Index>(k)) = v(comp[k]);
    return out;
  }

 private:
  struct Row {
    Eigen::Index pivot;
    VectorX<Scalar> vec;
  };

  void eliminate(VectorX<Scalar>& v) const {
    for (const auto& row : rows_) {
      if (v(row.pivot) == 0) continue;
      const Scalar factor = v(row.pivot);
      for (Eigen::Index i = 0; i <= row.pivot; ++i)
        if (row.vec(i) != 0) v(i) -= factor * row.vec(i);
    }
  }

  Eigen::Index dim_;
  std::vector<Row> rows_;
  mutable std::optional<std::vector<Eigen::Index>> complement_;
};

/// Lexicographically smallest set of standard-basis indices whose span
/// complements span(vectors). Throws on linearly dependent input.
template <typename Scalar>
std::vector<Eigen::Index> complement_basis(const std::vector<VectorX<Scalar>>& vectors,
                                           Eigen::Index ambient_dim) {
  QuotientReducer<Scalar> reducer(ambient_dim);
  for (const auto& v : vectors)
    if (!reducer.add(v)) throw Error("dependent input");
  return reducer.complement();
}

/// Coefficients c with sum_k c_k vectors[k] == target, or nullopt when the
/// target lies outside the span. The input vectors must be independent.
template <typename Scalar>
std::optional<VectorX<Scalar>> solve_in_span(const std::vector<VectorX<Scalar>>& vectors,
                                             const VectorX<Scalar>& target) {
  const Eigen::Index dim = target.size();
  const auto k = static_cast<Eigen::Index>(vectors.size());
  MatrixX<Scalar> aug = MatrixX<Scalar>::Constant(dim, k + 1, Scalar(0));
  aug.leftCols(k) = detail::stack_columns(vectors, dim);
  aug.col(k) = target;
  const auto pivots = detail::rref_in_place(aug);
  VectorX<Scalar> coeffs = VectorX<Scalar>::Constant(k, Scalar(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == k) return std::nullopt;
    if (pivots[r] != static_cast<Eigen::Index>(r)) throw Error("dependent input");
    coeffs(pivots[r]) = aug(static_cast<Eigen::Index>(r), k);
  }
  if (static_cast<Eigen::Index>(pivots.size()) < k) throw Error("dependent input");
  return coeffs;
}

/// Exact inverse of a square matrix; throws if singular.
template <typename Derived>
MatrixX<typename Derived::Scalar> exact_inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw Error("inverse of a non-square matrix");
  MatrixX<Scalar> aug = MatrixX<Scalar>::Constant(n, 2 * n, Scalar(0));
  aug.leftCols(n) = m;
  for (Eigen::Index i = 0; i < n; ++i) aug(i, n + i) = 1;
  const auto pivots = detail::rref_in_place(aug);
  if (static_cast<Eigen::Index>(pivots.size()) < n || (n > 0 && pivots[n - 1] != n - 1))
    throw Error("singular matrix");
  return aug.rightCols(n);
}

}  // namespace hopfcalc

#endif  // HOPFCALC_LINALG_HPP
