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

#ifndef HOPFCALC_WEDGE_HPP
#define HOPFCALC_WEDGE_HPP

#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hopfcalc/calculus.hpp"

namespace hopfcalc {

/// Braiding on invariant 2-tensors. Row (i,j), column (m,n) holds
/// <f^m_j, r^n_i>; pair (i,j) is stored at index i*n + j.
struct Braiding {
  int n = 0;
  Matrix sigma;
};

Braiding compute_braiding(const FodcData& d);

/// Basis words of the invariant exterior powers up to a maximal degree.
///
/// Degree 2 is the quotient of the invariant 2-tensors by ker(I - sigma);
/// degree d+1 is the quotient of Lambda^d (x) W by the image of that kernel
/// placed in the last slot, which together with the degree-d relations puts
/// the kernel in every adjacent slot. Basis words are the lexicographically
/// smallest complement at each degree, so prefixes of basis words are basis
/// words.
class ExteriorBasis {
 public:
  ExteriorBasis(const Braiding& b, int max_degree);

  int n() const { return n_; }
  int max_degree() const { return max_degree_; }
  /// dim Lambda^d; 0 above max_degree.
  int dim(int degree) const;
  const std::vector<std::vector<int>>& words(int degree) const;
  /// Index of a basis word, or -1.
  int word_index(std::span<const int> word) const;
  /// Coordinates of a raw word over the basis words of its degree. Words
  /// longer than max_degree reduce to zero.
  const SparseTerms& reduce(std::span<const int> word) const;
  /// dim Lambda^{max_degree+1} before truncation; zero means no truncation
  /// ever happens.
  int dim_above_max() const { return dim_above_; }
  bool complete() const { return dim_above_ == 0; }

 private:
  int n_;
  int max_degree_;
  std::vector<std::vector<std::vector<int>>> words_;
  std::vector<std::vector<SparseTerms>> reduction_;  // [degree][base-n word code]
  int dim_above_ = 0;
  SparseTerms empty_;
};

ExteriorBasis build_exterior(const FodcData& d, int max_degree);

struct WedgeOptions {
  int max_degree = 3;
  /// (x (x) y)(x' (x) y') = (-1)^{|y||x'|} xx' (x) yy'. Off only for negative controls.
  bool koszul_sign = true;
  /// Use sigma^T in place of sigma. Only for negative controls.
  bool transpose_braiding = false;
};

struct FormMonomial {
  int degree;
  int function;  // basis index in A
  int word;      // basis word index in Lambda^degree
};

/// Sparse element of Gamma (x) Gamma over pairs of form-basis indices.
using FormTensor = std::map<std::pair<int, int>, Rational>;

class GradedForm;

/// The graded algebra A + Gamma + Gamma^2 + ... truncated above max_degree,
/// with basis a (x) w^I (a a basis function, I a basis word). Holds the
/// multiplication, differential and coproduct tables of basis monomials.
class WedgeAlgebra : public std::enable_shared_from_this<WedgeAlgebra> {
 public:
  static std::shared_ptr<const WedgeAlgebra> create(FodcData fodc, WedgeOptions options = {});

  const FodcData& fodc() const { return fodc_; }
  const WedgeOptions& options() const { return options_; }
  const Braiding& braiding() const { return braiding_; }
  const ExteriorBasis& exterior() const { return exterior_; }
  int max_degree() const { return options_.max_degree; }
  int dim() const { return static_cast<int>(monomials_.size()); }
  int function_dim() const { return fodc_.paired.alg->dim; }
  const FormMonomial& monomial(int p) const { return monomials_[static_cast<std::size_t>(p)]; }
  int degree_of(int p) const { return monomials_[static_cast<std::size_t>(p)].degree; }
  int index(int degree, int function, int word) const;
  /// Half-open range of basis indices in one degree.
  std::pair<int, int> degree_range(int degree) const;

  const SparseTerms& product(int p, int q) const { return mult_[static_cast<std::size_t>(p * dim() + q)]; }
  const SparseTerms& derivative(int p) const { return d_[static_cast<std::size_t>(p)]; }
  const FormTensor& coproduct(int p) const { return coproduct_[static_cast<std::size_t>(p)]; }

  Vector multiply(const Vector& x, const Vector& y) const;
  Vector differentiate(const Vector& x) const;
  FormTensor comultiply(const Vector& x) const;
  /// Product in Gamma (x) Gamma with the configured sign rule.
  FormTensor tensor_multiply(const FormTensor& a, const FormTensor& b) const;
  /// Coordinates of the raw word w^I (with function coefficient 1).
  Vector word_form(std::span<const int> word) const;

  // Element constructors.
  GradedForm zero() const;
  GradedForm one() const;
  GradedForm basis(int p) const;
  GradedForm function(const Element& a) const;
  GradedForm omega(int i) const;
  GradedForm from_one_form(const OneForm& w) const;
  GradedForm from_vector(Vector v) const;

  std::string label(int p) const;
  /// Top-level (coefficient, body) terms of the printed normal form.
  std::vector<std::pair<Rational, std::string>> format_terms(const Vector& v) const;
  std::string format(const Vector& v) const;
  std::string format(const FormTensor& t) const;

  WedgeAlgebra(FodcData fodc, WedgeOptions options);

 private:
  void build_products();
  void build_coproducts();
  void build_derivatives();
  /// w^I b as sum over raw words K of (function, K).
  std::vector<std::pair<Vector, std::vector<int>>> move_through(std::span<const int> word,
                                                                 const Vector& b) const;
  Vector mult_functions(const Vector& a, const Vector& b) const;

  FodcData fodc_;
  WedgeOptions options_;
  Braiding braiding_;
  ExteriorBasis exterior_;
  std::vector<int> offsets_;
  std::vector<FormMonomial> monomials_;
  std::vector<Matrix> f_action_;  // f_action_[i*n+j] = matrix of (f^i_j |>) on A
  std::vector<SparseTerms> mult_;
  std::vector<SparseTerms> d_;
  std::vector<FormTensor> coproduct_;
};

using WedgePtr = std::shared_ptr<const WedgeAlgebra>;

/// Element of the truncated graded algebra.
class GradedForm {
 public:
  GradedForm() = default;
  GradedForm(WedgePtr algebra, Vector coeffs);

  const WedgePtr& algebra() const { return algebra_; }
  const Vector& coeffs() const { return coeffs_; }
  bool is_zero() const { return hopfcalc::is_zero(coeffs_); }
  /// Degree-d homogeneous component.
  GradedForm component(int degree) const;
  /// -1 for zero, the common degree if homogeneous, throws otherwise.
  int degree() const;

  GradedForm& operator+=(const GradedForm& o);
  GradedForm& operator-=(const GradedForm& o);
  GradedForm& operator*=(const Rational& s);
  friend GradedForm operator+(GradedForm a, const GradedForm& b) { return a += b; }
  friend GradedForm operator-(GradedForm a, const GradedForm& b) { return a -= b; }
  friend GradedForm operator-(GradedForm a) { return a *= Rational(-1); }
  friend GradedForm operator*(const Rational& s, GradedForm a) { return a *= s; }
  bool operator==(const GradedForm& o) const;

 private:
  WedgePtr algebra_;
  Vector coeffs_;
};

GradedForm wedge_multiply(const GradedForm& x, const GradedForm& y);
GradedForm exterior_derivative(const GradedForm& x);
FormTensor graded_coproduct(const GradedForm& x);
Rational form_counit(const GradedForm& x);
std::string to_string(const GradedForm& x);

/// Coassociativity, multiplicativity with Koszul signs and the counit law on
/// all basis monomials whose products stay within the truncation.
SuiteReport check_graded_bialgebra(const WedgeAlgebra& w);

/// d o d = 0 and graded Leibniz on basis monomials, plus associativity of the
/// wedge product.
SuiteReport check_differential(const WedgeAlgebra& w);

}  // namespace hopfcalc

#endif  // HOPFCALC_WEDGE_HPP
