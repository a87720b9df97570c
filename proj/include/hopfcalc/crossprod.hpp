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

#ifndef HOPFCALC_CROSSPROD_HPP
#define HOPFCALC_CROSSPROD_HPP

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hopfcalc/wedge.hpp"

namespace hopfcalc {

/// u_h gamma_{i1} ... gamma_{ik} in the dual of the graded algebra.
struct DualMonomial {
  int h = 0;
  std::vector<int> word;
  int degree() const { return static_cast<int>(word.size()); }
};

/// One term of a normal-ordered product: form basis index, dual basis index.
struct CrossTerm {
  int form;
  int dual;
  Rational coeff;
};

/// Dual of the truncated graded algebra and the cross product of the two.
///
/// A dual element is stored by its values on the form basis, so the pairing
/// is a dot product and products come from the graded coproduct:
/// <theta phi, rho> = <theta, rho_(1)> <phi, rho_(2)>. Dual basis index q
/// below means the functional that is 1 on form basis q and 0 elsewhere.
///
/// The dual acts on forms by
///   theta |> rho = (-1)^{|theta||rho_(1)| + |theta|(|theta|-1)/2} rho_(1) <theta, rho_(2)>,
/// and moving duals right of forms uses
///   theta rho = (-1)^{|theta_(2)||rho|} (theta_(1) |> rho) theta_(2).
class CrossAlgebra : public std::enable_shared_from_this<CrossAlgebra> {
 public:
  static std::shared_ptr<const CrossAlgebra> create(WedgePtr wedge);
  explicit CrossAlgebra(WedgePtr wedge);

  const WedgeAlgebra& wedge() const { return *wedge_; }
  const WedgePtr& wedge_ptr() const { return wedge_; }
  const FodcData& fodc() const { return wedge_->fodc(); }
  int dim() const { return wedge_->dim(); }

  // Dual side, on functional vectors.
  Vector dual_unit() const;
  Vector embed(const Element& h) const;
  Vector gamma(int i) const;
  Vector dual_multiply(const Vector& a, const Vector& b) const;
  /// <Delta theta, p (x) q> = <theta, pq>, over pairs of dual basis indices.
  FormTensor dual_coproduct(const Vector& theta) const;
  /// theta |> rho on form vectors.
  Vector act(const Vector& theta, const Vector& rho) const;
  /// Dual basis q moved right of form basis p.
  const std::vector<CrossTerm>& commute(int q, int p) const;
  const SparseTerms& dual_product(int a, int b) const {
    return dual_mult_[static_cast<std::size_t>(a * dim() + b)];
  }

  // Printable dual basis u_h gamma_I, chosen per degree by rank over
  // (word lex, h).
  const std::vector<DualMonomial>& monomials() const { return monomials_; }
  Vector monomial_vector(const DualMonomial& m) const;
  /// Coordinates of a functional over monomials().
  Vector to_monomials(const Vector& theta) const;
  std::string monomial_label(int m) const;

  std::string format_dual(const Vector& theta) const;
  std::string format_cross(const std::map<std::pair<int, int>, Rational>& terms) const;

 private:
  void build_dual_products();
  void build_monomials();
  void build_commutation();

  WedgePtr wedge_;
  std::vector<SparseTerms> dual_mult_;
  std::vector<DualMonomial> monomials_;
  std::vector<Vector> monomial_vectors_;
  std::vector<int> monomial_offsets_;  // per degree
  std::vector<Matrix> to_monomial_;    // per degree, form-coordinate block -> monomial block
  std::vector<std::vector<CrossTerm>> commute_;
};

using CrossPtr = std::shared_ptr<const CrossAlgebra>;

class DualElement {
 public:
  DualElement() = default;
  DualElement(CrossPtr algebra, Vector values);

  const CrossPtr& algebra() const { return algebra_; }
  /// Values on the form basis.
  const Vector& values() const { return values_; }
  bool is_zero() const { return hopfcalc::is_zero(values_); }
  /// Highest degree with a nonzero component, -1 for zero.
  int max_degree() const;

  DualElement& operator+=(const DualElement& o);
  DualElement& operator-=(const DualElement& o);
  DualElement& operator*=(const Rational& s);
  friend DualElement operator+(DualElement a, const DualElement& b) { return a += b; }
  friend DualElement operator-(DualElement a, const DualElement& b) { return a -= b; }
  friend DualElement operator*(const Rational& s, DualElement a) { return a *= s; }
  bool operator==(const DualElement& o) const;

 private:
  CrossPtr algebra_;
  Vector values_;
};

/// Normal-ordered element sum c (form p)(dual q) of the cross product.
class CrossElement {
 public:
  using Terms = std::map<std::pair<int, int>, Rational>;

  CrossElement() = default;
  explicit CrossElement(CrossPtr algebra, Terms terms = {});

  static CrossElement from_form(const CrossPtr& algebra, const GradedForm& rho);
  static CrossElement from_dual(const CrossPtr& algebra, const DualElement& theta);
  static CrossElement scalar(const CrossPtr& algebra, const Rational& c);

  const CrossPtr& algebra() const { return algebra_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(int form, int dual, const Rational& c);

  /// Form part if the dual part is the unit, else nullopt.
  std::optional<GradedForm> as_form() const;
  std::optional<DualElement> as_dual() const;

  CrossElement& operator+=(const CrossElement& o);
  CrossElement& operator-=(const CrossElement& o);
  CrossElement& operator*=(const Rational& s);
  friend CrossElement operator+(CrossElement a, const CrossElement& b) { return a += b; }
  friend CrossElement operator-(CrossElement a, const CrossElement& b) { return a -= b; }
  friend CrossElement operator*(const Rational& s, CrossElement a) { return a *= s; }
  bool operator==(const CrossElement& o) const;

 private:
  CrossPtr algebra_;
  Terms terms_;
};

Rational pair(const DualElement& theta, const GradedForm& rho);
DualElement dual_unit(const CrossPtr& c);
DualElement dual_from_hopf(const CrossPtr& c, const Element& h);
DualElement gamma(const CrossPtr& c, int i);
/// 1 (x) gamma_i + gamma_j (x) f^j_i, over pairs of dual basis indices.
FormTensor gamma_coproduct(const CrossPtr& c, int i);
DualElement dual_multiply(const DualElement& a, const DualElement& b);
CrossElement cross_multiply(const CrossElement& x, const CrossElement& y);

/// theta |> rho for any dual element (signed as in CrossAlgebra).
GradedForm dual_act(const DualElement& theta, const GradedForm& rho);
/// h |> rho = rho_(1) <h, rho_(2)> for h in A*.
GradedForm lie_derivative(const Element& h, const GradedForm& rho, const CrossPtr& c);
/// h |> theta = h_(1) theta S(h_(2)) for h in A*.
DualElement lie_derivative(const Element& h, const DualElement& theta);
/// Multiplicative extension (h_(1) |> rho)(h_(2) |> theta) on each term.
CrossElement lie_derivative(const Element& h, const CrossElement& x);
/// Degree-zero part of a dual element as an element of A*; throws if it has
/// components of positive degree.
Element vector_field(const DualElement& theta);
/// gamma_i |> rho
GradedForm inner_derivation(int i, const GradedForm& rho, const CrossPtr& c);

/// The cross product acting on forms: (rho theta)(tau) = rho (theta |> tau).
Vector cross_operator(const CrossElement& x, const Vector& tau);

std::string to_string(const DualElement& theta);
std::string to_string(const CrossElement& x);

}  // namespace hopfcalc

#endif  // HOPFCALC_CROSSPROD_HPP
