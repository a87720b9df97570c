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

#ifndef HOPFCALC_HOPF_HPP
#define HOPFCALC_HOPF_HPP

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hopfcalc/group.hpp"
#include "hopfcalc/rational.hpp"
#include "hopfcalc/report.hpp"

namespace hopfcalc {

struct TensorTerm {
  Rational coeff;
  int left;
  int right;
  bool operator==(const TensorTerm& o) const {
    return left == o.left && right == o.right && coeff == o.coeff;
  }
};

/// Sweedler sum sum_k c_k e_{l_k} (x) e_{r_k}. Terms are left-major sorted with
/// no repeated index pair and no zero coefficient, so equality is term-wise.
class TensorElement {
 public:
  TensorElement() = default;

  void add(const Rational& coeff, int left, int right);
  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement& operator*=(const Rational& s);

  std::vector<TensorTerm> terms() const;
  bool empty() const { return terms_.empty(); }
  bool operator==(const TensorElement& o) const { return terms_ == o.terms_; }

 private:
  std::map<std::pair<int, int>, Rational> terms_;
};

/// Finite-dimensional Hopf algebra as dense structure-constant tables.
struct HopfData {
  std::string name;
  int dim = 0;
  std::vector<Vector> mult;           // mult[i * dim + j] = e_i e_j
  Vector unit;                        // 1
  std::vector<TensorElement> comult;  // comult[i] = Delta(e_i)
  Vector counit;                      // counit(i) = eps(e_i)
  Matrix antipode;                    // column j = S(e_j)
  std::vector<std::string> labels;    // printable basis names

  const Vector& product(int i, int j) const { return mult[static_cast<std::size_t>(i * dim + j)]; }
};

using HopfPtr = std::shared_ptr<const HopfData>;

/// Element of a HopfData: coefficient vector over its basis.
class Element {
 public:
  Element() = default;
  Element(HopfPtr algebra, Vector coeffs);

  static Element zero(HopfPtr algebra);
  static Element basis(HopfPtr algebra, int i);
  static Element unit(HopfPtr algebra);

  const HopfPtr& algebra() const { return algebra_; }
  const Vector& coeffs() const { return coeffs_; }
  const Rational& operator[](int i) const { return coeffs_(i); }
  int dim() const { return static_cast<int>(coeffs_.size()); }
  bool is_zero() const { return hopfcalc::is_zero(coeffs_); }

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Rational& s);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& s, Element a) { return a *= s; }
  friend Element operator-(Element a) { return a *= Rational(-1); }
  bool operator==(const Element& o) const;

 private:
  HopfPtr algebra_;
  Vector coeffs_;
};

void require_same(const HopfPtr& a, const HopfPtr& b, const char* what = "algebra mismatch");

Element multiply(const Element& x, const Element& y);
TensorElement coproduct(const Element& x);
Rational counit(const Element& x);
Element antipode(const Element& x);

/// Printable normal form, e.g. `e[e] - 2/3 * e[g]`.
std::string to_string(const Element& x);
std::string to_string(const TensorElement& t, const HopfData& left, const HopfData& right);

/// Fun(G) on delta functions: e_x e_y = delta_xy e_x, Delta(e_x) = sum_{yz=x} e_y(x)e_z.
HopfData function_hopf(const GroupTable& g);
/// Group algebra kG: x y = (xy), Delta(x) = x(x)x, S(x) = x^-1.
HopfData group_hopf(const GroupTable& g);
/// Full linear dual with transposed structure constants.
HopfData dual_hopf(const HopfData& h, std::vector<std::string> labels = {});

/// Associativity, unit, coassociativity, counit, bialgebra and antipode laws,
/// each checked on every basis element (sufficient by multilinearity).
SuiteReport check_hopf_axioms(const HopfData& h);

}  // namespace hopfcalc

#endif  // HOPFCALC_HOPF_HPP
