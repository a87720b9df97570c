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

#include "hopfcalc/hopf.hpp"

#include <array>

namespace hopfcalc {

// ---------------------------------------------------------------------------
// TensorElement

void TensorElement::add(const Rational& coeff, int left, int right) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace({left, right}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  for (const auto& [key, c] : o.terms_) add(c, key.first, key.second);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  for (const auto& [key, c] : o.terms_) add(-c, key.first, key.second);
  return *this;
}

TensorElement& TensorElement::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= s;
  return *this;
}

std::vector<TensorTerm> TensorElement::terms() const {
  std::vector<TensorTerm> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_) out.push_back({c, key.first, key.second});
  return out;
}

// ---------------------------------------------------------------------------
// Element

Element::Element(HopfPtr algebra, Vector coeffs) : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
  if (!algebra_) throw Error("element without algebra");
  if (coeffs_.size() != algebra_->dim) throw Error("coefficient vector has wrong length");
}

Element Element::zero(HopfPtr algebra) {
  const int n = algebra->dim;
  return Element(std::move(algebra), zero_vector(n));
}

Element Element::basis(HopfPtr algebra, int i) {
  const int n = algebra->dim;
  if (i < 0 || i >= n) throw Error("basis index out of range");
  return Element(std::move(algebra), unit_vector(n, i));
}

Element Element::unit(HopfPtr algebra) {
  Vector u = algebra->unit;
  return Element(std::move(algebra), std::move(u));
}

void require_same(const HopfPtr& a, const HopfPtr& b, const char* what) {
  if (a.get() != b.get()) throw Error(what);
}

Element& Element::operator+=(const Element& o) {
  require_same(algebra_, o.algebra_);
  coeffs_ += o.coeffs_;
  return *this;
}

Element& Element::operator-=(const Element& o) {
  require_same(algebra_, o.algebra_);
  coeffs_ -= o.coeffs_;
  return *this;
}

Element& Element::operator*=(const Rational& s) {
  coeffs_ *= s;
  return *this;
}

bool Element::operator==(const Element& o) const {
  return algebra_.get() == o.algebra_.get() && coeffs_ == o.coeffs_;
}

// ---------------------------------------------------------------------------
// Structure maps

Element multiply(const Element& x, const Element& y) {
  require_same(x.algebra(), y.algebra());
  const HopfData& h = *x.algebra();
  Vector out = zero_vector(h.dim);
  for (int i = 0; i < h.dim; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < h.dim; ++j) {
      if (y[j] == 0) continue;
      out += (x[i] * y[j]) * h.product(i, j);
    }
  }
  return Element(x.algebra(), std::move(out));
}

TensorElement coproduct(const Element& x) {
  const HopfData& h = *x.algebra();
  TensorElement out;
  for (int i = 0; i < h.dim; ++i) {
    if (x[i] == 0) continue;
    TensorElement t = h.comult[static_cast<std::size_t>(i)];
    t *= x[i];
    out += t;
  }
  return out;
}

Rational counit(const Element& x) { return x.algebra()->counit.dot(x.coeffs()); }

Element antipode(const Element& x) {
  return Element(x.algebra(), x.algebra()->antipode * x.coeffs());
}

std::string to_string(const Element& x) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (int i = 0; i < x.dim(); ++i) terms.emplace_back(x[i], x.algebra()->labels[static_cast<std::size_t>(i)]);
  return format_sum(terms);
}

std::string to_string(const TensorElement& t, const HopfData& left, const HopfData& right) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& term : t.terms())
    terms.emplace_back(term.coeff, "(" + left.labels[static_cast<std::size_t>(term.left)] + " | " +
                                       right.labels[static_cast<std::size_t>(term.right)] + ")");
  return format_sum(terms);
}

// ---------------------------------------------------------------------------
// Constructors

HopfData function_hopf(const GroupTable& g) {
  const int n = g.order();
  HopfData h;
  h.name = "Fun(G)";
  h.dim = n;
  h.mult.assign(static_cast<std::size_t>(n * n), zero_vector(n));
  for (int x = 0; x < n; ++x) h.mult[static_cast<std::size_t>(x * n + x)](x) = 1;
  h.unit = Vector::Constant(n, Rational(1));
  h.comult.resize(static_cast<std::size_t>(n));
  for (int y = 0; y < n; ++y)
    for (int z = 0; z < n; ++z) h.comult[static_cast<std::size_t>(g.mul(y, z))].add(1, y, z);
  h.counit = unit_vector(n, g.identity());
  h.antipode = zero_matrix(n, n);
  for (int x = 0; x < n; ++x) h.antipode(g.inverse(x), x) = 1;
  for (int x = 0; x < n; ++x) h.labels.push_back("e[" + g.name(x) + "]");
  return h;
}

HopfData group_hopf(const GroupTable& g) {
  const int n = g.order();
  HopfData h;
  h.name = "kG";
  h.dim = n;
  h.mult.assign(static_cast<std::size_t>(n * n), zero_vector(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) h.mult[static_cast<std::size_t>(x * n + y)](g.mul(x, y)) = 1;
  h.unit = unit_vector(n, g.identity());
  h.comult.resize(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) h.comult[static_cast<std::size_t>(x)].add(1, x, x);
  h.counit = Vector::Constant(n, Rational(1));
  h.antipode = zero_matrix(n, n);
  for (int x = 0; x < n; ++x) h.antipode(g.inverse(x), x) = 1;
  for (int x = 0; x < n; ++x) h.labels.push_back("u[" + g.name(x) + "]");
  return h;
}

HopfData dual_hopf(const HopfData& h, std::vector<std::string> labels) {
  const int n = h.dim;
  HopfData d;
  d.name = h.name + "*";
  d.dim = n;
  d.mult.assign(static_cast<std::size_t>(n * n), zero_vector(n));
  for (int k = 0; k < n; ++k)
    for (const auto& t : h.comult[static_cast<std::size_t>(k)].terms())
      d.mult[static_cast<std::size_t>(t.left * n + t.right)](k) += t.coeff;
  d.unit = h.counit;
  d.comult.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Rational& c = h.product(i, j)(k);
        if (c != 0) d.comult[static_cast<std::size_t>(k)].add(c, i, j);
      }
  d.counit = h.unit;
  d.antipode = h.antipode.transpose();
  if (labels.empty())
    for (int i = 0; i < n; ++i) labels.push_back("(" + h.labels[static_cast<std::size_t>(i)] + ")*");
  d.labels = std::move(labels);
  return d;
}

// ---------------------------------------------------------------------------
// Axiom checks

namespace {

using Triple = std::map<std::array<int, 3>, Rational>;

void add_to(Triple& t, const std::array<int, 3>& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = t.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

std::string to_string(const Triple& t, const HopfData& h) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [k, c] : t)
    terms.emplace_back(c, "(" + h.labels[static_cast<std::size_t>(k[0])] + " | " +
                              h.labels[static_cast<std::size_t>(k[1])] + " | " +
                              h.labels[static_cast<std::size_t>(k[2])] + ")");
  return format_sum(terms);
}

Vector mult_vec(const HopfData& h, const Vector& x, const Vector& y) {
  Vector out = zero_vector(h.dim);
  for (int i = 0; i < h.dim; ++i) {
    if (x(i) == 0) continue;
    for (int j = 0; j < h.dim; ++j)
      if (y(j) != 0) out += (x(i) * y(j)) * h.product(i, j);
  }
  return out;
}

TensorElement tensor_product(const HopfData& h, const TensorElement& a, const TensorElement& b) {
  TensorElement out;
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) {
      const Vector& l = h.product(s.left, t.left);
      const Vector& r = h.product(s.right, t.right);
      for (int i = 0; i < h.dim; ++i) {
        if (l(i) == 0) continue;
        for (int j = 0; j < h.dim; ++j)
          if (r(j) != 0) out.add(s.coeff * t.coeff * l(i) * r(j), i, j);
      }
    }
  return out;
}

std::string vec_string(const HopfData& h, const Vector& v) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (int i = 0; i < h.dim; ++i) terms.emplace_back(v(i), h.labels[static_cast<std::size_t>(i)]);
  return format_sum(terms);
}

}  // namespace

SuiteReport check_hopf_axioms(const HopfData& h) {
  SuiteReport rep;
  rep.suite = "hopf_axioms[" + h.name + "]";
  rep.note = "basis elements suffice by multilinearity";
  const int n = h.dim;
  const auto& lab = h.labels;
  auto L = [&](int i) { return lab[static_cast<std::size_t>(i)]; };
  auto basis = [&](int i) { return unit_vector(n, i); };

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vector lhs = mult_vec(h, h.product(i, j), basis(k));
        Vector rhs = mult_vec(h, basis(i), h.product(j, k));
        rep.add("associativity " + L(i) + "," + L(j) + "," + L(k), lhs == rhs, vec_string(h, lhs),
                vec_string(h, rhs));
      }

  for (int i = 0; i < n; ++i) {
    Vector left = mult_vec(h, h.unit, basis(i));
    Vector right = mult_vec(h, basis(i), h.unit);
    rep.add("unit_left " + L(i), left == basis(i), vec_string(h, left), L(i));
    rep.add("unit_right " + L(i), right == basis(i), vec_string(h, right), L(i));
  }

  for (int i = 0; i < n; ++i) {
    Triple lhs, rhs;
    for (const auto& t : h.comult[static_cast<std::size_t>(i)].terms()) {
      for (const auto& s : h.comult[static_cast<std::size_t>(t.left)].terms())
        add_to(lhs, {s.left, s.right, t.right}, t.coeff * s.coeff);
      for (const auto& s : h.comult[static_cast<std::size_t>(t.right)].terms())
        add_to(rhs, {t.left, s.left, s.right}, t.coeff * s.coeff);
    }
    rep.add("coassociativity " + L(i), lhs == rhs, to_string(lhs, h), to_string(rhs, h));
  }

  for (int i = 0; i < n; ++i) {
    Vector left = zero_vector(n), right = zero_vector(n);
    for (const auto& t : h.comult[static_cast<std::size_t>(i)].terms()) {
      left(t.right) += t.coeff * h.counit(t.left);
      right(t.left) += t.coeff * h.counit(t.right);
    }
    rep.add("counit_left " + L(i), left == basis(i), vec_string(h, left), L(i));
    rep.add("counit_right " + L(i), right == basis(i), vec_string(h, right), L(i));
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      TensorElement lhs;
      const Vector& p = h.product(i, j);
      for (int k = 0; k < n; ++k) {
        if (p(k) == 0) continue;
        TensorElement t = h.comult[static_cast<std::size_t>(k)];
        t *= p(k);
        lhs += t;
      }
      TensorElement rhs =
          tensor_product(h, h.comult[static_cast<std::size_t>(i)], h.comult[static_cast<std::size_t>(j)]);
      rep.add("coproduct_multiplicative " + L(i) + "," + L(j), lhs == rhs, to_string(lhs, h, h),
              to_string(rhs, h, h));
      Rational el = h.counit.dot(p);
      Rational er = h.counit(i) * h.counit(j);
      rep.add("counit_multiplicative " + L(i) + "," + L(j), el == er, to_string(el), to_string(er));
    }
  {
    TensorElement lhs;
    for (int k = 0; k < n; ++k) {
      if (h.unit(k) == 0) continue;
      TensorElement t = h.comult[static_cast<std::size_t>(k)];
      t *= h.unit(k);
      lhs += t;
    }
    TensorElement rhs;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) rhs.add(h.unit(a) * h.unit(b), a, b);
    rep.add("coproduct_unit", lhs == rhs, to_string(lhs, h, h), to_string(rhs, h, h));
    Rational eu = h.counit.dot(h.unit);
    rep.add("counit_unit", eu == 1, to_string(eu), "1");
  }

  for (int i = 0; i < n; ++i) {
    Vector left = zero_vector(n), right = zero_vector(n);
    for (const auto& t : h.comult[static_cast<std::size_t>(i)].terms()) {
      left += t.coeff * mult_vec(h, h.antipode.col(t.left), basis(t.right));
      right += t.coeff * mult_vec(h, basis(t.left), h.antipode.col(t.right));
    }
    Vector expected = h.counit(i) * h.unit;
    rep.add("antipode_left " + L(i), left == expected, vec_string(h, left), vec_string(h, expected));
    rep.add("antipode_right " + L(i), right == expected, vec_string(h, right), vec_string(h, expected));
  }
  return rep;
}

}  // namespace hopfcalc
