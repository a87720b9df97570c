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

#include "hopfcalc/crossprod.hpp"

#include <algorithm>

#include "hopfcalc/linalg.hpp"

namespace hopfcalc {

namespace {

bool odd(int k) { return k % 2 != 0; }

// (-1)^{k m + k(k-1)/2}
bool action_sign_negative(int k, int m) { return odd(k * m + k * (k - 1) / 2); }

std::vector<std::vector<int>> all_words(int n, int d) {
  std::vector<std::vector<int>> out{{}};
  for (int k = 0; k < d; ++k) {
    std::vector<std::vector<int>> next;
    for (const auto& w : out)
      for (int i = 0; i < n; ++i) {
        auto v = w;
        v.push_back(i);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

void accumulate(std::map<int, Rational>& acc, int key, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = acc.emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

}  // namespace

std::shared_ptr<const CrossAlgebra> CrossAlgebra::create(WedgePtr wedge) {
  return std::make_shared<const CrossAlgebra>(std::move(wedge));
}

CrossAlgebra::CrossAlgebra(WedgePtr wedge) : wedge_(std::move(wedge)) {
  if (!wedge_) throw Error("cross product without a form algebra");
  build_dual_products();
  build_monomials();
  build_commutation();
}

void CrossAlgebra::build_dual_products() {
  const int N = dim();
  std::vector<std::map<int, Rational>> acc(static_cast<std::size_t>(N) * static_cast<std::size_t>(N));
  for (int r = 0; r < N; ++r)
    for (const auto& [pq, c] : wedge_->coproduct(r))
      accumulate(acc[static_cast<std::size_t>(pq.first * N + pq.second)], r, c);
  dual_mult_.resize(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k)
    dual_mult_[k].assign(acc[k].begin(), acc[k].end());
}

Vector CrossAlgebra::dual_unit() const {
  const HopfData& A = *fodc().paired.alg;
  Vector out = zero_vector(dim());
  for (int x = 0; x < A.dim; ++x) out(wedge_->index(0, x, 0)) = A.counit(x);
  return out;
}

Vector CrossAlgebra::embed(const Element& h) const {
  const PairedHopf& p = fodc().paired;
  require_same(p.dual, h.algebra(), "pairing mismatch");
  const Vector vals = p.pairing.transpose() * h.coeffs();
  Vector out = zero_vector(dim());
  for (int x = 0; x < p.alg->dim; ++x) out(wedge_->index(0, x, 0)) = vals(x);
  return out;
}

Vector CrossAlgebra::gamma(int i) const {
  if (i < 0 || i >= fodc().n) throw Error("gamma index out of range");
  const HopfData& A = *fodc().paired.alg;
  Vector out = zero_vector(dim());
  if (wedge_->max_degree() < 1) return out;
  for (int x = 0; x < A.dim; ++x) out(wedge_->index(1, x, i)) = A.counit(x);
  return out;
}

Vector CrossAlgebra::dual_multiply(const Vector& a, const Vector& b) const {
  const int N = dim();
  if (a.size() != N || b.size() != N) throw Error("dual dimension mismatch");
  Vector out = zero_vector(N);
  for (int p = 0; p < N; ++p) {
    if (a(p) == 0) continue;
    for (int q = 0; q < N; ++q)
      if (b(q) != 0) add_scaled(out, dual_product(p, q), a(p) * b(q));
  }
  return out;
}

FormTensor CrossAlgebra::dual_coproduct(const Vector& theta) const {
  const int N = dim();
  FormTensor out;
  for (int p = 0; p < N; ++p)
    for (int q = 0; q < N; ++q) {
      Rational s = 0;
      for (const auto& [r, c] : wedge_->product(p, q)) s += theta(r) * c;
      if (s != 0) out.emplace(std::make_pair(p, q), s);
    }
  return out;
}

Vector CrossAlgebra::act(const Vector& theta, const Vector& rho) const {
  const int N = dim();
  Vector out = zero_vector(N);
  for (int r = 0; r < N; ++r) {
    if (rho(r) == 0) continue;
    for (const auto& [lr, c] : wedge_->coproduct(r)) {
      if (theta(lr.second) == 0) continue;
      Rational v = rho(r) * c * theta(lr.second);
      if (action_sign_negative(wedge_->degree_of(lr.second), wedge_->degree_of(lr.first))) v = -v;
      out(lr.first) += v;
    }
  }
  return out;
}

void CrossAlgebra::build_commutation() {
  const int N = dim();
  // inverse[a * N + q] = {(b, c) : (form a)(form b) has coefficient c on q}
  std::vector<std::vector<std::pair<int, Rational>>> inverse(static_cast<std::size_t>(N) *
                                                             static_cast<std::size_t>(N));
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (const auto& [q, c] : wedge_->product(a, b))
        inverse[static_cast<std::size_t>(a * N + q)].emplace_back(b, c);

  commute_.assign(static_cast<std::size_t>(N) * static_cast<std::size_t>(N), {});
  for (int p = 0; p < N; ++p) {
    const int dp = wedge_->degree_of(p);
    for (int q = 0; q < N; ++q) {
      std::map<std::pair<int, int>, Rational> acc;
      for (const auto& [lr, c1] : wedge_->coproduct(p)) {
        const auto& hits = inverse[static_cast<std::size_t>(lr.second * N + q)];
        if (hits.empty()) continue;
        Rational s = c1;
        if (action_sign_negative(wedge_->degree_of(lr.second), wedge_->degree_of(lr.first))) s = -s;
        for (const auto& [b, c2] : hits) {
          Rational v = s * c2;
          if (odd(wedge_->degree_of(b) * dp)) v = -v;
          auto [it, fresh] = acc.emplace(std::make_pair(lr.first, b), v);
          if (!fresh) {
            it->second += v;
            if (it->second == 0) acc.erase(it);
          }
        }
      }
      auto& out = commute_[static_cast<std::size_t>(q * N + p)];
      for (const auto& [k, c] : acc) out.push_back({k.first, k.second, c});
    }
  }
}

const std::vector<CrossTerm>& CrossAlgebra::commute(int q, int p) const {
  return commute_[static_cast<std::size_t>(q * dim() + p)];
}

Vector CrossAlgebra::monomial_vector(const DualMonomial& m) const {
  const HopfData& Astar = *fodc().paired.dual;
  if (m.h < 0 || m.h >= Astar.dim) throw Error("dual basis index out of range");
  Vector v = embed(Element::basis(fodc().paired.dual, m.h));
  for (int i : m.word) v = dual_multiply(v, gamma(i));
  return v;
}

void CrossAlgebra::build_monomials() {
  const int na = fodc().paired.dual->dim;
  const int n = fodc().n;
  for (int d = 0; d <= wedge_->max_degree(); ++d) {
    monomial_offsets_.push_back(static_cast<int>(monomials_.size()));
    const auto [lo, hi] = wedge_->degree_range(d);
    const int block = hi - lo;
    QuotientReducer<Rational> span(block);
    std::vector<Vector> columns;
    for (const auto& w : all_words(n, d)) {
      if (static_cast<int>(columns.size()) == block) break;
      Vector gw = dual_unit();
      for (int i : w) gw = dual_multiply(gw, gamma(i));
      for (int h = 0; h < na && static_cast<int>(columns.size()) < block; ++h) {
        const Vector v = dual_multiply(embed(Element::basis(fodc().paired.dual, h)), gw);
        const Vector part = v.segment(lo, block);
        if (!span.add(part)) continue;
        monomials_.push_back({h, w});
        monomial_vectors_.push_back(v);
        columns.push_back(part);
      }
    }
    if (static_cast<int>(columns.size()) != block) throw Error("gamma words do not span the dual");
    Matrix m = zero_matrix(block, block);
    for (int k = 0; k < block; ++k) m.col(k) = columns[static_cast<std::size_t>(k)];
    to_monomial_.push_back(block == 0 ? m : exact_inverse(m));
  }
  monomial_offsets_.push_back(static_cast<int>(monomials_.size()));
}

Vector CrossAlgebra::to_monomials(const Vector& theta) const {
  Vector out = zero_vector(static_cast<Eigen::Index>(monomials_.size()));
  for (int d = 0; d <= wedge_->max_degree(); ++d) {
    const auto [lo, hi] = wedge_->degree_range(d);
    if (hi == lo) continue;
    out.segment(monomial_offsets_[static_cast<std::size_t>(d)], hi - lo) =
        to_monomial_[static_cast<std::size_t>(d)] * theta.segment(lo, hi - lo);
  }
  return out;
}

std::string CrossAlgebra::monomial_label(int m) const {
  const DualMonomial& mono = monomials_[static_cast<std::size_t>(m)];
  const HopfData& Astar = *fodc().paired.dual;
  std::string out;
  if (Astar.unit != unit_vector(Astar.dim, mono.h)) out = Astar.labels[static_cast<std::size_t>(mono.h)];
  for (int i : mono.word) {
    if (!out.empty()) out += " * ";
    out += "gamma[" + std::to_string(i + 1) + "]";
  }
  return out.empty() ? "1" : out;
}

std::string CrossAlgebra::format_dual(const Vector& theta) const {
  const Vector c = to_monomials(theta);
  std::vector<std::pair<Rational, std::string>> terms;
  for (int m = 0; m < c.size(); ++m)
    if (c(m) != 0) terms.emplace_back(c(m), monomial_label(m));
  return format_sum(terms);
}

std::string CrossAlgebra::format_cross(const std::map<std::pair<int, int>, Rational>& terms) const {
  const int N = dim();
  // Per form basis p: the dual part as monomial coordinates.
  std::map<int, Vector> by_form;
  for (const auto& [pq, c] : terms) {
    auto it = by_form.try_emplace(pq.first, zero_vector(N)).first;
    it->second(pq.second) += c;
  }
  // Regroup as (monomial, form vector) so each monomial prints with its form part.
  std::map<int, Vector> by_monomial;
  for (const auto& [p, theta] : by_form) {
    const Vector mc = to_monomials(theta);
    for (int m = 0; m < mc.size(); ++m) {
      if (mc(m) == 0) continue;
      auto it = by_monomial.try_emplace(m, zero_vector(N)).first;
      it->second(p) += mc(m);
    }
  }
  std::vector<std::pair<Rational, std::string>> out;
  for (const auto& [m, form] : by_monomial) {
    const std::string label = monomial_label(m);
    for (auto& [c, body] : wedge_->format_terms(form)) {
      if (label == "1")
        out.emplace_back(c, body);
      else
        out.emplace_back(c, body == "1" ? label : body + " * " + label);
    }
  }
  return format_sum(out);
}

// ---------------------------------------------------------------------------

DualElement::DualElement(CrossPtr algebra, Vector values) : algebra_(std::move(algebra)), values_(std::move(values)) {
  if (!algebra_) throw Error("dual element without algebra");
  if (values_.size() != algebra_->dim()) throw Error("dual dimension mismatch");
}

int DualElement::max_degree() const {
  int deg = -1;
  for (int p = 0; p < values_.size(); ++p)
    if (values_(p) != 0) deg = std::max(deg, algebra_->wedge().degree_of(p));
  return deg;
}

DualElement& DualElement::operator+=(const DualElement& o) {
  if (algebra_ != o.algebra_) throw Error("algebra mismatch");
  values_ += o.values_;
  return *this;
}

DualElement& DualElement::operator-=(const DualElement& o) {
  if (algebra_ != o.algebra_) throw Error("algebra mismatch");
  values_ -= o.values_;
  return *this;
}

DualElement& DualElement::operator*=(const Rational& s) {
  values_ *= s;
  return *this;
}

bool DualElement::operator==(const DualElement& o) const {
  return algebra_ == o.algebra_ && values_ == o.values_;
}

// ---------------------------------------------------------------------------

CrossElement::CrossElement(CrossPtr algebra, Terms terms) : algebra_(std::move(algebra)), terms_(std::move(terms)) {
  if (!algebra_) throw Error("cross element without algebra");
  for (auto it = terms_.begin(); it != terms_.end();) it = it->second == 0 ? terms_.erase(it) : std::next(it);
}

void CrossElement::add(int form, int dual, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(std::make_pair(form, dual), c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CrossElement CrossElement::from_form(const CrossPtr& algebra, const GradedForm& rho) {
  if (rho.algebra() != algebra->wedge_ptr()) throw Error("algebra mismatch");
  CrossElement out(algebra);
  const Vector u = algebra->dual_unit();
  for (int p = 0; p < rho.coeffs().size(); ++p) {
    if (rho.coeffs()(p) == 0) continue;
    for (int q = 0; q < u.size(); ++q) out.add(p, q, rho.coeffs()(p) * u(q));
  }
  return out;
}

CrossElement CrossElement::from_dual(const CrossPtr& algebra, const DualElement& theta) {
  if (theta.algebra() != algebra) throw Error("algebra mismatch");
  CrossElement out(algebra);
  const GradedForm one = algebra->wedge().one();
  for (int p = 0; p < one.coeffs().size(); ++p) {
    if (one.coeffs()(p) == 0) continue;
    for (int q = 0; q < theta.values().size(); ++q) out.add(p, q, one.coeffs()(p) * theta.values()(q));
  }
  return out;
}

CrossElement CrossElement::scalar(const CrossPtr& algebra, const Rational& c) {
  CrossElement out = from_form(algebra, algebra->wedge().one());
  out *= c;
  return out;
}

std::optional<GradedForm> CrossElement::as_form() const {
  // Solve x = rho (x) unit: every form row must be a multiple of the unit.
  const Vector u = algebra_->dual_unit();
  int pivot = 0;
  while (pivot < u.size() && u(pivot) == 0) ++pivot;
  Vector rho = zero_vector(algebra_->dim());
  for (const auto& [pq, c] : terms_)
    if (pq.second == pivot) rho(pq.first) += c / u(pivot);
  const CrossElement back = from_form(algebra_, algebra_->wedge().from_vector(rho));
  if (!(back == *this)) return std::nullopt;
  return algebra_->wedge().from_vector(rho);
}

std::optional<DualElement> CrossElement::as_dual() const {
  const GradedForm one = algebra_->wedge().one();
  int pivot = 0;
  while (pivot < one.coeffs().size() && one.coeffs()(pivot) == 0) ++pivot;
  Vector theta = zero_vector(algebra_->dim());
  for (const auto& [pq, c] : terms_)
    if (pq.first == pivot) theta(pq.second) += c / one.coeffs()(pivot);
  DualElement t(algebra_, theta);
  if (!(from_dual(algebra_, t) == *this)) return std::nullopt;
  return t;
}

CrossElement& CrossElement::operator+=(const CrossElement& o) {
  if (algebra_ != o.algebra_) throw Error("algebra mismatch");
  for (const auto& [pq, c] : o.terms_) add(pq.first, pq.second, c);
  return *this;
}

CrossElement& CrossElement::operator-=(const CrossElement& o) {
  if (algebra_ != o.algebra_) throw Error("algebra mismatch");
  for (const auto& [pq, c] : o.terms_) add(pq.first, pq.second, -c);
  return *this;
}

CrossElement& CrossElement::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [pq, c] : terms_) c *= s;
  return *this;
}

bool CrossElement::operator==(const CrossElement& o) const {
  return algebra_ == o.algebra_ && terms_ == o.terms_;
}

// ---------------------------------------------------------------------------

Rational pair(const DualElement& theta, const GradedForm& rho) {
  if (rho.algebra() != theta.algebra()->wedge_ptr()) throw Error("algebra mismatch");
  return theta.values().dot(rho.coeffs());
}

DualElement dual_unit(const CrossPtr& c) { return DualElement(c, c->dual_unit()); }

DualElement dual_from_hopf(const CrossPtr& c, const Element& h) { return DualElement(c, c->embed(h)); }

DualElement gamma(const CrossPtr& c, int i) { return DualElement(c, c->gamma(i)); }

FormTensor gamma_coproduct(const CrossPtr& c, int i) {
  const FodcData& d = c->fodc();
  if (i < 0 || i >= d.n) throw Error("gamma index out of range");
  FormTensor out;
  auto add_outer = [&](const Vector& a, const Vector& b) {
    for (int p = 0; p < a.size(); ++p) {
      if (a(p) == 0) continue;
      for (int q = 0; q < b.size(); ++q) {
        if (b(q) == 0) continue;
        auto [it, fresh] = out.emplace(std::make_pair(p, q), a(p) * b(q));
        if (!fresh) {
          it->second += a(p) * b(q);
          if (it->second == 0) out.erase(it);
        }
      }
    }
  };
  add_outer(c->dual_unit(), c->gamma(i));
  for (int j = 0; j < d.n; ++j) add_outer(c->gamma(j), c->embed(d.f[j][i]));
  return out;
}

DualElement dual_multiply(const DualElement& a, const DualElement& b) {
  if (a.algebra() != b.algebra()) throw Error("algebra mismatch");
  return DualElement(a.algebra(), a.algebra()->dual_multiply(a.values(), b.values()));
}

CrossElement cross_multiply(const CrossElement& x, const CrossElement& y) {
  if (x.algebra() != y.algebra()) throw Error("algebra mismatch");
  const CrossAlgebra& alg = *x.algebra();
  const WedgeAlgebra& w = alg.wedge();
  CrossElement out(x.algebra());
  for (const auto& [pq, c] : x.terms())
    for (const auto& [pq2, c2] : y.terms())
      for (const CrossTerm& t : alg.commute(pq.second, pq2.first)) {
        const SparseTerms& forms = w.product(pq.first, t.form);
        if (forms.empty()) continue;
        const SparseTerms& duals = alg.dual_product(t.dual, pq2.second);
        if (duals.empty()) continue;
        const Rational s = c * c2 * t.coeff;
        for (const auto& [f, cf] : forms)
          for (const auto& [g, cg] : duals) out.add(f, g, s * cf * cg);
      }
  return out;
}

GradedForm dual_act(const DualElement& theta, const GradedForm& rho) {
  if (rho.algebra() != theta.algebra()->wedge_ptr()) throw Error("algebra mismatch");
  return rho.algebra()->from_vector(theta.algebra()->act(theta.values(), rho.coeffs()));
}

GradedForm lie_derivative(const Element& h, const GradedForm& rho, const CrossPtr& c) {
  return dual_act(dual_from_hopf(c, h), rho);
}

DualElement lie_derivative(const Element& h, const DualElement& theta) {
  const CrossPtr& c = theta.algebra();
  const PairedHopf& p = c->fodc().paired;
  require_same(p.dual, h.algebra(), "Lie derivative index must be a vector field");
  DualElement out(c, zero_vector(c->dim()));
  for (const auto& t : coproduct(h).terms()) {
    const DualElement left = dual_from_hopf(c, Element::basis(p.dual, t.left));
    const DualElement right = dual_from_hopf(c, antipode(Element::basis(p.dual, t.right)));
    out += t.coeff * dual_multiply(dual_multiply(left, theta), right);
  }
  return out;
}

CrossElement lie_derivative(const Element& h, const CrossElement& x) {
  const CrossPtr& c = x.algebra();
  const PairedHopf& p = c->fodc().paired;
  require_same(p.dual, h.algebra(), "Lie derivative index must be a vector field");
  const WedgeAlgebra& w = c->wedge();
  CrossElement out(c);
  for (const auto& t : coproduct(h).terms()) {
    const Element h1 = Element::basis(p.dual, t.left);
    const Element h2 = Element::basis(p.dual, t.right);
    for (const auto& [pq, coeff] : x.terms()) {
      const GradedForm rho = lie_derivative(h1, w.basis(pq.first), c);
      const DualElement theta = lie_derivative(h2, DualElement(c, unit_vector(c->dim(), pq.second)));
      for (int f = 0; f < rho.coeffs().size(); ++f) {
        if (rho.coeffs()(f) == 0) continue;
        for (int g = 0; g < theta.values().size(); ++g)
          out.add(f, g, t.coeff * coeff * rho.coeffs()(f) * theta.values()(g));
      }
    }
  }
  return out;
}

Element vector_field(const DualElement& theta) {
  const CrossAlgebra& c = *theta.algebra();
  const PairedHopf& p = c.fodc().paired;
  if (theta.max_degree() > 0) throw Error("Lie derivative index must be a vector field");
  Vector vals = zero_vector(p.alg->dim);
  for (int x = 0; x < p.alg->dim; ++x) vals(x) = theta.values()(c.wedge().index(0, x, 0));
  // <h, e_x> = (P^T h)_x
  return Element(p.dual, exact_inverse(Matrix(p.pairing.transpose())) * vals);
}

GradedForm inner_derivation(int i, const GradedForm& rho, const CrossPtr& c) {
  return dual_act(gamma(c, i), rho);
}

Vector cross_operator(const CrossElement& x, const Vector& tau) {
  const CrossAlgebra& c = *x.algebra();
  const WedgeAlgebra& w = c.wedge();
  Vector out = zero_vector(c.dim());
  for (const auto& [pq, coeff] : x.terms()) {
    const Vector moved = c.act(unit_vector(c.dim(), pq.second), tau);
    if (hopfcalc::is_zero(moved)) continue;
    out += coeff * w.multiply(unit_vector(c.dim(), pq.first), moved);
  }
  return out;
}

std::string to_string(const DualElement& theta) { return theta.algebra()->format_dual(theta.values()); }

std::string to_string(const CrossElement& x) { return x.algebra()->format_cross(x.terms()); }

}  // namespace hopfcalc
