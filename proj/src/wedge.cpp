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

#include "hopfcalc/wedge.hpp"

#include <array>
#include <map>

#include "hopfcalc/linalg.hpp"

namespace hopfcalc {

namespace {

std::size_t word_code(std::span<const int> word, int n) {
  std::size_t code = 0;
  for (int c : word) code = code * static_cast<std::size_t>(n) + static_cast<std::size_t>(c);
  return code;
}

std::size_t power(int n, int d) {
  std::size_t p = 1;
  for (int k = 0; k < d; ++k) p *= static_cast<std::size_t>(n);
  return p;
}

SparseTerms sparse_of(const VectorX<Rational>& v) { return to_sparse(v); }

std::string word_label(const std::vector<int>& word) {
  std::string out;
  for (int c : word) {
    if (!out.empty()) out += " * ";
    out += "w[" + std::to_string(c + 1) + "]";
  }
  return out;
}

void add_term(FormTensor& t, int p, int q, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = t.emplace(std::make_pair(p, q), c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

}  // namespace

Braiding compute_braiding(const FodcData& d) {
  const int n = d.n;
  Braiding b{n, zero_matrix(n * n, n * n)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < n; ++m)
        for (int k = 0; k < n; ++k)
          b.sigma(i * n + j, m * n + k) = d.paired.pair(d.f[m][j], d.r[k][i]);
  return b;
}

ExteriorBasis::ExteriorBasis(const Braiding& b, int max_degree) : n_(b.n), max_degree_(max_degree) {
  if (max_degree < 1) throw Error("max_degree must be at least 1");
  const int n = n_;
  const Matrix rel = Matrix::Identity(n * n, n * n) - b.sigma;
  const std::vector<Vector> kernel = kernel_basis(rel);

  words_.resize(static_cast<std::size_t>(max_degree + 1));
  reduction_.resize(static_cast<std::size_t>(max_degree + 1));
  words_[0] = {{}};
  reduction_[0] = {SparseTerms{{0, Rational(1)}}};
  for (int i = 0; i < n; ++i) {
    words_[1].push_back({i});
    reduction_[1].push_back(SparseTerms{{i, Rational(1)}});
  }

  // Lambda^{d+1} = (Lambda^d (x) W) / span{ sum_ab k_ab reduce(u a) (x) e_b }
  for (int d = 1; d <= max_degree; ++d) {
    const int dim_d = static_cast<int>(words_[static_cast<std::size_t>(d)].size());
    const Eigen::Index ambient = static_cast<Eigen::Index>(dim_d) * n;
    QuotientReducer<Rational> reducer(ambient);
    if (ambient > 0) {
      const std::size_t prefixes = power(n, d - 1);
      for (std::size_t u = 0; u < prefixes; ++u) {
        for (const Vector& k : kernel) {
          Vector v = zero_vector(ambient);
          for (int a = 0; a < n; ++a)
            for (int bb = 0; bb < n; ++bb) {
              const Rational& c = k(a * n + bb);
              if (c == 0) continue;
              const std::size_t code = u * static_cast<std::size_t>(n) + static_cast<std::size_t>(a);
              for (const auto& [L, cl] : reduction_[static_cast<std::size_t>(d)][code])
                v(static_cast<Eigen::Index>(L) * n + bb) += c * cl;
            }
          reducer.add(std::move(v));
        }
      }
    }
    const auto& comp = reducer.complement();
    if (d == max_degree) {
      dim_above_ = static_cast<int>(comp.size());
      break;
    }
    auto& next_words = words_[static_cast<std::size_t>(d + 1)];
    for (Eigen::Index c : comp) {
      std::vector<int> w = words_[static_cast<std::size_t>(d)][static_cast<std::size_t>(c / n)];
      w.push_back(static_cast<int>(c % n));
      next_words.push_back(std::move(w));
    }
    auto& next_red = reduction_[static_cast<std::size_t>(d + 1)];
    const std::size_t raw = power(n, d + 1);
    next_red.resize(raw);
    for (std::size_t code = 0; code < raw; ++code) {
      const std::size_t prefix = code / static_cast<std::size_t>(n);
      const int last = static_cast<int>(code % static_cast<std::size_t>(n));
      Vector v = zero_vector(ambient);
      for (const auto& [L, cl] : reduction_[static_cast<std::size_t>(d)][prefix])
        v(static_cast<Eigen::Index>(L) * n + last) += cl;
      next_red[code] = sparse_of(reducer.reduce(std::move(v)));
    }
  }
}

int ExteriorBasis::dim(int degree) const {
  if (degree < 0 || degree > max_degree_) return 0;
  return static_cast<int>(words_[static_cast<std::size_t>(degree)].size());
}

const std::vector<std::vector<int>>& ExteriorBasis::words(int degree) const {
  if (degree < 0 || degree > max_degree_) throw Error("degree out of range");
  return words_[static_cast<std::size_t>(degree)];
}

int ExteriorBasis::word_index(std::span<const int> word) const {
  const int d = static_cast<int>(word.size());
  if (d > max_degree_) return -1;
  const auto& ws = words_[static_cast<std::size_t>(d)];
  for (std::size_t k = 0; k < ws.size(); ++k)
    if (std::equal(ws[k].begin(), ws[k].end(), word.begin(), word.end())) return static_cast<int>(k);
  return -1;
}

const SparseTerms& ExteriorBasis::reduce(std::span<const int> word) const {
  const int d = static_cast<int>(word.size());
  if (d > max_degree_) return empty_;
  for (int c : word)
    if (c < 0 || c >= n_) throw Error("form index out of range");
  return reduction_[static_cast<std::size_t>(d)][word_code(word, n_)];
}

ExteriorBasis build_exterior(const FodcData& d, int max_degree) {
  return ExteriorBasis(compute_braiding(d), max_degree);
}

namespace {

Braiding configured_braiding(const FodcData& d, const WedgeOptions& o) {
  Braiding b = compute_braiding(d);
  if (o.transpose_braiding) b.sigma.transposeInPlace();
  return b;
}

}  // namespace

std::shared_ptr<const WedgeAlgebra> WedgeAlgebra::create(FodcData fodc, WedgeOptions options) {
  return std::make_shared<const WedgeAlgebra>(std::move(fodc), options);
}

WedgeAlgebra::WedgeAlgebra(FodcData fodc, WedgeOptions options)
    : fodc_(std::move(fodc)),
      options_(options),
      braiding_(configured_braiding(fodc_, options_)),
      exterior_(braiding_, options_.max_degree) {
  const int na = function_dim();
  const int n = fodc_.n;
  offsets_.push_back(0);
  for (int d = 0; d <= max_degree(); ++d) {
    for (int x = 0; x < na; ++x)
      for (int w = 0; w < exterior_.dim(d); ++w) monomials_.push_back({d, x, w});
    offsets_.push_back(static_cast<int>(monomials_.size()));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix m = zero_matrix(na, na);
      for (int a = 0; a < na; ++a)
        m.col(a) = left_act(fodc_.paired, fodc_.f[i][j], Element::basis(fodc_.paired.alg, a)).coeffs();
      f_action_.push_back(std::move(m));
    }
  build_products();
  build_coproducts();
  build_derivatives();
}

int WedgeAlgebra::index(int degree, int function, int word) const {
  if (degree < 0 || degree > max_degree()) throw Error("degree out of range");
  return offsets_[static_cast<std::size_t>(degree)] + function * exterior_.dim(degree) + word;
}

std::pair<int, int> WedgeAlgebra::degree_range(int degree) const {
  if (degree < 0 || degree > max_degree()) return {0, 0};
  return {offsets_[static_cast<std::size_t>(degree)], offsets_[static_cast<std::size_t>(degree + 1)]};
}

Vector WedgeAlgebra::mult_functions(const Vector& a, const Vector& b) const {
  const HopfData& A = *fodc_.paired.alg;
  Vector out = zero_vector(A.dim);
  for (int i = 0; i < A.dim; ++i) {
    if (a(i) == 0) continue;
    for (int j = 0; j < A.dim; ++j)
      if (b(j) != 0) out += (a(i) * b(j)) * A.product(i, j);
  }
  return out;
}

std::vector<std::pair<Vector, std::vector<int>>> WedgeAlgebra::move_through(std::span<const int> word,
                                                                            const Vector& b) const {
  const int n = fodc_.n;
  std::vector<std::pair<Vector, std::vector<int>>> cur{{b, {}}};
  for (int k = static_cast<int>(word.size()) - 1; k >= 0; --k) {
    const int i = word[static_cast<std::size_t>(k)];
    std::vector<std::pair<Vector, std::vector<int>>> next;
    for (const auto& [g, K] : cur)
      for (int j = 0; j < n; ++j) {
        Vector moved = f_action_[static_cast<std::size_t>(i * n + j)] * g;
        if (hopfcalc::is_zero(moved)) continue;
        std::vector<int> nk{j};
        nk.insert(nk.end(), K.begin(), K.end());
        next.emplace_back(std::move(moved), std::move(nk));
      }
    cur = std::move(next);
  }
  return cur;
}

void WedgeAlgebra::build_products() {
  const int N = dim();
  const int na = function_dim();
  mult_.assign(static_cast<std::size_t>(N) * static_cast<std::size_t>(N), {});
  for (int dp = 0; dp <= max_degree(); ++dp) {
    const auto& wp = exterior_.words(dp);
    for (int I = 0; I < static_cast<int>(wp.size()); ++I)
      for (int y = 0; y < na; ++y) {
        const auto moved = move_through(wp[static_cast<std::size_t>(I)], unit_vector(na, y));
        for (int dq = 0; dp + dq <= max_degree(); ++dq) {
          const auto& wq = exterior_.words(dq);
          for (int J = 0; J < static_cast<int>(wq.size()); ++J) {
            // w^I e_y w^J = sum_L g_L w^L
            std::map<int, Vector> by_word;
            for (const auto& [g, K] : moved) {
              std::vector<int> full = K;
              full.insert(full.end(), wq[static_cast<std::size_t>(J)].begin(),
                          wq[static_cast<std::size_t>(J)].end());
              for (const auto& [L, c] : exterior_.reduce(full)) {
                auto it = by_word.try_emplace(L, zero_vector(na)).first;
                it->second += c * g;
              }
            }
            for (int x = 0; x < na; ++x) {
              Vector acc = zero_vector(N);
              for (const auto& [L, g] : by_word) {
                const Vector fx = mult_functions(unit_vector(na, x), g);
                for (int z = 0; z < na; ++z)
                  if (fx(z) != 0) acc(index(dp + dq, z, L)) += fx(z);
              }
              mult_[static_cast<std::size_t>(index(dp, x, I)) * static_cast<std::size_t>(N) +
                    static_cast<std::size_t>(index(dq, y, J))] = to_sparse(acc);
            }
          }
        }
      }
  }
}

Vector WedgeAlgebra::multiply(const Vector& x, const Vector& y) const {
  const int N = dim();
  if (x.size() != N || y.size() != N) throw Error("form dimension mismatch");
  Vector out = zero_vector(N);
  for (int p = 0; p < N; ++p) {
    if (x(p) == 0) continue;
    for (int q = 0; q < N; ++q)
      if (y(q) != 0) add_scaled(out, product(p, q), x(p) * y(q));
  }
  return out;
}

Vector WedgeAlgebra::word_form(std::span<const int> word) const {
  const int na = function_dim();
  const HopfData& A = *fodc_.paired.alg;
  Vector out = zero_vector(dim());
  const int d = static_cast<int>(word.size());
  if (d > max_degree()) return out;
  for (const auto& [L, c] : exterior_.reduce(word))
    for (int x = 0; x < na; ++x)
      if (A.unit(x) != 0) out(index(d, x, L)) += c * A.unit(x);
  return out;
}

FormTensor WedgeAlgebra::tensor_multiply(const FormTensor& a, const FormTensor& b) const {
  FormTensor out;
  for (const auto& [pq, c] : a) {
    const int dq = degree_of(pq.second);
    for (const auto& [pq2, c2] : b) {
      const SparseTerms& left = product(pq.first, pq2.first);
      if (left.empty()) continue;
      const SparseTerms& right = product(pq.second, pq2.second);
      if (right.empty()) continue;
      Rational s = c * c2;
      if (options_.koszul_sign && (dq * degree_of(pq2.first)) % 2 != 0) s = -s;
      for (const auto& [l, cl] : left)
        for (const auto& [r, cr] : right) add_term(out, l, r, s * cl * cr);
    }
  }
  return out;
}

void WedgeAlgebra::build_coproducts() {
  const HopfData& A = *fodc_.paired.alg;
  const int na = A.dim;
  const int n = fodc_.n;

  // Delta(w^i) = 1 (x) w^i + w^j (x) r^i_j
  std::vector<FormTensor> gen(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    FormTensor& t = gen[static_cast<std::size_t>(i)];
    for (int x = 0; x < na; ++x) {
      if (A.unit(x) == 0) continue;
      for (int y = 0; y < na; ++y)
        if (A.unit(y) != 0) add_term(t, index(0, x, 0), index(1, y, i), A.unit(x) * A.unit(y));
    }
    for (int j = 0; j < n; ++j) {
      const Element& r = fodc_.r[i][j];
      for (int y = 0; y < na; ++y) {
        if (A.unit(y) == 0) continue;
        for (int z = 0; z < na; ++z)
          if (r[z] != 0) add_term(t, index(1, y, j), index(0, z, 0), A.unit(y) * r[z]);
      }
    }
  }

  coproduct_.assign(static_cast<std::size_t>(dim()), {});
  std::vector<std::vector<FormTensor>> of_word(static_cast<std::size_t>(max_degree() + 1));
  FormTensor one;
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < na; ++y)
      if (A.unit(x) != 0 && A.unit(y) != 0) add_term(one, index(0, x, 0), index(0, y, 0), A.unit(x) * A.unit(y));
  of_word[0].push_back(one);
  for (int d = 1; d <= max_degree(); ++d) {
    for (const auto& w : exterior_.words(d)) {
      // prefixes of basis words are basis words
      const std::vector<int> prefix(w.begin(), w.end() - 1);
      const int pi = exterior_.word_index(prefix);
      if (pi < 0) throw Error("basis word prefix is not a basis word");
      of_word[static_cast<std::size_t>(d)].push_back(
          tensor_multiply(of_word[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(pi)],
                          gen[static_cast<std::size_t>(w.back())]));
    }
  }
  for (int p = 0; p < dim(); ++p) {
    const FormMonomial& m = monomial(p);
    FormTensor fx;
    for (const auto& t : A.comult[static_cast<std::size_t>(m.function)].terms())
      add_term(fx, index(0, t.left, 0), index(0, t.right, 0), t.coeff);
    coproduct_[static_cast<std::size_t>(p)] =
        tensor_multiply(fx, of_word[static_cast<std::size_t>(m.degree)][static_cast<std::size_t>(m.word)]);
  }
}

FormTensor WedgeAlgebra::comultiply(const Vector& x) const {
  FormTensor out;
  for (int p = 0; p < dim(); ++p) {
    if (x(p) == 0) continue;
    for (const auto& [pq, c] : coproduct(p)) add_term(out, pq.first, pq.second, x(p) * c);
  }
  return out;
}

void WedgeAlgebra::build_derivatives() {
  const int na = function_dim();
  const int n = fodc_.n;
  const int N = dim();
  auto function_d = [&](const Element& a) {
    Vector out = zero_vector(N);
    const OneForm da = differential(fodc_, a);
    for (int i = 0; i < n; ++i)
      for (int y = 0; y < na; ++y)
        if (da.components[static_cast<std::size_t>(i)][y] != 0)
          out(index(1, y, i)) += da.components[static_cast<std::size_t>(i)][y];
    return out;
  };
  auto function_form = [&](const Element& a) {
    Vector out = zero_vector(N);
    for (int y = 0; y < na; ++y) out(index(0, y, 0)) = a[y];
    return out;
  };

  // dw^i = sum_k d(a_k) d(b_k)
  std::vector<Vector> d_gen;
  for (int i = 0; i < n; ++i) {
    Vector acc = zero_vector(N);
    for (const auto& [a, b] : fodc_.omega_presentation[static_cast<std::size_t>(i)])
      acc += multiply(function_d(a), function_d(b));
    d_gen.push_back(std::move(acc));
  }

  std::vector<std::vector<Vector>> d_word(static_cast<std::size_t>(max_degree() + 1));
  d_word[0].push_back(zero_vector(N));
  for (int d = 1; d <= max_degree(); ++d)
    for (const auto& w : exterior_.words(d)) {
      const std::vector<int> prefix(w.begin(), w.end() - 1);
      const int pi = exterior_.word_index(prefix);
      const Vector& dprefix = d_word[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(pi)];
      const Vector last = word_form(std::span<const int>(&w.back(), 1));
      Vector acc = multiply(dprefix, last);
      const Vector rest = multiply(word_form(prefix), d_gen[static_cast<std::size_t>(w.back())]);
      if ((d - 1) % 2 == 0)
        acc += rest;
      else
        acc -= rest;
      d_word[static_cast<std::size_t>(d)].push_back(std::move(acc));
    }

  d_.assign(static_cast<std::size_t>(N), {});
  for (int p = 0; p < N; ++p) {
    const FormMonomial& m = monomial(p);
    const Element ex = Element::basis(fodc_.paired.alg, m.function);
    const auto& w = exterior_.words(m.degree)[static_cast<std::size_t>(m.word)];
    Vector acc = multiply(function_d(ex), word_form(w));
    acc += multiply(function_form(ex), d_word[static_cast<std::size_t>(m.degree)][static_cast<std::size_t>(m.word)]);
    d_[static_cast<std::size_t>(p)] = to_sparse(acc);
  }
}

Vector WedgeAlgebra::differentiate(const Vector& x) const {
  if (x.size() != dim()) throw Error("form dimension mismatch");
  Vector out = zero_vector(dim());
  for (int p = 0; p < dim(); ++p)
    if (x(p) != 0) add_scaled(out, derivative(p), x(p));
  return out;
}

GradedForm WedgeAlgebra::zero() const { return GradedForm(shared_from_this(), zero_vector(dim())); }

GradedForm WedgeAlgebra::one() const { return function(Element::unit(fodc_.paired.alg)); }

GradedForm WedgeAlgebra::basis(int p) const {
  if (p < 0 || p >= dim()) throw Error("form basis index out of range");
  return GradedForm(shared_from_this(), unit_vector(dim(), p));
}

GradedForm WedgeAlgebra::function(const Element& a) const {
  require_same(fodc_.paired.alg, a.algebra(), "function from another algebra");
  Vector v = zero_vector(dim());
  for (int x = 0; x < function_dim(); ++x) v(index(0, x, 0)) = a[x];
  return GradedForm(shared_from_this(), std::move(v));
}

GradedForm WedgeAlgebra::omega(int i) const {
  if (i < 0 || i >= fodc_.n) throw Error("form index out of range");
  return GradedForm(shared_from_this(), word_form(std::span<const int>(&i, 1)));
}

GradedForm WedgeAlgebra::from_one_form(const OneForm& w) const {
  Vector v = zero_vector(dim());
  for (int i = 0; i < static_cast<int>(w.components.size()); ++i)
    for (int x = 0; x < function_dim(); ++x) v(index(1, x, i)) += w.components[static_cast<std::size_t>(i)][x];
  return GradedForm(shared_from_this(), std::move(v));
}

GradedForm WedgeAlgebra::from_vector(Vector v) const {
  if (v.size() != dim()) throw Error("form dimension mismatch");
  return GradedForm(shared_from_this(), std::move(v));
}

std::string WedgeAlgebra::label(int p) const {
  const FormMonomial& m = monomial(p);
  const std::string fn = fodc_.paired.alg->labels[static_cast<std::size_t>(m.function)];
  if (m.degree == 0) return fn;
  return fn + " * " + word_label(exterior_.words(m.degree)[static_cast<std::size_t>(m.word)]);
}

std::vector<std::pair<Rational, std::string>> WedgeAlgebra::format_terms(const Vector& v) const {
  const HopfData& A = *fodc_.paired.alg;
  const int na = A.dim;
  std::vector<std::pair<Rational, std::string>> terms;
  int unit_pos = 0;
  while (unit_pos < na && A.unit(unit_pos) == 0) ++unit_pos;
  for (int d = 0; d <= max_degree(); ++d)
    for (int L = 0; L < exterior_.dim(d); ++L) {
      Vector g = zero_vector(na);
      for (int x = 0; x < na; ++x) g(x) = v(index(d, x, L));
      if (hopfcalc::is_zero(g)) continue;
      const std::string word = d == 0 ? std::string() : word_label(exterior_.words(d)[static_cast<std::size_t>(L)]);
      const Rational c = g(unit_pos) / A.unit(unit_pos);
      if (g == c * A.unit) {
        terms.emplace_back(c, d == 0 ? "1" : word);
        continue;
      }
      const SparseTerms nz = to_sparse(g);
      if (nz.size() == 1) {
        const std::string fn = A.labels[static_cast<std::size_t>(nz[0].first)];
        terms.emplace_back(nz[0].second, d == 0 ? fn : fn + " * " + word);
        continue;
      }
      std::vector<std::pair<Rational, std::string>> inner;
      for (const auto& [x, c2] : nz) inner.emplace_back(c2, A.labels[static_cast<std::size_t>(x)]);
      const std::string fn = "(" + format_sum(inner) + ")";
      terms.emplace_back(Rational(1), d == 0 ? fn : fn + " * " + word);
    }
  return terms;
}

std::string WedgeAlgebra::format(const Vector& v) const { return format_sum(format_terms(v)); }

std::string WedgeAlgebra::format(const FormTensor& t) const {
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [pq, c] : t) terms.emplace_back(c, "(" + label(pq.first) + ") (x) (" + label(pq.second) + ")");
  return format_sum(terms);
}

GradedForm::GradedForm(WedgePtr algebra, Vector coeffs) : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
  if (!algebra_) throw Error("form without algebra");
  if (coeffs_.size() != algebra_->dim()) throw Error("form dimension mismatch");
}

GradedForm GradedForm::component(int degree) const {
  Vector v = zero_vector(coeffs_.size());
  const auto [lo, hi] = algebra_->degree_range(degree);
  for (int p = lo; p < hi; ++p) v(p) = coeffs_(p);
  return GradedForm(algebra_, std::move(v));
}

int GradedForm::degree() const {
  int deg = -1;
  for (int p = 0; p < coeffs_.size(); ++p) {
    if (coeffs_(p) == 0) continue;
    const int d = algebra_->degree_of(p);
    if (deg >= 0 && d != deg) throw Error("form is not homogeneous");
    deg = d;
  }
  return deg;
}

GradedForm& GradedForm::operator+=(const GradedForm& o) {
  if (algebra_ != o.algebra_) throw Error("algebra mismatch");
  coeffs_ += o.coeffs_;
  return *this;
}

GradedForm& GradedForm::operator-=(const GradedForm& o) {
  if (algebra_ != o.algebra_) throw Error("algebra mismatch");
  coeffs_ -= o.coeffs_;
  return *this;
}

GradedForm& GradedForm::operator*=(const Rational& s) {
  coeffs_ *= s;
  return *this;
}

bool GradedForm::operator==(const GradedForm& o) const {
  return algebra_ == o.algebra_ && coeffs_ == o.coeffs_;
}

GradedForm wedge_multiply(const GradedForm& x, const GradedForm& y) {
  if (x.algebra() != y.algebra()) throw Error("algebra mismatch");
  return GradedForm(x.algebra(), x.algebra()->multiply(x.coeffs(), y.coeffs()));
}

GradedForm exterior_derivative(const GradedForm& x) {
  return GradedForm(x.algebra(), x.algebra()->differentiate(x.coeffs()));
}

FormTensor graded_coproduct(const GradedForm& x) { return x.algebra()->comultiply(x.coeffs()); }

Rational form_counit(const GradedForm& x) {
  const WedgeAlgebra& w = *x.algebra();
  const HopfData& A = *w.fodc().paired.alg;
  Rational out = 0;
  for (int a = 0; a < A.dim; ++a) out += x.coeffs()(w.index(0, a, 0)) * A.counit(a);
  return out;
}

std::string to_string(const GradedForm& x) { return x.algebra()->format(x.coeffs()); }

namespace {

using Triple = std::map<std::array<int, 3>, Rational>;

void add_triple(Triple& t, const std::array<int, 3>& k, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = t.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

std::string format_triple(const WedgeAlgebra& w, const Triple& t) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [k, c] : t)
    terms.emplace_back(c, "(" + w.label(k[0]) + ") (x) (" + w.label(k[1]) + ") (x) (" + w.label(k[2]) + ")");
  return format_sum(terms);
}

}  // namespace

SuiteReport check_graded_bialgebra(const WedgeAlgebra& w) {
  SuiteReport rep;
  rep.suite = "graded_bialgebra";
  const int N = w.dim();
  const HopfData& A = *w.fodc().paired.alg;

  auto eps = [&](int p) -> Rational {
    const FormMonomial& m = w.monomial(p);
    return m.degree == 0 ? A.counit(m.function) : Rational(0);
  };

  for (int p = 0; p < N; ++p) {
    Triple left, right;
    for (const auto& [pq, c] : w.coproduct(p)) {
      for (const auto& [ab, c2] : w.coproduct(pq.first)) add_triple(left, {ab.first, ab.second, pq.second}, c * c2);
      for (const auto& [ab, c2] : w.coproduct(pq.second)) add_triple(right, {pq.first, ab.first, ab.second}, c * c2);
    }
    if (left == right)
      rep.add("coassociative " + w.label(p), true);
    else
      rep.add("coassociative " + w.label(p), false, format_triple(w, left), format_triple(w, right));

    Vector lv = zero_vector(N), rv = zero_vector(N);
    for (const auto& [pq, c] : w.coproduct(p)) {
      lv(pq.second) += eps(pq.first) * c;
      rv(pq.first) += eps(pq.second) * c;
    }
    const Vector expect = unit_vector(N, p);
    rep.add("counit " + w.label(p), lv == expect && rv == expect, w.format(lv) + ", " + w.format(rv),
            w.format(expect) + ", " + w.format(expect));
  }

  for (int p = 0; p < N; ++p)
    for (int q = 0; q < N; ++q) {
      if (w.degree_of(p) + w.degree_of(q) > w.max_degree()) continue;
      Vector pq = zero_vector(N);
      add_scaled(pq, w.product(p, q), Rational(1));
      const FormTensor lhs = w.comultiply(pq);
      const FormTensor rhs = w.tensor_multiply(w.coproduct(p), w.coproduct(q));
      const std::string name = "multiplicative (" + w.label(p) + ") * (" + w.label(q) + ")";
      if (lhs == rhs)
        rep.add(name, true);
      else
        rep.add(name, false, w.format(lhs), w.format(rhs));
    }
  return rep;
}

SuiteReport check_differential(const WedgeAlgebra& w) {
  SuiteReport rep;
  rep.suite = "differential";
  const int N = w.dim();
  const int na = w.function_dim();

  for (int p = 0; p < N; ++p) {
    const Vector dd = w.differentiate(w.differentiate(unit_vector(N, p)));
    rep.add("d^2 " + w.label(p), hopfcalc::is_zero(dd), w.format(dd), "0");
  }

  for (int p = 0; p < N; ++p)
    for (int q = 0; q < N; ++q) {
      const Vector x = unit_vector(N, p), y = unit_vector(N, q);
      const Vector lhs = w.differentiate(w.multiply(x, y));
      Vector rhs = w.multiply(w.differentiate(x), y);
      const Vector second = w.multiply(x, w.differentiate(y));
      if (w.degree_of(p) % 2 == 0)
        rhs += second;
      else
        rhs -= second;
      const std::string name = "leibniz (" + w.label(p) + ") * (" + w.label(q) + ")";
      if (lhs == rhs)
        rep.add(name, true);
      else
        rep.add(name, false, w.format(lhs), w.format(rhs));
    }

  std::vector<Vector> generators;
  for (int x = 0; x < na; ++x) generators.push_back(unit_vector(N, w.index(0, x, 0)));
  for (int i = 0; i < w.fodc().n; ++i) generators.push_back(w.word_form(std::span<const int>(&i, 1)));
  for (int p = 0; p < N; ++p)
    for (std::size_t a = 0; a < generators.size(); ++a)
      for (std::size_t b = 0; b < generators.size(); ++b) {
        const Vector x = unit_vector(N, p);
        const Vector lhs = w.multiply(w.multiply(x, generators[a]), generators[b]);
        const Vector rhs = w.multiply(x, w.multiply(generators[a], generators[b]));
        const std::string name = "associative (" + w.label(p) + ") * (" + w.format(generators[a]) + ") * (" +
                                 w.format(generators[b]) + ")";
        if (lhs == rhs)
          rep.add(name, true);
        else
          rep.add(name, false, w.format(lhs), w.format(rhs));
      }
  return rep;
}

}  // namespace hopfcalc
