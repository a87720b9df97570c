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

#include "hopfcalc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>

#include "hopfcalc/linalg.hpp"

namespace hopfcalc {

namespace {

std::string idx(int i) { return std::to_string(i + 1); }

template <typename F>
SuiteReport timed(F&& run) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep = run();
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace

Workspace make_workspace(const FodcData& d, WedgeOptions options) {
  Workspace ws;
  ws.wedge = WedgeAlgebra::create(d, options);
  ws.cross = CrossAlgebra::create(ws.wedge);
  return ws;
}

SuiteReport check_inner_derivation(const Workspace& ws) {
  SuiteReport rep;
  rep.suite = "inner_derivation";
  const FodcData& d = ws.fodc();
  const WedgeAlgebra& w = *ws.wedge;
  const HopfData& A = *d.paired.alg;
  for (int i = 0; i < d.n; ++i)
    for (int a = 0; a < A.dim; ++a) {
      const Element ea = Element::basis(d.paired.alg, a);
      const GradedForm fa = w.function(ea);
      const GradedForm lhs0 = inner_derivation(i, fa, ws.cross);
      rep.add("iota[" + idx(i) + "](" + A.labels[static_cast<std::size_t>(a)] + ")", lhs0.is_zero(),
              to_string(lhs0), "0");
      const GradedForm lhs1 = inner_derivation(i, exterior_derivative(fa), ws.cross);
      const GradedForm rhs1 = w.function(left_act(d.paired, d.chi[i], ea));
      rep.add("iota[" + idx(i) + "](d(" + A.labels[static_cast<std::size_t>(a)] + "))", lhs1 == rhs1,
              to_string(lhs1), to_string(rhs1));
    }
  return rep;
}

SuiteReport check_lie_d_commute(const Workspace& ws) {
  SuiteReport rep;
  rep.suite = "lie_d_commute";
  const FodcData& d = ws.fodc();
  const WedgeAlgebra& w = *ws.wedge;
  const HopfData& Astar = *d.paired.dual;
  for (int h = 0; h < Astar.dim; ++h) {
    const Element eh = Element::basis(d.paired.dual, h);
    for (int p = 0; p < w.dim(); ++p) {
      if (w.degree_of(p) >= w.max_degree()) continue;
      const GradedForm rho = w.basis(p);
      const GradedForm lhs = lie_derivative(eh, exterior_derivative(rho), ws.cross);
      const GradedForm rhs = exterior_derivative(lie_derivative(eh, rho, ws.cross));
      rep.add("L(" + Astar.labels[static_cast<std::size_t>(h)] + "; d(" + w.label(p) + "))", lhs == rhs,
              to_string(lhs), to_string(rhs));
    }
  }
  return rep;
}

SuiteReport check_gamma_coproduct(const Workspace& ws) {
  SuiteReport rep;
  rep.suite = "gamma_coproduct";
  const FodcData& d = ws.fodc();
  const WedgeAlgebra& w = *ws.wedge;
  const CrossAlgebra& c = *ws.cross;
  const HopfData& Astar = *d.paired.dual;
  const int N = w.dim();
  const int n = d.n;

  // coproduct of gamma_i, tested on products of degree one
  for (int i = 0; i < n; ++i) {
    const Vector g = c.gamma(i);
    const FormTensor dg = gamma_coproduct(ws.cross, i);
    for (int p = 0; p < N; ++p)
      for (int q = 0; q < N; ++q) {
        if (w.degree_of(p) + w.degree_of(q) != 1) continue;
        Rational lhs = 0;
        for (const auto& [r, coeff] : w.product(p, q)) lhs += g(r) * coeff;
        const auto it = dg.find({p, q});
        const Rational rhs = it == dg.end() ? Rational(0) : it->second;
        rep.add("coproduct gamma[" + idx(i) + "] on (" + w.label(p) + ") * (" + w.label(q) + ")", lhs == rhs,
                to_string(lhs), to_string(rhs));
      }
  }

  // gamma_i h = (r^j_i |> h) gamma_j
  for (int i = 0; i < n; ++i)
    for (int h = 0; h < Astar.dim; ++h) {
      const Element eh = Element::basis(d.paired.dual, h);
      const DualElement lhs = dual_multiply(gamma(ws.cross, i), dual_from_hopf(ws.cross, eh));
      DualElement rhs(ws.cross, zero_vector(N));
      for (int j = 0; j < n; ++j)
        rhs += dual_multiply(dual_from_hopf(ws.cross, act_on_dual(d.paired, d.r[j][i], eh)), gamma(ws.cross, j));
      bool same = true;
      const auto [lo, hi] = w.degree_range(1);
      for (int p = lo; p < hi; ++p) same = same && lhs.values()(p) == rhs.values()(p);
      rep.add("reorder gamma[" + idx(i) + "] * " + Astar.labels[static_cast<std::size_t>(h)], same, to_string(lhs),
              to_string(rhs));
    }

  return rep;
}

SuiteReport check_gamma_pairing(const Workspace& ws) {
  SuiteReport rep;
  rep.suite = "gamma_pairing";
  const FodcData& d = ws.fodc();
  const WedgeAlgebra& w = *ws.wedge;
  const HopfData& A = *d.paired.alg;
  const int N = w.dim();
  const int n = d.n;

  // closed form of <gamma_i gamma_j, a w^m w^n>, read off the braiding in use
  const Matrix& sigma = w.braiding().sigma;
  auto closed = [&](int i, int j, int m, int k) {
    return Rational(i == m && j == k ? 1 : 0) - sigma(i * n + j, m * n + k);
  };
  if (w.max_degree() >= 2) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const DualElement gg = dual_multiply(gamma(ws.cross, i), gamma(ws.cross, j));
        for (int m = 0; m < n; ++m)
          for (int k = 0; k < n; ++k) {
            const std::vector<int> word{m, k};
            const GradedForm wmk = w.from_vector(w.word_form(word));
            for (int a = 0; a < A.dim; ++a) {
              const GradedForm rho = wedge_multiply(w.function(Element::basis(d.paired.alg, a)), wmk);
              const Rational lhs = pair(gg, rho);
              const Rational rhs = A.counit(a) * closed(i, j, m, k);
              rep.add("<gamma[" + idx(i) + "] * gamma[" + idx(j) + "], " + A.labels[static_cast<std::size_t>(a)] +
                          " * w[" + idx(m) + "] * w[" + idx(k) + "]>",
                      lhs == rhs, to_string(lhs), to_string(rhs));
            }
          }
      }
  }

  // the closed form is a functional on the quotient: it kills ker(I - sigma)
  const Matrix rel = Matrix::Identity(n * n, n * n) - sigma;
  const auto kernel = kernel_basis(rel);
  for (std::size_t k = 0; k < kernel.size(); ++k) {
    const Vector& v = kernel[k];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational value = 0;
        for (int m = 0; m < n; ++m)
          for (int l = 0; l < n; ++l) value += v(m * n + l) * closed(i, j, m, l);
        rep.add("kernel[" + std::to_string(k + 1) + "] under <gamma[" + idx(i) + "] * gamma[" + idx(j) + "], .>",
                value == 0, to_string(value), "0");
      }
    if (w.max_degree() >= 2) {
      Vector form = zero_vector(N);
      for (int m = 0; m < n; ++m)
        for (int l = 0; l < n; ++l)
          if (v(m * n + l) != 0) form += v(m * n + l) * w.word_form(std::vector<int>{m, l});
      rep.add("kernel[" + std::to_string(k + 1) + "] vanishes in degree 2", hopfcalc::is_zero(form), w.format(form),
              "0");
    }
  }
  return rep;
}

SuiteReport check_gamma_relations(const Workspace& ws) {
  SuiteReport rep = check_gamma_coproduct(ws);
  rep.suite = "gamma_relations";
  const SuiteReport pairing = check_gamma_pairing(ws);
  rep.cases.insert(rep.cases.end(), pairing.cases.begin(), pairing.cases.end());
  return rep;
}

SuiteReport check_cartan(const Workspace& ws) {
  SuiteReport rep;
  rep.suite = "cartan";
  const FodcData& d = ws.fodc();
  const WedgeAlgebra& w = *ws.wedge;
  const HopfData& A = *d.paired.alg;
  const CrossPtr& c = ws.cross;

  for (int i = 0; i < d.n; ++i)
    for (int p = 0; p < w.dim(); ++p) {
      if (w.degree_of(p) > w.max_degree() - 1) continue;
      const GradedForm rho = w.basis(p);
      const GradedForm lhs = lie_derivative(d.chi[i], rho, c);
      const GradedForm rhs =
          exterior_derivative(inner_derivation(i, rho, c)) + inner_derivation(i, exterior_derivative(rho), c);
      rep.add("chi[" + idx(i) + "] on " + w.label(p), lhs == rhs, to_string(lhs), to_string(rhs));
    }

  if (w.max_degree() < 2) return rep;
  // a db, one term at a time
  for (int i = 0; i < d.n; ++i)
    for (int x = 0; x < A.dim; ++x)
      for (int y = 0; y < A.dim; ++y) {
        const Element a = Element::basis(d.paired.alg, x);
        const Element b = Element::basis(d.paired.alg, y);
        const GradedForm fa = w.function(a);
        const GradedForm db = exterior_derivative(w.function(b));
        const GradedForm da = exterior_derivative(fa);
        const GradedForm rho = wedge_multiply(fa, db);
        const GradedForm chib = w.function(left_act(d.paired, d.chi[i], b));
        const std::string at = " on " + A.labels[static_cast<std::size_t>(x)] + " * d(" +
                               A.labels[static_cast<std::size_t>(y)] + ") for chi[" + idx(i) + "]";

        GradedForm twisted = w.zero();
        for (int j = 0; j < d.n; ++j)
          twisted += wedge_multiply(w.function(left_act(d.paired, d.chi[j], a)),
                                    lie_derivative(d.f[j][i], db, c));
        const GradedForm t1 = wedge_multiply(fa, lie_derivative(d.chi[i], db, c)) + twisted;
        const GradedForm t2 = wedge_multiply(da, chib) + wedge_multiply(fa, exterior_derivative(chib));
        const GradedForm t3 = twisted - wedge_multiply(da, chib);

        const GradedForm lie = lie_derivative(d.chi[i], rho, c);
        const GradedForm d_iota = exterior_derivative(inner_derivation(i, rho, c));
        const GradedForm iota_d = inner_derivation(i, exterior_derivative(rho), c);
        rep.add("midstep lie" + at, lie == t1, to_string(lie), to_string(t1));
        rep.add("midstep d_iota" + at, d_iota == t2, to_string(d_iota), to_string(t2));
        rep.add("midstep iota_d" + at, iota_d == t3, to_string(iota_d), to_string(t3));
        const GradedForm sum = t2 + t3;
        rep.add("midstep sum" + at, t1 == sum, to_string(t1), to_string(sum));
      }
  return rep;
}

SuiteReport check_cross_product(const Workspace& ws, int pairs, unsigned seed) {
  SuiteReport rep;
  rep.suite = "cross_product";
  const CrossAlgebra& c = *ws.cross;
  const WedgeAlgebra& w = *ws.wedge;
  const int N = w.dim();
  if (!w.exterior().complete())
    rep.note = "truncated form algebra: products reaching the top degree are cut off";

  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick_form(0, N - 1);
  std::uniform_int_distribution<int> pick_mono(0, static_cast<int>(c.monomials().size()) - 1);
  std::uniform_int_distribution<int> pick_terms(1, 3);
  std::uniform_int_distribution<int> pick_coeff(-3, 2);
  auto random_element = [&] {
    CrossElement x(ws.cross);
    const int terms = pick_terms(rng);
    for (int t = 0; t < terms; ++t) {
      int coeff = pick_coeff(rng);
      if (coeff >= 0) ++coeff;  // -3..3 without 0
      const int p = pick_form(rng);
      const Vector dual = c.monomial_vector(c.monomials()[static_cast<std::size_t>(pick_mono(rng))]);
      for (int q = 0; q < N; ++q)
        if (dual(q) != 0) x.add(p, q, coeff * dual(q));
    }
    return x;
  };

  for (int k = 0; k < pairs; ++k) {
    const CrossElement x = random_element();
    const CrossElement y = random_element();
    const CrossElement xy = cross_multiply(x, y);
    bool same = true;
    std::string lhs, rhs;
    for (int t = 0; t < N && same; ++t) {
      const Vector tau = unit_vector(N, t);
      const Vector direct = cross_operator(xy, tau);
      const Vector composed = cross_operator(x, cross_operator(y, tau));
      if (direct != composed) {
        same = false;
        lhs = "(" + to_string(xy) + ") on " + w.label(t) + " = " + w.format(direct);
        rhs = w.format(composed);
      }
    }
    rep.add("pair " + std::to_string(k + 1) + ": (" + to_string(x) + ") * (" + to_string(y) + ")", same,
            same ? to_string(xy) : lhs, rhs);
  }
  return rep;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"hopf_axioms",     "covariance",       "consistency",
                                              "graded_bialgebra", "differential",     "inner_derivation",
                                              "lie_d_commute",   "gamma_relations",  "cartan"};
  return names;
}

std::vector<SuiteReport> run_suites(const FodcData& d, int max_degree, const std::vector<std::string>& only) {
  for (const auto& name : only)
    if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
      throw Error("unknown suite: " + name);
  auto wanted = [&](const std::string& name) {
    return only.empty() || std::find(only.begin(), only.end(), name) != only.end();
  };

  std::vector<SuiteReport> out;
  if (wanted("hopf_axioms")) {
    out.push_back(timed([&] {
      SuiteReport r = check_hopf_axioms(*d.paired.alg);
      r.suite = "hopf_axioms_algebra";
      return r;
    }));
    out.push_back(timed([&] {
      SuiteReport r = check_hopf_axioms(*d.paired.dual);
      r.suite = "hopf_axioms_dual";
      return r;
    }));
  }
  if (wanted("covariance")) out.push_back(timed([&] { return check_covariance(d.paired); }));
  if (wanted("consistency")) out.push_back(timed([&] { return check_consistency(d); }));

  const bool need_forms = std::any_of(suite_names().begin() + 3, suite_names().end(), wanted);
  if (!need_forms) return out;
  WedgeOptions options;
  options.max_degree = max_degree;
  const Workspace ws = make_workspace(d, options);
  if (wanted("graded_bialgebra")) out.push_back(timed([&] { return check_graded_bialgebra(*ws.wedge); }));
  if (wanted("differential")) out.push_back(timed([&] { return check_differential(*ws.wedge); }));
  if (wanted("inner_derivation")) out.push_back(timed([&] { return check_inner_derivation(ws); }));
  if (wanted("lie_d_commute")) out.push_back(timed([&] { return check_lie_d_commute(ws); }));
  if (wanted("gamma_relations")) out.push_back(timed([&] { return check_gamma_relations(ws); }));
  if (wanted("cartan")) out.push_back(timed([&] { return check_cartan(ws); }));
  return out;
}

std::string suites_line(const std::vector<SuiteReport>& reports) {
  const auto ok = std::count_if(reports.begin(), reports.end(), [](const SuiteReport& r) { return r.ok(); });
  return "SUITES " + std::to_string(ok) + "/" + std::to_string(reports.size()) +
         (ok == static_cast<long>(reports.size()) ? " PASS" : " FAIL");
}

}  // namespace hopfcalc
