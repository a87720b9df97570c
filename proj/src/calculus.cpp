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

#include "hopfcalc/calculus.hpp"

#include <algorithm>
#include <set>

namespace hopfcalc {

namespace {

TensorElement tensor(const Element& x, const Element& y) {
  TensorElement out;
  for (int i = 0; i < x.dim(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < y.dim(); ++j)
      if (y[j] != 0) out.add(x[i] * y[j], i, j);
  }
  return out;
}

std::string index_label(int i) { return std::to_string(i + 1); }

}  // namespace

FodcData finite_group_calculus(const GroupTable& g, const std::vector<int>& subset) {
  if (subset.empty()) throw Error("empty subset");
  std::vector<int> s = subset;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (int x : s)
    if (x < 0 || x >= g.order()) throw Error("subset element out of range");
  if (std::find(s.begin(), s.end(), g.identity()) != s.end()) throw Error("identity in S");
  const std::set<int> members(s.begin(), s.end());
  for (int x : s)
    for (int t = 0; t < g.order(); ++t)
      if (!members.count(g.conjugate(t, x))) throw Error("not ad-invariant");

  FodcData d;
  d.n = static_cast<int>(s.size());
  d.paired = group_pairing(g);
  d.group = g;
  d.subset = s;
  const HopfPtr& A = d.paired.alg;
  const HopfPtr& Astar = d.paired.dual;
  const int n = d.n;

  d.r.assign(static_cast<std::size_t>(n), std::vector<Element>(static_cast<std::size_t>(n)));
  d.f.assign(static_cast<std::size_t>(n), std::vector<Element>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Vector ind = zero_vector(g.order());
      for (int t = 0; t < g.order(); ++t)
        if (g.conjugate(t, s[j]) == s[i]) ind(t) = 1;
      d.r[i][j] = Element(A, std::move(ind));
      d.f[i][j] = i == j ? Element::basis(Astar, s[i]) : Element::zero(Astar);
    }
    d.chi.push_back(Element::basis(Astar, s[i]) - Element::basis(Astar, g.identity()));
  }

  d.omega_presentation.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int h = 0; h < g.order(); ++h)
      d.omega_presentation[i].emplace_back(Element::basis(A, h), Element::basis(A, g.mul(h, s[i])));

  const SuiteReport consistency = check_consistency(d);
  if (!consistency.ok()) {
    for (const auto& c : consistency.cases)
      if (!c.pass) throw Error("inconsistent calculus: " + c.name);
  }
  const SuiteReport pres = check_omega_presentation(d);
  if (!pres.ok()) throw Error("omega presentation does not reproduce the invariant forms");
  return d;
}

SuiteReport check_consistency(const FodcData& d) {
  SuiteReport rep;
  rep.suite = "consistency";
  const PairedHopf& p = d.paired;
  const HopfData& A = *p.alg;
  const HopfData& Astar = *p.dual;
  const int n = d.n;
  const Element one_star = Element::unit(p.dual);

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::string ij = "[" + index_label(i) + "," + index_label(j) + "]";
      TensorElement rhs;
      for (int k = 0; k < n; ++k) rhs += tensor(d.r[k][j], d.r[i][k]);
      const TensorElement lhs = coproduct(d.r[i][j]);
      rep.add("coproduct_r" + ij, lhs == rhs, to_string(lhs, A, A), to_string(rhs, A, A));
    }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::string ij = "[" + index_label(i) + "," + index_label(j) + "]";
      TensorElement rhs;
      for (int k = 0; k < n; ++k) rhs += tensor(d.f[i][k], d.f[k][j]);
      const TensorElement lhs = coproduct(d.f[i][j]);
      rep.add("coproduct_f" + ij, lhs == rhs, to_string(lhs, Astar, Astar),
              to_string(rhs, Astar, Astar));
    }

  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int a = 0; a < A.dim; ++a) {
        const Element ea = Element::basis(p.alg, a);
        Element lhs = Element::zero(p.alg), rhs = Element::zero(p.alg);
        for (int i = 0; i < n; ++i) {
          lhs += multiply(left_act(p, d.f[j][i], ea), d.r[i][k]);
          rhs += multiply(d.r[j][i], right_act(p, ea, d.f[i][k]));
        }
        rep.add("exchange_f_r[" + index_label(j) + "," + index_label(k) + "] " + A.labels[a], lhs == rhs,
                to_string(lhs), to_string(rhs));
      }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::string ij = "[" + index_label(i) + "," + index_label(j) + "]";
      const Rational delta = i == j ? 1 : 0;
      const Rational er = counit(d.r[i][j]);
      const Rational ef = counit(d.f[i][j]);
      rep.add("counit_r_f" + ij, er == delta && ef == delta, to_string(er) + ", " + to_string(ef),
              to_string(delta) + ", " + to_string(delta));
    }

  for (int i = 0; i < n; ++i) {
    TensorElement rhs = tensor(one_star, d.chi[i]);
    for (int j = 0; j < n; ++j) rhs += tensor(d.chi[j], d.f[j][i]);
    const TensorElement lhs = coproduct(d.chi[i]);
    rep.add("coproduct_chi[" + index_label(i) + "]", lhs == rhs, to_string(lhs, Astar, Astar),
            to_string(rhs, Astar, Astar));
  }

  for (int i = 0; i < n; ++i)
    for (int a = 0; a < A.dim; ++a) {
      const Element ea = Element::basis(p.alg, a);
      const Element lhs = right_act(p, ea, d.chi[i]);
      Element rhs = Element::zero(p.alg);
      for (int j = 0; j < n; ++j) rhs += multiply(left_act(p, d.chi[j], ea), d.r[j][i]);
      rep.add("right_action_chi[" + index_label(i) + "] " + A.labels[a], lhs == rhs, to_string(lhs),
              to_string(rhs));
    }

  for (int i = 0; i < n; ++i) {
    const Rational e = counit(d.chi[i]);
    rep.add("counit_chi[" + index_label(i) + "]", e == 0, to_string(e), "0");
  }
  return rep;
}

OneForm omega_times_function(const FodcData& d, int i, const Element& a) {
  if (i < 0 || i >= d.n) throw Error("form index out of range");
  OneForm out;
  for (int j = 0; j < d.n; ++j) out.components.push_back(left_act(d.paired, d.f[i][j], a));
  return out;
}

OneForm differential(const FodcData& d, const Element& a) {
  OneForm out;
  for (int i = 0; i < d.n; ++i) out.components.push_back(left_act(d.paired, d.chi[i], a));
  return out;
}

OneForm left_multiply(const Element& a, const OneForm& w) {
  OneForm out;
  for (const auto& c : w.components) out.components.push_back(multiply(a, c));
  return out;
}

OneForm right_multiply(const FodcData& d, const OneForm& w, const Element& a) {
  OneForm out;
  for (int j = 0; j < d.n; ++j) out.components.push_back(Element::zero(d.paired.alg));
  for (int i = 0; i < d.n; ++i) {
    const OneForm moved = omega_times_function(d, i, a);
    for (int j = 0; j < d.n; ++j) out.components[j] += multiply(w.components[i], moved.components[j]);
  }
  return out;
}

OneForm operator+(const OneForm& a, const OneForm& b) {
  if (a.components.size() != b.components.size()) throw Error("one-form dimension mismatch");
  OneForm out = a;
  for (std::size_t i = 0; i < b.components.size(); ++i) out.components[i] += b.components[i];
  return out;
}

SuiteReport check_omega_presentation(const FodcData& d) {
  SuiteReport rep;
  rep.suite = "omega_presentation";
  for (int i = 0; i < d.n; ++i) {
    OneForm sum;
    for (int j = 0; j < d.n; ++j) sum.components.push_back(Element::zero(d.paired.alg));
    for (const auto& [a, b] : d.omega_presentation[i]) sum = sum + left_multiply(a, differential(d, b));
    OneForm expected;
    for (int j = 0; j < d.n; ++j)
      expected.components.push_back(i == j ? Element::unit(d.paired.alg) : Element::zero(d.paired.alg));
    rep.add("w[" + index_label(i) + "]", sum == expected, to_string(sum), to_string(expected));
  }
  return rep;
}

std::string to_string(const OneForm& w) {
  std::string out;
  for (std::size_t i = 0; i < w.components.size(); ++i) {
    if (w.components[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(w.components[i]) + ") * w[" + std::to_string(i + 1) + "]";
  }
  return out.empty() ? "0" : out;
}

}  // namespace hopfcalc
