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

#ifndef HOPFCALC_VERIFY_HPP
#define HOPFCALC_VERIFY_HPP

#include <string>
#include <vector>

#include "hopfcalc/crossprod.hpp"

namespace hopfcalc {

/// A calculus with its form algebra and cross product built once.
struct Workspace {
  WedgePtr wedge;
  CrossPtr cross;

  const FodcData& fodc() const { return wedge->fodc(); }
};

Workspace make_workspace(const FodcData& d, WedgeOptions options = {});

/// gamma_i |> a = 0 and gamma_i |> da = chi_i |> a for every i and basis a.
SuiteReport check_inner_derivation(const Workspace& ws);

/// h |> (d rho) = d(h |> rho) for basis h in A* and basis rho below the top degree.
SuiteReport check_lie_d_commute(const Workspace& ws);

/// Delta(gamma_i) = 1 (x) gamma_i + gamma_j (x) f^j_i against products of
/// forms, and gamma_i h = (r^j_i |> h) gamma_j as functionals on degree one.
SuiteReport check_gamma_coproduct(const Workspace& ws);

/// <gamma_i gamma_j, a w^m w^n> = eps(a)(delta^m_i delta^n_j - <f^m_j, r^n_i>)
/// for all indices and basis a, and vanishing of that closed form on
/// ker(I - sigma) for the braiding the form algebra was built with.
SuiteReport check_gamma_pairing(const Workspace& ws);

/// Both of the above as one suite.
SuiteReport check_gamma_relations(const Workspace& ws);

/// chi_i |> rho = d(gamma_i |> rho) + gamma_i |> d(rho) for basis rho below
/// the top degree, plus the three terms of the degree-one case a db
/// computed separately.
SuiteReport check_cartan(const Workspace& ws);

/// Normal-ordered products acting on forms agree with composing the actions
/// of the factors, on `pairs` random pairs drawn from `seed`.
SuiteReport check_cross_product(const Workspace& ws, int pairs, unsigned seed);

/// Suite names in run order.
const std::vector<std::string>& suite_names();

/// Runs the named suites (all when empty) in the fixed order of suite_names().
/// Throws on an unknown name.
std::vector<SuiteReport> run_suites(const FodcData& d, int max_degree, const std::vector<std::string>& only = {});

/// `SUITES m/n PASS` or `SUITES m/n FAIL`.
std::string suites_line(const std::vector<SuiteReport>& reports);

}  // namespace hopfcalc

#endif  // HOPFCALC_VERIFY_HPP
