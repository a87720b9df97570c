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

#ifndef HOPFCALC_CALCULUS_HPP
#define HOPFCALC_CALCULUS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "hopfcalc/duality.hpp"

namespace hopfcalc {

/// First-order bicovariant calculus on A with left-invariant basis w^1..w^n:
///
///   w^i a = (f^i_j |> a) w^j,   Delta(w^i) = 1 (x) w^i + w^j (x) r^i_j,
///   da = (chi_i |> a) w^i.
///
/// Index convention: r[i][j] = r^i_j and f[i][j] = f^i_j (upper index first).
struct FodcData {
  int n = 0;
  PairedHopf paired;
  std::vector<std::vector<Element>> r;  // in A
  std::vector<std::vector<Element>> f;  // in A*
  std::vector<Element> chi;             // in A*
  /// w^i = sum_k a_k d(b_k)
  std::vector<std::vector<std::pair<Element, Element>>> omega_presentation;
  /// Present for calculi built from a group; drives name lookup in the DSL.
  std::optional<GroupTable> group;
  std::vector<int> subset;  // group elements labelling w^1..w^n
  std::string name;
};

/// Functions on the left of the invariant forms: sum_i a_i w^i.
struct OneForm {
  std::vector<Element> components;
  bool operator==(const OneForm& o) const { return components == o.components; }
};

/// Calculus on Fun(G) from a conjugation-invariant subset S of G \ {e}:
/// f^x_y = delta_xy x, chi_x = x - e, r^x_y = 1{t : t^-1 y t = x},
/// w^x = sum_h e_h d(e_{hx}). Runs check_consistency and the presentation
/// check before returning; throws on any failure.
FodcData finite_group_calculus(const GroupTable& g, const std::vector<int>& subset);

/// The seven defining relations, each exhaustively over basis indices:
/// coproduct of r, coproduct of f, the f/r exchange relation, counits of
/// r and f, coproduct of chi, the right action of chi, counit of chi.
SuiteReport check_consistency(const FodcData& d);

/// w^i a as a OneForm.
OneForm omega_times_function(const FodcData& d, int i, const Element& a);
OneForm differential(const FodcData& d, const Element& a);

/// a * sum_i b_i w^i
OneForm left_multiply(const Element& a, const OneForm& w);
/// (sum_i b_i w^i) * a, moving a to the left of the invariant forms.
OneForm right_multiply(const FodcData& d, const OneForm& w, const Element& a);
OneForm operator+(const OneForm& a, const OneForm& b);

/// Checks that the stored presentation reproduces each w^i.
SuiteReport check_omega_presentation(const FodcData& d);

std::string to_string(const OneForm& w);

}  // namespace hopfcalc

#endif  // HOPFCALC_CALCULUS_HPP
