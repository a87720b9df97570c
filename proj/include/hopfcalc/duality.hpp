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

#ifndef HOPFCALC_DUALITY_HPP
#define HOPFCALC_DUALITY_HPP

#include "hopfcalc/hopf.hpp"

namespace hopfcalc {

/// A Hopf algebra together with its dual and the evaluation pairing
/// pairing(i, j) = <dual e_i, e_j>.
struct PairedHopf {
  HopfPtr alg;
  HopfPtr dual;
  Matrix pairing;

  Rational pair(const Element& x, const Element& a) const;
};

/// Pairs h with dual_hopf(h) through the identity matrix.
PairedHopf canonical_pairing(HopfPtr alg);
/// Pairs Fun(G) with kG, u_x evaluating delta functions at x.
PairedHopf group_pairing(const GroupTable& g);

/// x |> a = a_(1) <x, a_(2)>
Element left_act(const PairedHopf& p, const Element& x, const Element& a);
/// a <| x = a_(2) <x, a_(1)>
Element right_act(const PairedHopf& p, const Element& a, const Element& x);
/// a |> h = h_(1) <h_(2), a>  (A acting on A*)
Element act_on_dual(const PairedHopf& p, const Element& a, const Element& h);
/// h |> theta = h_(1) theta S(h_(2))
Element adjoint_act(const PairedHopf& p, const Element& h, const Element& theta);

/// x |> (ab) = (x_(1) |> a)(x_(2) |> b) for all basis x, a, b.
SuiteReport check_covariance(const PairedHopf& p);

}  // namespace hopfcalc

#endif  // HOPFCALC_DUALITY_HPP
