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

#include "hopfcalc/rational.hpp"

namespace hopfcalc {

std::string to_string(const Rational& q) { return q.str(); }

SparseTerms to_sparse(const Vector& v) {
  SparseTerms out;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) out.emplace_back(static_cast<int>(i), v(i));
  return out;
}

std::string format_sum(const std::vector<std::pair<Rational, std::string>>& terms) {
  std::string out;
  for (const auto& [coeff, label] : terms) {
    if (coeff == 0) continue;
    const bool negative = coeff < 0;
    const Rational mag = negative ? Rational(-coeff) : coeff;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (label == "1")
      out += to_string(mag);
    else if (mag == 1)
      out += label;
    else
      out += to_string(mag) + " * " + label;
  }
  return out.empty() ? "0" : out;
}

void add_scaled(Vector& acc, const SparseTerms& terms, const Rational& scale) {
  if (scale == 0) return;
  for (const auto& [i, c] : terms) acc(i) += scale * c;
}

}  // namespace hopfcalc
