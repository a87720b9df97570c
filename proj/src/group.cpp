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

#include "hopfcalc/group.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "hopfcalc/rational.hpp"

namespace hopfcalc {

GroupTable::GroupTable(std::vector<std::string> names, std::vector<std::vector<int>> mul)
    : names_(std::move(names)), mul_(std::move(mul)) {
  const int n = order();
  if (n == 0) throw Error("not a group: empty element list");
  if (std::set<std::string>(names_.begin(), names_.end()).size() != names_.size())
    throw Error("not a group: duplicate element names");
  if (static_cast<int>(mul_.size()) != n) throw Error("not a group: table has wrong row count");
  for (const auto& row : mul_) {
    if (static_cast<int>(row.size()) != n) throw Error("not a group: table row has wrong length");
    for (int v : row)
      if (v < 0 || v >= n) throw Error("not a group: table entry out of range");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]]) throw Error("not a group: not associative");

  std::optional<int> id;
  for (int e = 0; e < n && !id; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = mul_[e][a] == a && mul_[a][e] == a;
    if (ok) id = e;
  }
  if (!id) throw Error("not a group: no identity");
  identity_ = *id;

  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mul_[a][b] == identity_ && mul_[b][a] == identity_) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] < 0) throw Error("not a group: element without inverse");
  }
}

std::optional<int> GroupTable::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

GroupTable cyclic_group(int n) {
  if (n < 1) throw Error("cyclic group order must be positive");
  std::vector<std::string> names;
  for (int k = 0; k < n; ++k) {
    if (k == 0)
      names.emplace_back("e");
    else if (n == 2)
      names.emplace_back("g");
    else
      names.push_back(k == 1 ? std::string("c") : "c" + std::to_string(k));
  }
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(n), std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  return GroupTable(std::move(names), std::move(mul));
}

GroupTable symmetric_group_s3() {
  using Perm = std::array<int, 3>;  // images of 1,2,3 (0-based)
  const std::vector<std::pair<std::string, Perm>> elems = {
      {"e", {0, 1, 2}},    {"s12", {1, 0, 2}},  {"s13", {2, 1, 0}},
      {"s23", {0, 2, 1}},  {"c123", {1, 2, 0}}, {"c132", {2, 0, 1}},
  };
  std::vector<std::string> names;
  for (const auto& [name, p] : elems) names.push_back(name);
  std::vector<std::vector<int>> mul(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      Perm prod{};
      for (int k = 0; k < 3; ++k) prod[k] = elems[a].second[elems[b].second[k]];
      for (int c = 0; c < 6; ++c)
        if (elems[c].second == prod) mul[a][b] = c;
    }
  }
  return GroupTable(std::move(names), std::move(mul));
}

}  // namespace hopfcalc
