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

#ifndef HOPFCALC_GROUP_HPP
#define HOPFCALC_GROUP_HPP

#include <optional>
#include <string>
#include <vector>

namespace hopfcalc {

/// Finite group given by its multiplication table. Element order is the
/// basis order of every algebra built from the group.
class GroupTable {
 public:
  /// Validates the table exhaustively; throws Error("not a group").
  GroupTable(std::vector<std::string> names, std::vector<std::vector<int>> mul);

  int order() const { return static_cast<int>(names_.size()); }
  int mul(int a, int b) const { return mul_[a][b]; }
  int identity() const { return identity_; }
  int inverse(int a) const { return inverse_[a]; }
  int conjugate(int t, int y) const { return mul(mul(inverse(t), y), t); }  // t^-1 y t
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int a) const { return names_[a]; }
  std::optional<int> find(const std::string& name) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> mul_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

/// Z_n with elements e, c, c2, ...; Z_2 uses the names e, g.
GroupTable cyclic_group(int n);

/// S_3 on {1,2,3} with (st)(k) = s(t(k)); elements e, s12, s13, s23, c123, c132
/// where c123 sends 1->2->3->1.
GroupTable symmetric_group_s3();

}  // namespace hopfcalc

#endif  // HOPFCALC_GROUP_HPP
