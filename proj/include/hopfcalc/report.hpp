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

#ifndef HOPFCALC_REPORT_HPP
#define HOPFCALC_REPORT_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "hopfcalc/rational.hpp"

namespace hopfcalc {

/// One checked identity instance: the two sides as printable normal forms.
struct CaseRecord {
  std::string name;
  bool pass = false;
  std::string lhs;
  std::string rhs;
};

/// Outcome of an exhaustive identity check. A failing case always carries
/// both sides, which differ as canonical forms.
struct SuiteReport {
  std::string suite;
  std::vector<CaseRecord> cases;
  double seconds = 0.0;
  std::string note;

  void add(std::string name, bool pass, std::string lhs = {}, std::string rhs = {});
  template <typename T>
  void expect_equal(std::string name, const T& lhs, const T& rhs);

  std::size_t passed() const;
  std::size_t failed() const { return cases.size() - passed(); }
  bool ok() const { return failed() == 0; }

  /// Machine-readable records: suite<TAB>case<TAB>PASS|FAIL<TAB>lhs<TAB>rhs.
  void write_records(std::ostream& os) const;
  std::string summary() const;
};

template <typename T>
void SuiteReport::expect_equal(std::string name, const T& lhs, const T& rhs) {
  const bool same = lhs == rhs;
  add(std::move(name), same, to_string(lhs), to_string(rhs));
}

}  // namespace hopfcalc

#endif  // HOPFCALC_REPORT_HPP
