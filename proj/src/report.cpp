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

#include "hopfcalc/report.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace hopfcalc {

namespace {

// Tabs and newlines would break the record format.
std::string sanitize(const std::string& s) {
  std::string out = s;
  std::replace(out.begin(), out.end(), '\t', ' ');
  std::replace(out.begin(), out.end(), '\n', ' ');
  return out;
}

}  // namespace

void SuiteReport::add(std::string name, bool pass, std::string lhs, std::string rhs) {
  cases.push_back({std::move(name), pass, std::move(lhs), std::move(rhs)});
}

std::size_t SuiteReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const CaseRecord& c) { return c.pass; }));
}

void SuiteReport::write_records(std::ostream& os) const {
  for (const auto& c : cases) {
    os << sanitize(suite) << '\t' << sanitize(c.name) << '\t' << (c.pass ? "PASS" : "FAIL")
       << '\t' << sanitize(c.lhs) << '\t' << sanitize(c.rhs) << '\n';
  }
}

std::string SuiteReport::summary() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", seconds);
  std::string out = suite + ": " + std::to_string(passed()) + "/" + std::to_string(cases.size()) +
                    " cases " + (ok() ? "PASS" : "FAIL") + " (" + buf + " s)";
  if (!note.empty()) out += " [" + note + "]";
  return out;
}

}  // namespace hopfcalc
