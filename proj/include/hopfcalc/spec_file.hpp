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

#ifndef HOPFCALC_SPEC_FILE_HPP
#define HOPFCALC_SPEC_FILE_HPP

#include <string>
#include <vector>

#include "hopfcalc/calculus.hpp"

namespace hopfcalc {

/// Calculus description file:
///
///   # comment
///   [group]
///   elements = e g
///   e g          # row x lists x*y for y in element order
///   g e
///   [subset]
///   elements = g
///   [options]
///   max_degree = 3
///
/// Element names are identifiers. Sections may appear in any order; [options]
/// is optional.
struct CalculusSpec {
  std::string name;
  GroupTable group;
  std::vector<int> subset;
  int max_degree = 3;
};

CalculusSpec parse_calculus_spec(const std::string& text, const std::string& name = "calculus");
std::string format_calculus_spec(const CalculusSpec& spec);

/// `builtin:z2`, `builtin:z3`, `builtin:s3`, or a file path.
CalculusSpec load_calculus_spec(const std::string& source);
const std::vector<std::string>& builtin_names();
CalculusSpec builtin_spec(const std::string& name);

/// Validates the subset and builds the calculus (throws "not ad-invariant" etc.).
FodcData build_calculus(const CalculusSpec& spec);

}  // namespace hopfcalc

#endif  // HOPFCALC_SPEC_FILE_HPP
