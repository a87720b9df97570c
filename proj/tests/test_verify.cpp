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

#include <gtest/gtest.h>

#include <sstream>

#include "hopfcalc/spec_file.hpp"
#include "hopfcalc/verify.hpp"

using namespace hopfcalc;

namespace {

FodcData s3() { return build_calculus(builtin_spec("builtin:s3")); }

}  // namespace

TEST(Verify, AllBuiltinsPass) {
  for (const auto& name : builtin_names()) {
    const std::vector<SuiteReport> reports = run_suites(build_calculus(builtin_spec(name)), 3);
    EXPECT_EQ(reports.size(), 10u);
    for (const auto& r : reports) EXPECT_TRUE(r.ok()) << name << ": " << r.summary();
    EXPECT_EQ(suites_line(reports), "SUITES 10/10 PASS");
  }
}

TEST(Verify, SelectedSuitesOnly) {
  const std::vector<SuiteReport> reports = run_suites(s3(), 3, {"covariance", "cartan"});
  ASSERT_EQ(reports.size(), 2u);
  EXPECT_EQ(reports[0].suite, "covariance");
  EXPECT_EQ(reports[1].suite, "cartan");
  EXPECT_THROW(run_suites(s3(), 3, {"nonsense"}), Error);
}

TEST(Verify, GammaPairingClosedForm) {
  const SuiteReport r = check_gamma_pairing(make_workspace(s3()));
  EXPECT_TRUE(r.ok()) << r.summary();
}

TEST(Verify, TransposedBraidingFailsGammaPairing) {
  WedgeOptions o;
  o.transpose_braiding = true;
  const SuiteReport r = check_gamma_pairing(make_workspace(s3(), o));
  EXPECT_FALSE(r.ok());
  for (const auto& c : r.cases)
    if (!c.pass) EXPECT_NE(c.lhs, c.rhs);
}

TEST(Verify, MissingKoszulSignIsDetected) {
  WedgeOptions o;
  o.koszul_sign = false;
  const Workspace ws = make_workspace(s3(), o);
  EXPECT_FALSE(check_graded_bialgebra(*ws.wedge).ok());
}

TEST(Verify, CartanReportsMidsteps) {
  WedgeOptions o;
  o.max_degree = 4;
  const SuiteReport r = check_cartan(make_workspace(s3(), o));
  EXPECT_TRUE(r.ok()) << r.summary();
  int midsteps = 0, degree_three = 0;
  for (const auto& c : r.cases) {
    if (c.name.rfind("midstep", 0) == 0) ++midsteps;
    if (c.name.find(" on ") != std::string::npos && c.name.find("w[1] * w[2] * w[") != std::string::npos)
      ++degree_three;
  }
  EXPECT_EQ(midsteps, 3 * 6 * 6 * 4);
  EXPECT_GT(degree_three, 0);
}

TEST(Verify, CrossProductOracle) {
  const SuiteReport r = check_cross_product(make_workspace(build_calculus(builtin_spec("builtin:z3"))), 40, 3);
  EXPECT_EQ(r.cases.size(), 40u);
  EXPECT_TRUE(r.ok()) << r.summary();
}

TEST(Verify, RecordsAreTabSeparated) {
  SuiteReport r;
  r.suite = "demo";
  r.add("a", true, "1", "1");
  r.add("b", false, "1", "2");
  std::ostringstream os;
  r.write_records(os);
  EXPECT_EQ(os.str(), "demo\ta\tPASS\t1\t1\ndemo\tb\tFAIL\t1\t2\n");
  EXPECT_EQ(r.failed(), 1u);
}
