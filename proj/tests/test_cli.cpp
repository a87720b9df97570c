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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "hopfcalc/cli.hpp"

using namespace hopfcalc;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "hopfcalc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("hopfcalc_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

std::string last_line(const std::string& s) {
  std::string t = s;
  while (!t.empty() && t.back() == '\n') t.pop_back();
  return t.substr(t.rfind('\n') + 1);
}

}  // namespace

TEST(Cli, CheckBuiltin) {
  const CliRun r = run({"check", "--calculus", "builtin:z3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(last_line(r.out), "SUITES 10/10 PASS");
}

TEST(Cli, CheckWritesReport) {
  const std::string report = temp_file("report.tsv", "");
  const CliRun r = run({"check", "--calculus", "builtin:z2", "--suite", "consistency", "--report", report});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(last_line(r.out), "SUITES 1/1 PASS");
  std::ifstream in(report);
  std::string line;
  ASSERT_TRUE(std::getline(in, line));
  EXPECT_EQ(line.rfind("consistency\t", 0), 0u);
}

TEST(Cli, CheckSpecFile) {
  const std::string path = temp_file("z2.calc", "[group]\nelements = e g\ne g\ng e\n[subset]\nelements = g\n");
  EXPECT_EQ(run({"check", "--calculus", path}).code, 0);
}

TEST(Cli, BadInputsExitTwo) {
  const std::string corrupt = temp_file("bad.calc", "[group]\nelements = e g\ne g\ng g\n[subset]\nelements = g\n");
  const CliRun r = run({"check", "--calculus", corrupt});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("not a group"), std::string::npos) << r.err;

  const std::string noninv = temp_file(
      "noninv.calc",
      "[group]\nelements = e s12 s13 s23 c123 c132\n"
      "e s12 s13 s23 c123 c132\n"
      "s12 e c132 c123 s23 s13\n"
      "s13 c123 e c132 s12 s23\n"
      "s23 c132 c123 e s13 s12\n"
      "c123 s13 s23 s12 c132 e\n"
      "c132 s23 s12 s13 e c123\n"
      "[subset]\nelements = s12\n");
  const CliRun n = run({"check", "--calculus", noninv});
  EXPECT_EQ(n.code, 2) << n.err;
  EXPECT_NE(n.err.find("not ad-invariant"), std::string::npos) << n.err;

  EXPECT_EQ(run({"check", "--calculus", "/nonexistent/file"}).code, 2);
  EXPECT_EQ(run({"check", "--calculus", "builtin:z2", "--suite", "nope"}).code, 2);
  EXPECT_EQ(run({"check"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(Cli, Eval) {
  CliRun r = run({"eval", "--calculus", "builtin:z2", "--expr", "d(e[g])"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(e[e] - e[g]) * w[1]\n");
  r = run({"eval", "--calculus", "builtin:z2", "--expr", "d(e[g]"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("syntax error at 1:7"), std::string::npos) << r.err;
}

TEST(Cli, DimsAndTables) {
  CliRun r = run({"dims", "--calculus", "builtin:s3", "--max-degree", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "dim L^0 = 1\ndim L^1 = 3\ndim L^2 = 4\ndim L^3 = 3\ndim L^4 = 1\ndim L^5 = 0\n");
  r = run({"tables", "--calculus", "builtin:z2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("chi[1] = -u[e] + u[g]"), std::string::npos) << r.out;
}
