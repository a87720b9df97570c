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

#include <fstream>
#include <map>
#include <sstream>

#include "hopfcalc/expr.hpp"
#include "hopfcalc/spec_file.hpp"

using namespace hopfcalc;

namespace {

const Workspace& workspace(const std::string& name) {
  static std::map<std::string, Workspace> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, make_workspace(build_calculus(builtin_spec(name)))).first;
  return it->second;
}

std::string tree(const std::string& text) { return to_string(*parse_expression(text)); }

std::string eval(const std::string& calculus, const std::string& text) {
  return print_normal(evaluate(text, workspace(calculus)));
}

}  // namespace

TEST(Parser, Precedence) {
  EXPECT_EQ(tree("e[g] + 2*w[1]*gamma[1]"), "Sum(e[g], Prod(Prod(2, w[1]), gamma[1]))");
  EXPECT_EQ(tree("w[1] - w[2] - w[3]"), "Sum(Sum(w[1], Neg(w[2])), Neg(w[3]))");
  EXPECT_EQ(tree("-(e[e])"), "Neg(e[e])");
}

TEST(Parser, Operators) {
  EXPECT_EQ(tree("d(e[g])"), "Diff(e[g])");
  EXPECT_EQ(tree("L(chi[1]; w[2]*e[g])"), "Lie(chi[1]; Prod(w[2], e[g]))");
  EXPECT_EQ(tree("iota(2; w[1])"), "Iota(2; w[1])");
  EXPECT_EQ(tree("<gamma[1], w[1]>"), "Pair(gamma[1], w[1])");
  EXPECT_EQ(tree("f[2,3]"), "f[2,3]");
  EXPECT_EQ(tree("3/6"), "1/2");
  EXPECT_EQ(tree("  u[ s12 ]\n* w[1]"), "Prod(u[s12], w[1])");
}

TEST(Parser, ErrorsCarryPosition) {
  try {
    parse_expression("e[g] +\n  * w[1]");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 3);
    EXPECT_FALSE(e.expected().empty());
    EXPECT_NE(std::string(e.what()).find("syntax error at 2:3"), std::string::npos);
  }
  EXPECT_THROW(parse_expression("w[0]"), ParseError);
  EXPECT_THROW(parse_expression("1/0"), ParseError);
  EXPECT_THROW(parse_expression("foo"), ParseError);
  EXPECT_THROW(parse_expression("d(e[g]"), ParseError);
  EXPECT_THROW(parse_expression("e[g] $"), ParseError);
  EXPECT_THROW(parse_expression(""), ParseError);
}

TEST(Evaluate, NormalForms) {
  EXPECT_EQ(eval("builtin:z2", "d(e[g])"), "(e[e] - e[g]) * w[1]");
  EXPECT_EQ(eval("builtin:z2", "gamma[1]*e[g]"), "e[g] * gamma[1]");
  EXPECT_EQ(eval("builtin:z2", "d(d(e[g]))"), "0");
  EXPECT_EQ(eval("builtin:z3", "<gamma[1], w[1]>"), "1");
  EXPECT_EQ(eval("builtin:z2", "iota(1; e[g]*w[1])"), "e[g]");
}

TEST(Evaluate, TypeErrors) {
  const Workspace& ws = workspace("builtin:z2");
  EXPECT_THROW(evaluate("e[x]", ws), Error);
  EXPECT_THROW(evaluate("w[2]", ws), Error);
  EXPECT_THROW(evaluate("d(gamma[1])", ws), Error);
  EXPECT_THROW(evaluate("L(w[1]; w[1])", ws), Error);
  try {
    evaluate("e[e] + d(gamma[1])", ws);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(std::string(e.what()).rfind("type error at 1:8", 0), 0u) << e.what();
  }
}

TEST(Evaluate, RoundTripCorpus) {
  std::ifstream in(std::string(HOPFCALC_TEST_DATA) + "/roundtrip.txt");
  ASSERT_TRUE(in);
  int count = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    ASSERT_NE(tab, std::string::npos) << line;
    const Workspace& ws = workspace(line.substr(0, tab));
    const CrossElement x = evaluate(line.substr(tab + 1), ws);
    const std::string printed = print_normal(x);
    const CrossElement y = evaluate(printed, ws);
    EXPECT_EQ(x, y) << line << " printed as " << printed;
    EXPECT_EQ(print_normal(y), printed) << line;
    ++count;
  }
  EXPECT_GE(count, 30);
}

TEST(SpecFile, ParseAndFormatRoundTrip) {
  for (const auto& name : builtin_names()) {
    const CalculusSpec spec = builtin_spec(name);
    const std::string text = format_calculus_spec(spec);
    const CalculusSpec back = parse_calculus_spec(text, name);
    EXPECT_EQ(back.group.names(), spec.group.names());
    EXPECT_EQ(back.subset, spec.subset);
    EXPECT_EQ(back.max_degree, spec.max_degree);
    EXPECT_EQ(format_calculus_spec(back), text);
  }
}

TEST(SpecFile, CommentsAndSectionOrder) {
  const CalculusSpec s = parse_calculus_spec(
      "# z2\n[subset]\nelements = g\n[group]\nelements = e g  # names\ne g\ng e\n", "mine");
  EXPECT_EQ(s.group.order(), 2);
  EXPECT_EQ(s.subset, std::vector<int>{1});
  EXPECT_EQ(s.max_degree, 3);
  EXPECT_TRUE(check_consistency(build_calculus(s)).ok());
}

TEST(SpecFile, Errors) {
  const std::string table = "[group]\nelements = e g\ne g\ng e\n";
  EXPECT_THROW(parse_calculus_spec(table), Error);                                   // no subset
  EXPECT_THROW(parse_calculus_spec("[subset]\nelements = g\n"), Error);              // no group
  EXPECT_THROW(parse_calculus_spec(table + "[subset]\nelements = h\n"), Error);      // unknown element
  EXPECT_THROW(parse_calculus_spec("[group]\nelements = e g\ne g\n[subset]\nelements = g\n"), Error);
  EXPECT_THROW(parse_calculus_spec("[group]\nelements = e g\ne g\ng g\n[subset]\nelements = g\n"), Error);
  EXPECT_THROW(parse_calculus_spec("[group]\nelements = e e\ne e\ne e\n[subset]\nelements = e\n"), Error);
  EXPECT_THROW(parse_calculus_spec(table + "[subset]\nelements = g\n[options]\nmax_degree = x\n"), Error);
  EXPECT_THROW(parse_calculus_spec(table + "[bogus]\n"), Error);
  try {
    parse_calculus_spec("[group]\nelements = e g\ne g\ng x\n[subset]\nelements = g\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(std::string(e.what()), "calculus spec line 4: unknown element 'x'");
  }
  EXPECT_THROW(build_calculus(parse_calculus_spec(table + "[subset]\nelements = e\n")), Error);
}

TEST(SpecFile, NonInvariantSubset) {
  CalculusSpec s = builtin_spec("builtin:s3");
  s.subset = {*s.group.find("s12"), *s.group.find("s13")};
  try {
    build_calculus(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(std::string(e.what()), "not ad-invariant");
  }
}
