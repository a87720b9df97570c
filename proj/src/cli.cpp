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

#include "hopfcalc/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>

#include "hopfcalc/expr.hpp"
#include "hopfcalc/spec_file.hpp"

namespace hopfcalc {

namespace {

struct Options {
  std::string calculus;
  std::vector<std::string> suites;
  int max_degree = 0;
  std::string report;
  std::string expr;
};

int max_degree_for(const Options& o, const CalculusSpec& spec) {
  return o.max_degree > 0 ? o.max_degree : spec.max_degree;
}

int run_check(const Options& o, std::ostream& out) {
  const CalculusSpec spec = load_calculus_spec(o.calculus);
  const FodcData d = build_calculus(spec);
  const std::vector<SuiteReport> reports = run_suites(d, max_degree_for(o, spec), o.suites);
  std::ofstream report_file;
  if (!o.report.empty()) {
    report_file.open(o.report);
    if (!report_file) throw Error("cannot write report '" + o.report + "'");
  }
  for (const auto& r : reports) {
    out << r.summary() << '\n';
    if (report_file) r.write_records(report_file);
    if (!r.ok()) {
      SuiteReport failing{r.suite, {}, r.seconds, {}};
      for (const auto& c : r.cases)
        if (!c.pass) failing.cases.push_back(c);
      failing.write_records(out);
    }
  }
  const std::string line = suites_line(reports);
  out << line << '\n';
  return line.ends_with("PASS") ? 0 : 1;
}

int run_eval(const Options& o, std::ostream& out) {
  const CalculusSpec spec = load_calculus_spec(o.calculus);
  const ExprPtr e = parse_expression(o.expr);
  WedgeOptions wo;
  wo.max_degree = max_degree_for(o, spec);
  const Workspace ws = make_workspace(build_calculus(spec), wo);
  out << print_normal(evaluate(*e, ws)) << '\n';
  return 0;
}

void print_matrix(std::ostream& out, const std::string& title, const Matrix& m) {
  out << title << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out << (j ? " " : "  ") << to_string(m(i, j));
    out << '\n';
  }
}

void print_dims(std::ostream& out, const ExteriorBasis& b) {
  for (int k = 0; k <= b.max_degree(); ++k) out << "dim L^" << k << " = " << b.dim(k) << '\n';
  out << "dim L^" << b.max_degree() + 1 << " = " << b.dim_above_max()
      << (b.complete() ? "" : " (truncated)") << '\n';
}

int run_tables(const Options& o, std::ostream& out) {
  const CalculusSpec spec = load_calculus_spec(o.calculus);
  const FodcData d = build_calculus(spec);
  out << "calculus " << spec.name << ", n = " << d.n << '\n';
  out << "forms";
  for (int i = 0; i < d.n; ++i) out << " w[" << i + 1 << "]=" << spec.group.name(d.subset[static_cast<std::size_t>(i)]);
  out << '\n';
  for (int i = 0; i < d.n; ++i)
    for (int j = 0; j < d.n; ++j)
      out << "r[" << i + 1 << "," << j + 1 << "] = " << to_string(d.r[i][j]) << '\n';
  for (int i = 0; i < d.n; ++i)
    for (int j = 0; j < d.n; ++j)
      out << "f[" << i + 1 << "," << j + 1 << "] = " << to_string(d.f[i][j]) << '\n';
  for (int i = 0; i < d.n; ++i) out << "chi[" << i + 1 << "] = " << to_string(d.chi[i]) << '\n';
  const Braiding b = compute_braiding(d);
  print_matrix(out, "sigma (row i*n+j, column m*n+k)", b.sigma);
  print_dims(out, ExteriorBasis(b, max_degree_for(o, spec)));
  return 0;
}

int run_dims(const Options& o, std::ostream& out) {
  const CalculusSpec spec = load_calculus_spec(o.calculus);
  const FodcData d = build_calculus(spec);
  print_dims(out, build_exterior(d, max_degree_for(o, spec)));
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact bicovariant calculi on finite groups"};
  app.require_subcommand(1);
  Options o;

  auto add_calculus = [&](CLI::App* sub) {
    sub->add_option("--calculus", o.calculus, "spec file or builtin:z2|builtin:z3|builtin:s3")->required();
  };
  CLI::App* check = app.add_subcommand("check", "run the identity suites");
  add_calculus(check);
  check->add_option("--suite", o.suites, "suite to run (repeatable)");
  check->add_option("--max-degree", o.max_degree, "top form degree")->check(CLI::PositiveNumber);
  check->add_option("--report", o.report, "write tab-separated case records");

  CLI::App* eval = app.add_subcommand("eval", "print the normal form of an expression");
  add_calculus(eval);
  eval->add_option("--expr", o.expr, "expression")->required();
  eval->add_option("--max-degree", o.max_degree, "top form degree")->check(CLI::PositiveNumber);

  CLI::App* tables = app.add_subcommand("tables", "print r, f, chi, sigma and exterior dimensions");
  add_calculus(tables);
  tables->add_option("--max-degree", o.max_degree, "top form degree")->check(CLI::PositiveNumber);

  CLI::App* dims = app.add_subcommand("dims", "print exterior dimensions");
  add_calculus(dims);
  dims->add_option("--max-degree", o.max_degree, "top form degree")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (check->parsed()) return run_check(o, out);
    if (eval->parsed()) return run_eval(o, out);
    if (tables->parsed()) return run_tables(o, out);
    if (dims->parsed()) return run_dims(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace hopfcalc
