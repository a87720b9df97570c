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

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "hopfcalc/expr.hpp"
#include "hopfcalc/spec_file.hpp"

using namespace hopfcalc;

namespace {

struct Outcome {
  bool pass = true;
  std::string details;
};

int failures = 0;

void criterion(int number, const std::string& name, double limit, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (t > limit) {
    o.pass = false;
    o.details += " over the " + std::to_string(static_cast<int>(limit)) + " s limit";
  }
  if (!o.pass) ++failures;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", t);
  std::cout << "criterion " << number << " " << name << ": " << (o.pass ? "PASS" : "FAIL") << " (" << buf
            << " s) " << o.details << std::endl;
}

void account(Outcome& o, const std::string& label, const SuiteReport& r) {
  o.pass = o.pass && r.ok();
  o.details += label + " " + std::to_string(r.passed()) + "/" + std::to_string(r.cases.size()) + "; ";
  if (!r.ok())
    for (const auto& c : r.cases)
      if (!c.pass) {
        o.details += "first failure " + c.name + ": " + c.lhs + " != " + c.rhs + "; ";
        break;
      }
}

FodcData calculus(const std::string& name) { return build_calculus(builtin_spec(name)); }

Workspace workspace(const std::string& name, int max_degree) {
  WedgeOptions o;
  o.max_degree = max_degree;
  return make_workspace(calculus(name), o);
}

std::string short_name(const std::string& builtin) { return builtin.substr(builtin.find(':') + 1); }

struct Command {
  int code;
  std::string out;
};

Command shell(const std::string& cmd) {
  Command c{-1, {}};
  FILE* p = popen((cmd + " 2>&1").c_str(), "r");
  if (!p) return c;
  std::array<char, 4096> buf{};
  for (std::size_t k; (k = fread(buf.data(), 1, buf.size(), p)) > 0;) c.out.append(buf.data(), k);
  const int status = pclose(p);
  c.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return c;
}

std::string last_line(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s.substr(s.rfind('\n') + 1);
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("hopfcalc_acceptance_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <cli binary> <test data dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::string data = argv[2];
  const std::vector<std::string> builtins = builtin_names();

  criterion(1, "hopf axioms", 1, [&] {
    Outcome o;
    for (const auto& name : builtins) {
      const FodcData d = calculus(name);
      account(o, "Fun(" + short_name(name) + ")", check_hopf_axioms(*d.paired.alg));
      account(o, "Fun(" + short_name(name) + ")*", check_hopf_axioms(*d.paired.dual));
    }
    return o;
  });

  criterion(2, "consistency", 5, [&] {
    Outcome o;
    for (const auto& name : builtins) account(o, short_name(name), check_consistency(calculus(name)));
    return o;
  });

  criterion(3, "covariance", 5, [&] {
    Outcome o;
    for (const auto& name : builtins) account(o, short_name(name), check_covariance(calculus(name).paired));
    return o;
  });

  criterion(4, "differential and graded bialgebra", 30, [&] {
    Outcome o;
    for (const auto& name : builtins) {
      const Workspace ws = workspace(name, 3);
      account(o, short_name(name) + " d", check_differential(*ws.wedge));
      account(o, short_name(name) + " bialgebra", check_graded_bialgebra(*ws.wedge));
    }
    return o;
  });

  criterion(5, "gamma pairing", 10, [&] {
    Outcome o;
    for (const auto& name : builtins) account(o, short_name(name), check_gamma_pairing(workspace(name, 3)));
    WedgeOptions transposed;
    transposed.transpose_braiding = true;
    const SuiteReport control = check_gamma_pairing(make_workspace(calculus("builtin:s3"), transposed));
    o.details += "transposed control " + std::to_string(control.failed()) + " failing cases";
    if (control.ok()) {
      o.pass = false;
      o.details += " (control passed)";
    }
    return o;
  });

  criterion(6, "inner derivation and gamma relations", 30, [&] {
    Outcome o;
    for (const auto& name : builtins) {
      const Workspace ws = workspace(name, 3);
      account(o, short_name(name) + " inner", check_inner_derivation(ws));
      account(o, short_name(name) + " lie/d", check_lie_d_commute(ws));
      account(o, short_name(name) + " coproduct", check_gamma_coproduct(ws));
    }
    return o;
  });

  criterion(7, "cartan identity", 60, [&] {
    Outcome o;
    for (const auto& name : builtins) {
      const SuiteReport r = check_cartan(workspace(name, name == "builtin:s3" ? 4 : 3));
      account(o, short_name(name), r);
      std::size_t mid = 0, mid_ok = 0;
      for (const auto& c : r.cases)
        if (c.name.rfind("midstep", 0) == 0) {
          ++mid;
          if (c.pass) ++mid_ok;
        }
      o.details += "midsteps " + std::to_string(mid_ok) + "/" + std::to_string(mid) + "; ";
    }
    return o;
  });

  criterion(8, "cross product", 60, [&] {
    Outcome o;
    const SuiteReport r = check_cross_product(workspace("builtin:s3", 4), 100, 1);
    account(o, "s3 seed 1", r);
    if (r.cases.size() != 100) o.pass = false;
    return o;
  });

  criterion(9, "command line", 60, [&] {
    Outcome o;
    const Command check = shell("'" + cli + "' check --calculus builtin:s3");
    const std::string line = last_line(check.out);
    const bool suites = line.rfind("SUITES ", 0) == 0 && line.ends_with(" PASS");
    o.details += "check exit " + std::to_string(check.code) + " '" + line + "'; ";
    o.pass = check.code == 0 && suites;

    const std::string corrupt =
        write_temp("corrupt.calc", "[group]\nelements = e g\ne g\ng g\n[subset]\nelements = g\n");
    const Command bad = shell("'" + cli + "' check --calculus '" + corrupt + "'");
    o.details += "corrupted exit " + std::to_string(bad.code) + "; ";
    o.pass = o.pass && bad.code == 2;

    CalculusSpec s3 = builtin_spec("builtin:s3");
    s3.subset = {*s3.group.find("s12")};
    const std::string noninv = write_temp("noninvariant.calc", format_calculus_spec(s3));
    const Command ni = shell("'" + cli + "' check --calculus '" + noninv + "'");
    o.details += "non-invariant exit " + std::to_string(ni.code) + "; ";
    o.pass = o.pass && ni.code == 2;

    std::ifstream in(data + "/roundtrip.txt");
    int total = 0, good = 0;
    for (std::string entry; std::getline(in, entry);) {
      if (entry.empty() || entry[0] == '#') continue;
      ++total;
      const auto tab = entry.find('\t');
      const Workspace ws = workspace(entry.substr(0, tab), 3);
      const CrossElement x = evaluate(entry.substr(tab + 1), ws);
      const std::string printed = print_normal(x);
      const CrossElement y = evaluate(printed, ws);
      if (x == y && print_normal(y) == printed)
        ++good;
      else
        o.details += "round trip failed: " + entry + "; ";
    }
    o.details += "round trip " + std::to_string(good) + "/" + std::to_string(total);
    o.pass = o.pass && total >= 30 && good == total;
    return o;
  });

  std::cout << (failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}
