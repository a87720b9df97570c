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

#include "hopfcalc/spec_file.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace hopfcalc {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

struct Section {
  std::map<std::string, std::pair<std::string, int>> values;  // key -> (value, line)
  std::vector<std::pair<std::vector<std::string>, int>> rows;
};

[[noreturn]] void spec_error(int line, const std::string& message) {
  throw Error("calculus spec line " + std::to_string(line) + ": " + message);
}

}  // namespace

CalculusSpec parse_calculus_spec(const std::string& text, const std::string& name) {
  std::map<std::string, Section> sections;
  std::string current;
  std::istringstream in(text);
  int lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') spec_error(lineno, "malformed section header");
      current = trim(line.substr(1, line.size() - 2));
      if (current != "group" && current != "subset" && current != "options")
        spec_error(lineno, "unknown section [" + current + "]");
      if (sections.count(current)) spec_error(lineno, "duplicate section [" + current + "]");
      sections[current];
      continue;
    }
    if (current.empty()) spec_error(lineno, "content before the first section");
    Section& sec = sections[current];
    const auto eq = line.find('=');
    if (eq != std::string::npos) {
      const std::string key = trim(line.substr(0, eq));
      if (sec.values.count(key)) spec_error(lineno, "duplicate key '" + key + "'");
      sec.values[key] = {trim(line.substr(eq + 1)), lineno};
    } else {
      sec.rows.push_back({words(line), lineno});
    }
  }

  if (!sections.count("group")) throw Error("calculus spec: missing [group] section");
  if (!sections.count("subset")) throw Error("calculus spec: missing [subset] section");
  const Section& g = sections["group"];
  const auto el = g.values.find("elements");
  if (el == g.values.end()) throw Error("calculus spec: [group] needs 'elements = ...'");
  const std::vector<std::string> names = words(el->second.first);
  if (names.empty()) spec_error(el->second.second, "empty element list");
  std::map<std::string, int> index;
  for (const auto& n : names) {
    if (!is_identifier(n)) spec_error(el->second.second, "element name '" + n + "' is not an identifier");
    if (index.count(n)) spec_error(el->second.second, "duplicate element name '" + n + "'");
    index[n] = static_cast<int>(index.size());
  }
  for (const auto& [key, v] : g.values)
    if (key != "elements") spec_error(v.second, "unknown key '" + key + "' in [group]");
  if (g.rows.size() != names.size())
    throw Error("calculus spec: multiplication table has " + std::to_string(g.rows.size()) + " rows, expected " +
                std::to_string(names.size()));
  std::vector<std::vector<int>> mul;
  for (const auto& [row, line] : g.rows) {
    if (row.size() != names.size())
      spec_error(line, "table row has " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(names.size()));
    std::vector<int> r;
    for (const auto& n : row) {
      const auto it = index.find(n);
      if (it == index.end()) spec_error(line, "unknown element '" + n + "'");
      r.push_back(it->second);
    }
    mul.push_back(std::move(r));
  }
  GroupTable table(names, std::move(mul));

  const Section& s = sections["subset"];
  const auto se = s.values.find("elements");
  if (se == s.values.end()) throw Error("calculus spec: [subset] needs 'elements = ...'");
  std::vector<int> subset;
  for (const auto& n : words(se->second.first)) {
    const auto it = index.find(n);
    if (it == index.end()) spec_error(se->second.second, "unknown element '" + n + "'");
    subset.push_back(it->second);
  }
  if (!s.rows.empty()) spec_error(s.rows.front().second, "unexpected line in [subset]");

  int max_degree = 3;
  if (sections.count("options")) {
    for (const auto& [key, v] : sections["options"].values) {
      if (key != "max_degree") spec_error(v.second, "unknown option '" + key + "'");
      try {
        std::size_t used = 0;
        max_degree = std::stoi(v.first, &used);
        if (used != v.first.size()) throw std::invalid_argument("trailing");
      } catch (const std::logic_error&) {
        spec_error(v.second, "max_degree must be an integer");
      }
      if (max_degree < 1) spec_error(v.second, "max_degree must be at least 1");
    }
    if (!sections["options"].rows.empty()) spec_error(sections["options"].rows.front().second, "unexpected line in [options]");
  }
  return CalculusSpec{name, std::move(table), std::move(subset), max_degree};
}

std::string format_calculus_spec(const CalculusSpec& spec) {
  std::ostringstream out;
  const GroupTable& g = spec.group;
  out << "[group]\nelements =";
  for (const auto& n : g.names()) out << ' ' << n;
  out << '\n';
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) out << (b ? " " : "") << g.name(g.mul(a, b));
    out << '\n';
  }
  out << "[subset]\nelements =";
  for (int x : spec.subset) out << ' ' << g.name(x);
  out << "\n[options]\nmax_degree = " << spec.max_degree << '\n';
  return out.str();
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"builtin:z2", "builtin:z3", "builtin:s3"};
  return names;
}

CalculusSpec builtin_spec(const std::string& name) {
  if (name == "builtin:z2") {
    GroupTable g = cyclic_group(2);
    return CalculusSpec{name, g, {*g.find("g")}, 3};
  }
  if (name == "builtin:z3") {
    GroupTable g = cyclic_group(3);
    return CalculusSpec{name, g, {*g.find("c"), *g.find("c2")}, 3};
  }
  if (name == "builtin:s3") {
    GroupTable g = symmetric_group_s3();
    return CalculusSpec{name, g, {*g.find("s12"), *g.find("s13"), *g.find("s23")}, 3};
  }
  throw Error("unknown builtin calculus '" + name + "'");
}

CalculusSpec load_calculus_spec(const std::string& source) {
  if (source.rfind("builtin:", 0) == 0) return builtin_spec(source);
  std::ifstream in(source);
  if (!in) throw Error("cannot read calculus spec '" + source + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_calculus_spec(text.str(), source);
}

FodcData build_calculus(const CalculusSpec& spec) {
  FodcData d = finite_group_calculus(spec.group, spec.subset);
  d.name = spec.name;
  return d;
}

}  // namespace hopfcalc
