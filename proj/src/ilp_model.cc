// Copyright 2026 The maxflow-protection Authors.
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

#include "mfp/ilp_model.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mfp {
namespace {

std::string Var(std::string_view prefix, int a) {
  return std::string(prefix) + "_" + std::to_string(a);
}

std::string Var(std::string_view prefix, int a, int b) {
  return Var(prefix, a) + "_" + std::to_string(b);
}

std::vector<int> Depths(const NetworkGraph& hg) {
  std::vector<int> d = HopDistances(hg, hg.source());
  for (int& x : d) x = std::max(x, 0);
  return d;
}

void Add(std::vector<LinearConstraint>& out, std::string name,
         std::vector<LinearTerm> terms, Sense sense, std::int64_t rhs) {
  std::erase_if(terms, [](const LinearTerm& t) { return t.coef == 0; });
  if (terms.empty()) return;
  out.push_back({std::move(name), std::move(terms), sense, rhs});
}

std::string FormatTerms(const std::vector<LinearTerm>& terms) {
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const LinearTerm& t = terms[k];
    if (k > 0) out += t.coef < 0 ? " - " : " + ";
    else if (t.coef < 0) out += "- ";
    out += std::to_string(t.coef < 0 ? -t.coef : t.coef);
    out += ' ';
    out += t.var;
  }
  return out;
}

const char* SenseText(Sense s) {
  switch (s) {
    case Sense::kLessEqual:
      return "<=";
    case Sense::kEqual:
      return "=";
    case Sense::kGreaterEqual:
      return ">=";
  }
  return "=";
}

[[noreturn]] void Fail(int line, const std::string& what) {
  throw std::invalid_argument("line " + std::to_string(line) + ": " + what);
}

std::int64_t ParseInt(std::string_view token, int line) {
  std::int64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    Fail(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string> Tokens(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(c));
  return out;
}

// Parses "[-] c v [+|- c v]..." starting at tokens[pos]; stops at a sense
// token or the end.
std::vector<LinearTerm> ParseTerms(const std::vector<std::string>& tokens,
                                   std::size_t& pos, int line) {
  std::vector<LinearTerm> terms;
  while (pos < tokens.size()) {
    const std::string& tok = tokens[pos];
    if (tok == "<=" || tok == "=" || tok == ">=") break;
    std::int64_t sign = 1;
    if (tok == "+" || tok == "-") {
      sign = tok == "-" ? -1 : 1;
      ++pos;
    } else if (!terms.empty()) {
      Fail(line, "expected '+' or '-' between terms");
    }
    if (pos + 1 >= tokens.size()) Fail(line, "truncated term");
    const std::int64_t coef = ParseInt(tokens[pos], line);
    const std::string& var = tokens[pos + 1];
    if (var.empty() || !(std::isalpha(static_cast<unsigned char>(var[0])))) {
      Fail(line, "bad variable name '" + var + "'");
    }
    terms.push_back({sign * coef, var});
    pos += 2;
  }
  return terms;
}

}  // namespace

int IlpModel::CountVariables(std::string_view prefix) const {
  const std::string p = std::string(prefix) + "_";
  return static_cast<int>(
      std::count_if(variables.begin(), variables.end(),
                    [&](const Variable& v) { return v.name.starts_with(p); }));
}

IlpModel BuildPrecutModel(const PreCutSubgraph& sub, int h) {
  const NetworkGraph& g = sub.graph;
  const int n = g.num_nodes();
  const int m = g.num_edges();
  const NodeId s = g.source();
  const NodeId t = g.sink();
  const std::vector<int> d = Depths(g);
  const std::int64_t w = LexicographicWeight(sub, h);

  IlpModel model;
  auto binary = [&](std::string name) {
    model.variables.push_back({std::move(name), VarType::kBinary, 0, 1});
  };
  for (int i = 0; i < h; ++i) {
    for (EdgeId e = 0; e < m; ++e) binary(Var("f", i, e));
  }
  for (int i = 0; i < h; ++i) {
    for (NodeId j = 0; j < n; ++j) binary(Var("u", i, j));
  }
  for (NodeId j = 0; j < n; ++j) {
    for (EdgeId e = 0; e < m; ++e) binary(Var("g", j, e));
  }
  for (NodeId j = 0; j < n; ++j) binary(Var("x", j));
  for (int i = 0; i < h; ++i) {
    for (NodeId j = 0; j < n; ++j) binary(Var("z", i, j));
  }
  for (int i = 0; i < h; ++i) binary(Var("s", i));
  for (int i = 0; i < h; ++i) {
    for (NodeId j = 0; j < n; ++j) {
      model.variables.push_back({Var("dl", i, j), VarType::kInteger, 0, d[j]});
    }
  }

  for (int i = 0; i < h; ++i) model.objective.push_back({w, Var("s", i)});
  for (int i = 0; i < h; ++i) {
    for (NodeId j = 0; j < n; ++j) {
      if (d[j] > 0) model.objective.push_back({1, Var("dl", i, j)});
    }
  }

  auto& c = model.constraints;
  auto inflow = [&](std::string_view p, int a, NodeId v, std::int64_t sign) {
    std::vector<LinearTerm> terms;
    for (EdgeId e : g.in_edges(v)) terms.push_back({sign, Var(p, a, e)});
    return terms;
  };
  auto outflow = [&](std::string_view p, int a, NodeId v, std::int64_t sign) {
    std::vector<LinearTerm> terms;
    for (EdgeId e : g.out_edges(v)) terms.push_back({sign, Var(p, a, e)});
    return terms;
  };
  auto concat = [](std::vector<LinearTerm> a, std::vector<LinearTerm> b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };

  for (int i = 0; i < h; ++i) {
    Add(c, Var("route", i), outflow("f", i, s, 1), Sense::kEqual, 1);
  }
  for (int i = 0; i < h; ++i) {
    for (NodeId v = 0; v < n; ++v) {
      if (v == s || v == t) continue;
      Add(c, Var("conserve", i, v),
          concat(inflow("f", i, v, 1), outflow("f", i, v, -1)), Sense::kEqual,
          0);
    }
  }
  for (int i = 0; i < h; ++i) {
    for (NodeId j = 0; j < n; ++j) {
      Add(c, Var("enter", i, j),
          concat({{1, Var("u", i, j)}}, inflow("f", i, j, -1)), Sense::kEqual,
          0);
    }
  }
  for (NodeId j = 0; j < n; ++j) {
    Add(c, Var("extra", j), outflow("g", j, s, 1), Sense::kLessEqual, 1);
  }
  for (NodeId j = 0; j < n; ++j) {
    Add(c, Var("arrive", j), concat({{1, Var("x", j)}}, inflow("g", j, j, -1)),
        Sense::kEqual, 0);
  }
  for (NodeId j = 0; j < n; ++j) {
    for (NodeId v = 0; v < n; ++v) {
      if (v == s || v == j) continue;
      Add(c, Var("pass", j, v),
          concat(inflow("g", j, v, 1), outflow("g", j, v, -1)), Sense::kEqual,
          0);
    }
  }
  for (EdgeId e = 0; e < m; ++e) {
    std::vector<LinearTerm> terms;
    for (int i = 0; i < h; ++i) terms.push_back({1, Var("f", i, e)});
    for (NodeId j = 0; j < n; ++j) terms.push_back({1, Var("g", j, e)});
    Add(c, Var("share", e), std::move(terms), Sense::kLessEqual, 1);
  }
  for (int i = 0; i < h; ++i) {
    for (NodeId j = 0; j < n; ++j) {
      Add(c, Var("link", i, j),
          {{2, Var("z", i, j)}, {-1, Var("u", i, j)}, {-1, Var("x", j)}},
          Sense::kLessEqual, 0);
    }
  }
  for (int i = 0; i < h; ++i) {
    std::vector<LinearTerm> terms = {{1, Var("s", i)}};
    for (NodeId j = 0; j < n; ++j) terms.push_back({-1, Var("z", i, j)});
    Add(c, Var("protect", i), std::move(terms), Sense::kLessEqual, 0);
  }
  for (int i = 0; i < h; ++i) {
    for (NodeId j = 0; j < n; ++j) {
      Add(c, Var("depth", i, j), {{1, Var("dl", i, j)}, {-d[j], Var("z", i, j)}},
          Sense::kEqual, 0);
    }
  }
  return model;
}

std::string WriteLp(const IlpModel& model) {
  std::ostringstream out;
  out << "\\ pre-cut protection model\n";
  out << "Maximize\n obj: " << FormatTerms(model.objective) << "\n";
  out << "Subject To\n";
  for (const LinearConstraint& c : model.constraints) {
    out << " " << c.name << ": " << FormatTerms(c.terms) << " "
        << SenseText(c.sense) << " " << c.rhs << "\n";
  }
  out << "Bounds\n";
  for (const Variable& v : model.variables) {
    out << " " << v.lower << " <= " << v.name << " <= " << v.upper << "\n";
  }
  for (VarType type : {VarType::kInteger, VarType::kBinary}) {
    out << (type == VarType::kInteger ? "General\n" : "Binary\n");
    int on_line = 0;
    for (const Variable& v : model.variables) {
      if (v.type != type) continue;
      out << " " << v.name;
      if (++on_line == 10) {
        out << "\n";
        on_line = 0;
      }
    }
    if (on_line > 0) out << "\n";
  }
  out << "End\n";
  return out.str();
}

IlpModel ParseLp(std::string_view text) {
  enum class Section { kNone, kObjective, kConstraints, kBounds, kGeneral,
                       kBinary, kEnd };
  IlpModel model;
  Section section = Section::kNone;
  std::set<std::string> typed;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::vector<std::string> tokens = Tokens(raw);
    if (tokens.empty() || tokens[0].starts_with("\\")) continue;
    const std::string head = Lower(tokens[0]);
    if (tokens.size() == 1 && head == "maximize") {
      section = Section::kObjective;
      continue;
    }
    if (tokens.size() == 2 && head == "subject" && Lower(tokens[1]) == "to") {
      section = Section::kConstraints;
      continue;
    }
    if (tokens.size() == 1 && head == "bounds") {
      section = Section::kBounds;
      continue;
    }
    if (tokens.size() == 1 && head == "general") {
      section = Section::kGeneral;
      continue;
    }
    if (tokens.size() == 1 && head == "binary") {
      section = Section::kBinary;
      continue;
    }
    if (tokens.size() == 1 && head == "end") {
      section = Section::kEnd;
      continue;
    }
    switch (section) {
      case Section::kObjective:
      case Section::kConstraints: {
        if (!tokens[0].ends_with(":") || tokens[0].size() < 2) {
          Fail(line, "expected 'name:'");
        }
        const std::string name = tokens[0].substr(0, tokens[0].size() - 1);
        std::size_t pos = 1;
        std::vector<LinearTerm> terms = ParseTerms(tokens, pos, line);
        if (section == Section::kObjective) {
          if (pos != tokens.size()) Fail(line, "unexpected tokens");
          model.objective = std::move(terms);
          break;
        }
        if (pos + 2 != tokens.size()) Fail(line, "expected '<sense> <rhs>'");
        const std::string& sense = tokens[pos];
        LinearConstraint c{name, std::move(terms), Sense::kEqual,
                           ParseInt(tokens[pos + 1], line)};
        c.sense = sense == "<=" ? Sense::kLessEqual
                  : sense == ">=" ? Sense::kGreaterEqual
                                  : Sense::kEqual;
        model.constraints.push_back(std::move(c));
        break;
      }
      case Section::kBounds: {
        if (tokens.size() != 5 || tokens[1] != "<=" || tokens[3] != "<=") {
          Fail(line, "expected 'lo <= var <= hi'");
        }
        model.variables.push_back({tokens[2], VarType::kInteger,
                                   ParseInt(tokens[0], line),
                                   ParseInt(tokens[4], line)});
        break;
      }
      case Section::kGeneral:
      case Section::kBinary: {
        for (const std::string& name : tokens) {
          auto it = std::find_if(
              model.variables.begin(), model.variables.end(),
              [&](const Variable& v) { return v.name == name; });
          if (it == model.variables.end()) {
            Fail(line, "variable '" + name + "' has no bounds");
          }
          it->type = section == Section::kBinary ? VarType::kBinary
                                                 : VarType::kInteger;
          typed.insert(name);
        }
        break;
      }
      case Section::kNone:
        Fail(line, "content before 'Maximize'");
      case Section::kEnd:
        Fail(line, "content after 'End'");
    }
  }
  if (section != Section::kEnd) Fail(line, "missing 'End'");
  for (const Variable& v : model.variables) {
    if (!typed.contains(v.name)) {
      throw std::invalid_argument("variable '" + v.name + "' has no type");
    }
  }
  return model;
}

std::int64_t EvaluateObjective(const IlpModel& model, const Assignment& a) {
  std::int64_t total = 0;
  for (const LinearTerm& t : model.objective) {
    const auto it = a.find(t.var);
    if (it != a.end()) total += t.coef * it->second;
  }
  return total;
}

std::vector<std::string> CheckAssignment(const IlpModel& model,
                                         const Assignment& a) {
  std::vector<std::string> violations;
  std::set<std::string> known;
  for (const Variable& v : model.variables) {
    known.insert(v.name);
    const auto it = a.find(v.name);
    const std::int64_t value = it == a.end() ? 0 : it->second;
    if (value < v.lower || value > v.upper) {
      violations.push_back("bound " + v.name);
    }
  }
  for (const auto& [name, value] : a) {
    if (!known.contains(name)) violations.push_back("unknown " + name);
  }
  for (const LinearConstraint& c : model.constraints) {
    std::int64_t lhs = 0;
    for (const LinearTerm& t : c.terms) {
      const auto it = a.find(t.var);
      if (it != a.end()) lhs += t.coef * it->second;
    }
    const bool ok = c.sense == Sense::kLessEqual  ? lhs <= c.rhs
                    : c.sense == Sense::kEqual    ? lhs == c.rhs
                                                  : lhs >= c.rhs;
    if (!ok) violations.push_back(c.name);
  }
  return violations;
}

Assignment AssignmentFromPlan(
    const PreCutSubgraph& sub, int h,
    const std::vector<std::vector<EdgeId>>& routed_paths,
    const std::vector<NodeId>& decoding_nodes,
    const std::vector<std::vector<EdgeId>>& extra_paths) {
  const NetworkGraph& g = sub.graph;
  if (static_cast<int>(routed_paths.size()) != h ||
      extra_paths.size() != decoding_nodes.size()) {
    throw std::invalid_argument("plan does not match h or its node set");
  }
  const std::vector<int> d = Depths(g);
  Assignment a;
  std::vector<bool> in_x(g.num_nodes(), false);
  for (std::size_t k = 0; k < decoding_nodes.size(); ++k) {
    const NodeId j = decoding_nodes[k];
    in_x[j] = true;
    a[Var("x", j)] = 1;
    for (EdgeId e : extra_paths[k]) a[Var("g", j, e)] = 1;
  }
  for (int i = 0; i < h; ++i) {
    bool any = false;
    for (EdgeId e : routed_paths[i]) {
      const NodeId j = g.edge(e).head;
      a[Var("f", i, e)] = 1;
      a[Var("u", i, j)] = 1;
      if (in_x[j]) {
        any = true;
        a[Var("z", i, j)] = 1;
        if (d[j] > 0) a[Var("dl", i, j)] = d[j];
      }
    }
    if (any) a[Var("s", i)] = 1;
  }
  return a;
}

Assignment AssignmentFromSolution(const ExactSolution& sol) {
  return AssignmentFromPlan(sol.sub, sol.h, sol.routed_paths,
                            sol.decoding_nodes, sol.extra_paths);
}

Assignment AssignmentFromPlan(const PreCutPlan& plan) {
  std::vector<std::vector<EdgeId>> extras;
  for (NodeId x : plan.decoding_nodes) {
    for (std::size_t k = 0; k < plan.extra_paths.size(); ++k) {
      if (plan.extra_path_target[k] == x) {
        extras.push_back(plan.extra_paths[k]);
        break;
      }
    }
  }
  return AssignmentFromPlan(plan.sub, plan.h, plan.routed_paths,
                            plan.decoding_nodes, extras);
}

}  // namespace mfp
