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

#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "mfp/graph.h"
#include "mfp/harness.h"
#include "mfp/ilp_model.h"
#include "mfp/mcg_reduction.h"
#include "mfp/precut_exact.h"
#include "mfp/precut_heuristic.h"
#include "oracles.h"
#include "test_util.h"

namespace mfp {
namespace {

using testing::Fixture;
using testing::NodeNames;

TEST_CASE("exact optimum of the worked examples") {
  const ExactSolution two = SolveExact(Fixture("two_routings"));
  CHECK(two.protected_count == 2);
  CHECK(two.optimal);
  CHECK(NodeNames(two.sub.graph, two.decoding_nodes) ==
        std::vector<std::string>{"A", "C"});
  const ExactSolution four = SolveExact(Fixture("four_paths"));
  CHECK(four.protected_count == 2);
  CHECK(NodeNames(four.sub.graph, four.decoding_nodes) ==
        std::vector<std::string>{"F"});
  CHECK(SolveExact(Fixture("phase_two")).protected_count == 1);
}

TEST_CASE("non-unique cut is rejected") {
  const NetworkGraph g = ParseGraph("source S\nsink T\nedge S u\nedge u T\n");
  CHECK_THROWS_AS(SolveExact(g), std::invalid_argument);
}

TEST_CASE("exact matches brute force on random instances") {
  for (int i = 0; i < 60; ++i) {
    const NetworkGraph g =
        GenerateInstance({.nodes = 5 + i % 4, .seed = DeriveSeed(21, i)});
    const int h = MaxFlow(g).value;
    const ExactSolution sol = SolveExact(g);
    CHECK(sol.optimal);
    CHECK(sol.upper_bound == sol.protected_count);
    CHECK(sol.protected_count ==
          oracle::BruteForceProtected(oracle::BruteForcePreCut(g), h));
    CHECK(RunHeuristic(g).protected_count <= sol.protected_count);
  }
}

TEST_CASE("depth tie-break does not change the protected count") {
  for (int i = 0; i < 40; ++i) {
    const NetworkGraph g =
        GenerateInstance({.nodes = 8 + i % 8, .seed = DeriveSeed(22, i)});
    const ExactSolution with = SolveExact(g);
    const ExactSolution without = SolveExact(g, {.depth_tiebreak = false});
    CHECK(with.protected_count == without.protected_count);
    CHECK(with.objective >= without.objective);
  }
}

TEST_CASE("budget exhaustion is reported") {
  const NetworkGraph g =
      GenerateInstance({.nodes = 25, .seed = DeriveSeed(23, 0)});
  const ExactSolution sol = SolveExact(g, {.node_limit = 1});
  CHECK(static_cast<int>(sol.routed_paths.size()) == sol.h);
  CHECK(sol.protected_count <= sol.upper_bound);
}

McgInstance RandomMcg(std::mt19937& rng, bool single_group_per_element) {
  McgInstance inst;
  inst.num_elements = 2 + rng() % 4;
  const int num_groups = 1 + rng() % 3;
  std::vector<int> element_group(inst.num_elements);
  for (int& grp : element_group) grp = rng() % num_groups;
  inst.groups.assign(num_groups, {});
  for (int j = 0; j < num_groups; ++j) {
    const int sets = 1 + rng() % 2;
    for (int s = 0; s < sets; ++s) {
      std::vector<int> members;
      for (int t = 0; t < inst.num_elements; ++t) {
        if (single_group_per_element && element_group[t] != j) continue;
        if (rng() % 2) members.push_back(t);
      }
      if (members.empty()) continue;
      inst.groups[j].push_back(static_cast<int>(inst.sets.size()));
      inst.sets.push_back(members);
    }
  }
  std::erase_if(inst.groups, [](const auto& grp) { return grp.empty(); });
  inst.budget = 1 + rng() % 3;
  return inst;
}

TEST_CASE("reduction matches the coverage optimum when groups do not mix") {
  std::mt19937 rng(24);
  int checked = 0;
  while (checked < 60) {
    const McgInstance inst = RandomMcg(rng, true);
    if (inst.sets.empty()) continue;
    const NetworkGraph g = ReduceMcg(inst);
    REQUIRE(HasUniqueMinCut(g));
    CHECK(SolveExact(g).protected_count == oracle::BruteForceMcg(inst));
    ++checked;
  }
}

TEST_CASE("reduction never falls below the coverage optimum") {
  std::mt19937 rng(25);
  int checked = 0;
  while (checked < 60) {
    const McgInstance inst = RandomMcg(rng, false);
    if (inst.sets.empty()) continue;
    CHECK(SolveExact(ReduceMcg(inst)).protected_count >=
          oracle::BruteForceMcg(inst));
    ++checked;
  }
}

TEST_CASE("reduction validates its input") {
  McgInstance bad{.num_elements = 2, .sets = {{0}, {1}}, .groups = {{0}},
                  .budget = 1};
  CHECK_THROWS_AS(ReduceMcg(bad), std::invalid_argument);
  bad.groups = {{0}, {1}};
  bad.sets = {{0}, {5}};
  CHECK_THROWS_AS(ReduceMcg(bad), std::invalid_argument);
  bad.sets = {{0}, {1}};
  bad.budget = 0;
  CHECK_THROWS_AS(ReduceMcg(bad), std::invalid_argument);
}

TEST_CASE("model text round-trips") {
  const ExactSolution sol = SolveExact(Fixture("two_routings"));
  const IlpModel model = BuildPrecutModel(sol.sub, sol.h);
  const std::string text = WriteLp(model);
  CHECK(ParseLp(text) == model);
  CHECK(WriteLp(ParseLp(text)) == text);
  CHECK(model.CountVariables("f") == sol.h * sol.sub.graph.num_edges());
  CHECK_THROWS_AS(ParseLp("Maximize\n obj: 3 x\nSubject To\n c: x <=\n"),
                  std::invalid_argument);
}

TEST_CASE("exact and heuristic solutions are feasible model points") {
  for (int i = 0; i < 30; ++i) {
    const NetworkGraph g =
        GenerateInstance({.nodes = 5 + i % 6, .seed = DeriveSeed(26, i)});
    const ExactSolution sol = SolveExact(g);
    const IlpModel model = BuildPrecutModel(sol.sub, sol.h);
    const Assignment exact = AssignmentFromSolution(sol);
    CHECK(CheckAssignment(model, exact).empty());
    CHECK(EvaluateObjective(model, exact) == sol.objective);
    CHECK(sol.weight == LexicographicWeight(sol.sub, sol.h));
    const PreCutPlan plan = RunHeuristic(g);
    const Assignment heuristic = AssignmentFromPlan(plan);
    CHECK(CheckAssignment(model, heuristic).empty());
    CHECK(EvaluateObjective(model, heuristic) <= sol.objective);
  }
}

TEST_CASE("infeasible assignments are reported") {
  const ExactSolution sol = SolveExact(Fixture("two_routings"));
  const IlpModel model = BuildPrecutModel(sol.sub, sol.h);
  Assignment a = AssignmentFromSolution(sol);
  a["s_0"] = 1;
  a["s_1"] = 1;
  for (auto& [name, value] : a) {
    if (name.rfind("z_", 0) == 0) value = 0;
  }
  CHECK_FALSE(CheckAssignment(model, a).empty());
  a["nonexistent"] = 1;
  const auto issues = CheckAssignment(model, a);
  CHECK(std::find(issues.begin(), issues.end(), "unknown nonexistent") !=
        issues.end());
}

}  // namespace
}  // namespace mfp
