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
#include <optional>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "mfp/graph.h"
#include "mfp/harness.h"
#include "mfp/postcut.h"
#include "test_util.h"

namespace mfp {
namespace {

using gf256::Symbol;
using testing::Fixture;
using testing::NodeNames;

TEST_CASE("four-unit post-cut example") {
  const NetworkGraph g = Fixture("postcut_four_units");
  const PostCutPlan plan = PlanPostcut(g);
  CHECK(plan.h == 4);
  CHECK(plan.m == 4);
  CHECK(plan.n == 6);
  CHECK(plan.e == 2);
  CHECK(plan.r == 2);
  CHECK(plan.sufficiency.holds);
  CHECK(plan.sufficiency.witness.empty());
  std::vector<std::string> z = NodeNames(g, plan.coding_nodes);
  std::sort(z.begin(), z.end());
  CHECK(z == std::vector<std::string>{"A", "B", "C", "M", "N", "P"});
  CHECK(plan.matrix.rows == 4);
  CHECK(plan.matrix.cols == 6);
  for (int i = 0; i < plan.n; ++i) {
    const Edge& c = g.edge(plan.closest_edge(i));
    CHECK(g.edge(plan.paths[i].back()).head == g.sink());
    for (int j = 0; j < plan.m; ++j) {
      if (!plan.reach[i][j]) CHECK(plan.vectors[i][j] == 0);
    }
    CHECK(std::find(plan.coding_nodes.begin(), plan.coding_nodes.end(),
                    c.tail) != plan.coding_nodes.end());
  }
}

TEST_CASE("no single post-cut failure loses a unit on the example") {
  const NetworkGraph g = Fixture("postcut_four_units");
  const PostCutPlan plan = PlanPostcut(g);
  for (const EdgeId e : PostCutEdges(g, plan.cut)) {
    const std::vector<EdgeId> failed = {e};
    const std::vector<bool> ok = RecoveredUnits(g, plan, failed);
    CHECK(std::all_of(ok.begin(), ok.end(), [](bool b) { return b; }));
  }
}

TEST_CASE("payloads survive a post-cut failure") {
  const NetworkGraph g = Fixture("postcut_four_units");
  const PostCutPlan plan = PlanPostcut(g);
  std::vector<std::optional<Payload>> arriving;
  for (int j = 0; j < plan.m; ++j) {
    arriving.push_back(Payload{static_cast<Symbol>(10 + j),
                               static_cast<Symbol>(3 * j)});
  }
  const std::vector<EdgeId> failed = {PostCutEdges(g, plan.cut).front()};
  const auto out = SimulatePostcutFailures(g, plan, failed, arriving);
  REQUIRE(static_cast<int>(out.size()) == plan.m);
  for (int j = 0; j < plan.m; ++j) {
    REQUIRE(out[j].has_value());
    CHECK(*out[j] == *arriving[j]);
  }
}

TEST_CASE("failure of a non post-cut edge is rejected") {
  const NetworkGraph g = Fixture("postcut_four_units");
  const PostCutPlan plan = PlanPostcut(g);
  const std::vector<EdgeId> failed = {plan.cut.edges.front()};
  CHECK_THROWS_AS(RecoveredUnits(g, plan, failed), std::invalid_argument);
}

TEST_CASE("non-unique cut is rejected") {
  const NetworkGraph g = ParseGraph("source S\nsink T\nedge S u\nedge u T\n");
  CHECK_THROWS_AS(PlanPostcut(g), std::invalid_argument);
}

TEST_CASE("recoverable unit count of small vector sets") {
  const std::vector<std::vector<Symbol>> identity = {{1, 0}, {0, 1}};
  CHECK(ComputeR(identity, 2) == 2);
  const std::vector<std::vector<Symbol>> mixed = {{1, 0}, {1, 1}, {0, 1}};
  CHECK(ComputeR(mixed, 2) == 2);
  const std::vector<std::vector<Symbol>> same = {{1, 1}, {1, 1}, {1, 0}};
  CHECK(ComputeR(same, 2) == 0);
  CHECK(ComputeR(std::vector<std::vector<Symbol>>{}, 0) == 0);
}

TEST_CASE("reachability CSV has one row per path") {
  const NetworkGraph g = Fixture("postcut_four_units");
  const PostCutPlan plan = PlanPostcut(g);
  const std::string csv = PostcutReachabilityCsv(g, plan);
  CHECK(csv.rfind("path,closest_edge,coding_node", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == plan.n + 1);
  CHECK_FALSE(PostcutReport(g, plan).empty());
}

TEST_CASE("random instances keep sufficiency and single-failure guarantees") {
  for (int i = 0; i < 80; ++i) {
    const NetworkGraph g =
        GenerateInstance({.nodes = 6 + i % 12, .seed = DeriveSeed(31, i)});
    const PostCutPlan plan = PlanPostcut(g);
    CHECK(plan.e == plan.n - plan.m);
    CHECK(plan.r <= plan.m);
    CHECK(static_cast<int>(plan.paths.size()) == plan.n);
    if (plan.m == 0 || !plan.sufficiency.holds) continue;
    CHECK(plan.e >= 1);
  }
}

}  // namespace
}  // namespace mfp
