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
#include <stdexcept>

#include "doctest.h"
#include "mfp/graph.h"
#include "mfp/harness.h"
#include "oracles.h"
#include "test_util.h"

namespace mfp {
namespace {

using testing::EdgeNames;
using testing::Fixture;

TEST_CASE("text format round-trips") {
  const NetworkGraph g = Fixture("four_paths");
  const std::string text = SerializeGraph(g);
  const NetworkGraph again = ParseGraph(text);
  CHECK(SerializeGraph(again) == text);
  CHECK(again.num_nodes() == g.num_nodes());
  CHECK(again.num_edges() == g.num_edges());
}

TEST_CASE("parser keeps parallel edges and ignores comments") {
  const NetworkGraph g = ParseGraph(
      "# comment\nsource S\nsink T\nedge S T\nedge S T  # twice\n");
  CHECK(g.num_edges() == 2);
  CHECK(MaxFlow(g).value == 2);
}

TEST_CASE("builder rejects malformed graphs") {
  CHECK_THROWS_AS(ParseGraph("source S\nsink T\nedge S A\nedge A S\nedge A T\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(ParseGraph("source S\nsink T\nedge S S\nedge S T\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(ParseGraph("sink T\nedge S T\n"), std::invalid_argument);
  CHECK_THROWS_AS(ParseGraph("source S\nsink T\nedge S\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(ParseGraph("source S\nsink T\nbogus S T\n"),
                  std::invalid_argument);
}

TEST_CASE("max flow and cut of the four-unit example") {
  const NetworkGraph g = Fixture("four_paths");
  const FlowAssignment flow = MaxFlow(g);
  CHECK(flow.value == 4);
  CHECK(CheckFlow(g, flow).empty());
  const CutSet cut = MinCut(g, flow);
  std::vector<std::string> names = EdgeNames(g, cut.edges);
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::string>{"F->H", "G->T", "I->T", "J->T"});
  CHECK(HasUniqueMinCut(g));
}

TEST_CASE("chain has its first edge as source-side cut") {
  const NetworkGraph g = ParseGraph("source S\nsink T\nedge S u\nedge u T\n");
  CHECK(MaxFlow(g).value == 1);
  CHECK(EdgeNames(g, MinCut(g).edges) == std::vector<std::string>{"S->u"});
  CHECK_FALSE(HasUniqueMinCut(g));
}

TEST_CASE("decomposition yields one cutting edge per path") {
  const NetworkGraph g = Fixture("four_paths");
  const FlowAssignment flow = MaxFlow(g);
  const CutSet cut = MinCut(g, flow);
  const CommodityRouting routing = DecomposeIntoPaths(g, flow, cut);
  REQUIRE(routing.paths.size() == 4);
  std::vector<int> used(g.num_edges(), 0);
  for (std::size_t i = 0; i < routing.paths.size(); ++i) {
    const auto& path = routing.paths[i];
    CHECK(g.edge(path.front()).tail == g.source());
    CHECK(g.edge(path.back()).head == g.sink());
    CHECK(std::count(path.begin(), path.end(), routing.cutting_edge[i]) == 1);
    for (const EdgeId e : path) ++used[e];
  }
  CHECK(*std::max_element(used.begin(), used.end()) == 1);
}

TEST_CASE("max flow equals brute-force min cut on random graphs") {
  for (int i = 0; i < 200; ++i) {
    const NetworkGraph g = GenerateInstance(
        {.nodes = 4 + i % 8, .seed = DeriveSeed(11, i),
         .require_single_cut = false});
    int value = 0;
    const auto cuts = oracle::MinCutEdgeSets(g, &value);
    CHECK(MaxFlow(g).value == value);
    CHECK(HasUniqueMinCut(g) == (cuts.size() == 1));
  }
}

TEST_CASE("group flow counts a node with spare source paths") {
  const NetworkGraph g = ParseGraph(
      "source S\nsink T\nedge S a\nedge S b\nedge a c\nedge b c\nedge c T\n");
  const std::vector<NodeId> s = {g.source()};
  const std::vector<NodeId> targets = {g.node("a"), g.node("b"), g.node("c"),
                                       g.sink()};
  CHECK(GroupFlow(g, s, targets) == 2);
}

TEST_CASE("hop distances follow shortest paths from the source") {
  const NetworkGraph g = Fixture("phase_two");
  const std::vector<int> d = HopDistances(g, g.source());
  CHECK(d[g.node("C")] == 1);
  CHECK(d[g.node("F")] == 2);
  CHECK(d[g.node("D")] == 2);
}

}  // namespace
}  // namespace mfp
