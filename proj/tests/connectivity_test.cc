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
#include "mfp/connectivity.h"
#include "mfp/graph.h"
#include "mfp/harness.h"
#include "test_util.h"

namespace mfp {
namespace {

using testing::Fixture;
using testing::NodeNames;

bool Contains(const std::vector<std::string>& names, const std::string& n) {
  return std::find(names.begin(), names.end(), n) != names.end();
}

TEST_CASE("classification on the four-unit example") {
  const NetworkGraph g = Fixture("four_paths");
  for (const char* n : {"E", "F", "I", "J"}) {
    CHECK(ClassifyNode(g, g.node(n)) == NodeClass::kEsc);
  }
  CHECK(ClassifyNode(g, g.node("H")) == NodeClass::kEdc);
  CHECK_THROWS_AS(ClassifyNode(g, g.source()), std::invalid_argument);
}

TEST_CASE("partition of the four-unit example") {
  const NetworkGraph g = Fixture("four_paths");
  const Partition part = PartitionPrePost(g, MinCut(g));
  const auto pre = NodeNames(g, part.pre_cut);
  const auto post = NodeNames(g, part.post_cut);
  for (const char* n : {"S", "A", "B", "C", "D", "E", "F", "I", "J"}) {
    CHECK(Contains(pre, n));
  }
  for (const char* n : {"H", "K", "T"}) CHECK(Contains(post, n));
}

TEST_CASE("chain partition") {
  const NetworkGraph g = ParseGraph("source S\nsink T\nedge S u\nedge u T\n");
  const Partition part = PartitionPrePost(g, MinCut(g));
  CHECK(NodeNames(g, part.pre_cut) == std::vector<std::string>{"S"});
  CHECK(part.post_cut.size() == 2);
  CHECK(EscTotal(g, MinCut(g)) == 0);
}

TEST_CASE("extra source connectivity of the two-routing example") {
  const NetworkGraph g = Fixture("two_routings");
  const ConnectivityReport report = AnalyzeConnectivity(g);
  CHECK(report.h == 2);
  CHECK(report.esc == 2);
  CHECK(ExtraConnectivity(g, g.node("B")) >= 1);
  for (const char* n : {"A", "B", "C"}) {
    CHECK(report.node_class[g.node(n)] == NodeClass::kEsc);
  }
}

TEST_CASE("extra source connectivity of a diamond") {
  const NetworkGraph g = ParseGraph(
      "source S\nsink T\nedge S a\nedge S b\nedge a c\nedge b c\nedge c T\n");
  CHECK(EscTotal(g, MinCut(g)) == 1);
}

TEST_CASE("pre-cut subgraph redirects cut edges to the dummy sink") {
  const NetworkGraph g = Fixture("four_paths");
  const CutSet cut = MinCut(g);
  const PreCutSubgraph sub = BuildPreCutSubgraph(g, cut);
  const NetworkGraph& hg = sub.graph;
  CHECK(hg.name(hg.sink()) == "T'");
  CHECK(DummySinkName(g) == "T'");
  CHECK(static_cast<int>(hg.in_edges(hg.sink()).size()) == 4);
  std::vector<std::string> tails;
  for (const EdgeId e : hg.in_edges(hg.sink())) {
    tails.push_back(hg.name(hg.edge(e).tail));
  }
  std::sort(tails.begin(), tails.end());
  CHECK(tails == std::vector<std::string>{"F", "G", "I", "J"});
  for (EdgeId e = 0; e < hg.num_edges(); ++e) {
    const Edge& orig = g.edge(sub.edge_to_original[e]);
    CHECK(hg.name(hg.edge(e).tail) == g.name(orig.tail));
  }
}

TEST_CASE("connectivity CSV lists every node") {
  const NetworkGraph g = Fixture("two_routings");
  const std::string csv = ConnectivityCsv(g, AnalyzeConnectivity(g));
  CHECK(csv.rfind("node,class,ec\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == g.num_nodes() + 1);
}

TEST_CASE("extra source nodes sit on the source side") {
  for (int i = 0; i < 100; ++i) {
    const NetworkGraph g =
        GenerateInstance({.nodes = 5 + i % 10, .seed = DeriveSeed(12, i)});
    const ConnectivityReport report = AnalyzeConnectivity(g);
    for (const NodeId u : report.pre_cut) {
      CHECK(report.node_class[u] != NodeClass::kEdc);
    }
    for (const NodeId u : report.post_cut) {
      CHECK(report.node_class[u] != NodeClass::kEsc);
    }
    int ec_sum = 0;
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
      if (report.node_class[u] == NodeClass::kEsc) ec_sum += report.ec[u];
    }
    CHECK(ec_sum >= report.esc);
  }
}

}  // namespace
}  // namespace mfp
