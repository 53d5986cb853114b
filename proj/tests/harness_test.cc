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
#include <vector>

#include "doctest.h"
#include "mfp/graph.h"
#include "mfp/harness.h"
#include "mfp/precut_coding.h"
#include "mfp/precut_heuristic.h"
#include "test_util.h"

namespace mfp {
namespace {

using gf256::Symbol;
using testing::Fixture;

TEST_CASE("generator is deterministic and meets its contract") {
  for (int i = 0; i < 40; ++i) {
    const GeneratorConfig config{.nodes = 5 + i % 20,
                                 .seed = DeriveSeed(41, i)};
    const NetworkGraph g = GenerateInstance(config);
    CHECK(SerializeGraph(g) == SerializeGraph(GenerateInstance(config)));
    CHECK(g.num_nodes() == config.nodes);
    CHECK(MaxFlow(g).value >= 1);
    CHECK(HasUniqueMinCut(g));
  }
  CHECK_THROWS_AS(GenerateInstance({.nodes = 2}), std::invalid_argument);
  CHECK_THROWS_AS(GenerateInstance({.nodes = 5, .edge_probability = 1.5}),
                  std::invalid_argument);
}

TEST_CASE("seed derivation separates streams") {
  CHECK(DeriveSeed(1, 2) == DeriveSeed(1, 2));
  CHECK(DeriveSeed(1, 2) != DeriveSeed(1, 3));
  CHECK(DeriveSeed(1, 2, 0) != DeriveSeed(1, 2, 1));
  CHECK(DeriveSeed(1, 2) != DeriveSeed(2, 2));
}

TEST_CASE("default edge probability stays in range") {
  for (int v = 3; v <= 60; ++v) {
    const double p = DefaultEdgeProbability(v);
    CHECK(p > 0);
    CHECK(p < 1);
  }
}

TEST_CASE("comparison output does not depend on the thread count") {
  BenchConfig config{.nodes = {5, 8}, .instances = 6, .seed = 3,
                     .threads = 1, .zero_timings = true};
  const BenchResult one = RunComparison(config);
  config.threads = 2;
  const BenchResult two = RunComparison(config);
  const std::string csv = RecordsCsv(one.records);
  CHECK(csv == RecordsCsv(two.records));
  CHECK(csv.rfind("instance,V,h,heuristic_protected,exact_protected,"
                  "heuristic_ms,exact_ms\n",
                  0) == 0);
  CHECK(one.records.size() + one.exhausted.size() == 12);
  CHECK(one.dominance_violations == 0);
  CHECK(one.per_nodes.size() == 2);
  CHECK(HistogramCsv(one).rfind("V,h,heuristic_protected,exact_protected,"
                                "count\n",
                                0) == 0);
  CHECK_FALSE(SummaryText(one).empty());
}

TEST_CASE("a round without failures delivers every unit") {
  const ProtectionSetup setup = BuildProtection(Fixture("four_paths"));
  const RoundOutcome out = DeliverRound(setup, {}, 7);
  CHECK(std::all_of(out.delivered.begin(), out.delivered.end(),
                    [](bool b) { return b; }));
  CHECK(std::all_of(out.baseline.begin(), out.baseline.end(),
                    [](bool b) { return b; }));
  const std::vector<EdgeId> cut_edge = {setup.cut.edges.front()};
  CHECK_THROWS_AS(DeliverRound(setup, cut_edge, 7), std::invalid_argument);
}

TEST_CASE("end-to-end simulation without failures is lossless") {
  const NetworkGraph g = Fixture("four_paths");
  const DeliveryStats stats = SimulateEndToEnd(g, 0, 0, 5, 1);
  CHECK(stats.rounds == 5);
  CHECK(stats.h == 4);
  CHECK(stats.delivery_rate == 1.0);
  CHECK(stats.baseline_rate == 1.0);
}

TEST_CASE("protection never delivers less than plain routing on average") {
  const NetworkGraph g =
      GenerateInstance({.nodes = 14, .seed = DeriveSeed(42, 0)});
  const DeliveryStats stats = SimulateEndToEnd(g, 1, 0, 200, 9);
  CHECK(stats.delivery_rate >= 0);
  CHECK(stats.delivery_rate <= 1);
  CHECK(static_cast<int>(stats.delivered.size()) == stats.h);
}

TEST_CASE("pre-cut decoding nodes recover from one lost path") {
  const PreCutPlan plan = RunHeuristic(Fixture("two_routings"));
  const CodeAssignment codes = AssignPrecutVectors(plan);
  REQUIRE(codes.nodes.size() == 2);
  for (const NodeCode& code : codes.nodes) {
    CHECK(code.k >= 1);
    CHECK(code.e >= 1);
    CHECK(static_cast<int>(code.neighbors.size()) == code.k + code.e);
    std::vector<Payload> data;
    for (int u = 0; u < code.k; ++u) {
      data.push_back(Payload{static_cast<Symbol>(u + 1),
                             static_cast<Symbol>(40 + u)});
    }
    for (int lost = 0; lost < code.k + code.e; ++lost) {
      std::vector<bool> intact(code.k + code.e, true);
      intact[lost] = false;
      CHECK(DecodeAtNode(code, data, intact) == data);
    }
    const std::vector<bool> none(code.k + code.e, false);
    CHECK(DecodeAtNode(code, data, none).empty());
  }
}

}  // namespace
}  // namespace mfp
