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

// Random single-cut instances, the heuristic-versus-exact comparison, and an
// end-to-end failure-injection simulation.

#ifndef MFP_HARNESS_H_
#define MFP_HARNESS_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "mfp/graph.h"
#include "mfp/postcut.h"
#include "mfp/precut_coding.h"
#include "mfp/precut_exact.h"
#include "mfp/precut_heuristic.h"

namespace mfp {

// Random DAG over a random topological order: S first, T last, every
// forward pair joined independently with probability p. Nodes without a
// predecessor (successor) get one edge from (to) a uniformly chosen earlier
// (later) node, so every node lies on an S-T path. Attempts are repeated
// until h >= 1 and, if required, the min cut is unique.
struct GeneratorConfig {
  int nodes = 10;                 // V >= 3
  double edge_probability = 0;    // 0 < p < 1; <= 0 picks the default for V
  std::uint64_t seed = 1;
  int max_attempts = 100000;
  bool require_single_cut = true;
};

// Edge probability calibrated so that the mean max-flow of accepted
// instances lies in [2, 5].
double DefaultEdgeProbability(int nodes);

// Deterministic per config. Throws std::runtime_error when attempts run out
// and std::invalid_argument on a bad config.
NetworkGraph GenerateInstance(const GeneratorConfig& config);

// Mixes a base seed with stream indices (splitmix64).
std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t a,
                         std::uint64_t b = 0);

struct ExperimentRecord {
  int instance = 0;
  int nodes = 0;
  int h = 0;
  int heuristic_protected = 0;
  int exact_protected = 0;
  double heuristic_ms = 0;
  double exact_ms = 0;
  bool exact_optimal = true;
};

struct BenchConfig {
  std::vector<int> nodes = {5, 10, 15, 20, 25};
  int instances = 80;
  std::uint64_t seed = 1;
  int threads = 0;            // 0: hardware concurrency
  bool zero_timings = false;  // byte-stable CSV output
  ExactOptions exact{.depth_tiebreak = false,
                     .node_limit = 0,
                     .time_limit_seconds = 60};
  double edge_probability = 0;  // <= 0: DefaultEdgeProbability(V)
};

struct NodeSummary {
  int nodes = 0;
  int instances = 0;  // completed (exact solver optimal)
  int exhausted = 0;  // budget ran out, excluded from the means
  double mean_h = 0;
  double mean_heuristic = 0;
  double mean_exact = 0;
  double ratio = 0;  // mean_heuristic / mean_exact (1 when both are 0)
  // (h, heuristic, exact) -> instance count.
  std::map<std::tuple<int, int, int>, int> histogram;
};

struct BenchResult {
  std::vector<ExperimentRecord> records;    // sorted by instance id
  std::vector<ExperimentRecord> exhausted;  // exact budget ran out
  std::vector<NodeSummary> per_nodes;
  double average_ratio = 0;  // mean of the per-V ratios
  int dominance_violations = 0;  // heuristic > exact or exact > h
};

// Instances run concurrently; results do not depend on the thread count.
BenchResult RunComparison(const BenchConfig& config);

std::string RecordsCsv(std::span<const ExperimentRecord> records);
// "V,h,heuristic_protected,exact_protected,count"
std::string HistogramCsv(const BenchResult& result);
std::string SummaryText(const BenchResult& result);

// Plans and routing used by the simulation.
struct ProtectionSetup {
  NetworkGraph g;
  CutSet cut;
  PreCutPlan pre;
  CodeAssignment codes;
  PostCutPlan post;
  // Unprotected reference: h edge-disjoint S-T paths of g.
  CommodityRouting baseline;
  // For routed path i of the pre-cut plan: its cut edge in g.
  std::vector<EdgeId> unit_cut_edge;
};

ProtectionSetup BuildProtection(const NetworkGraph& g,
                                const HeuristicOptions& options = {});

struct RoundOutcome {
  std::vector<bool> delivered;  // per routed path of the pre-cut plan
  std::vector<bool> baseline;   // per baseline path
};

// One transmission round with the given failed edges of g. Throws
// std::invalid_argument if a min-cut edge is among them.
RoundOutcome DeliverRound(const ProtectionSetup& setup,
                          std::span<const EdgeId> failed,
                          std::uint64_t payload_seed);

struct DeliveryStats {
  int rounds = 0;
  int h = 0;
  std::vector<int> delivered;  // per unit, protected scheme
  std::vector<int> baseline;   // per unit, plain routing
  double delivery_rate = 0;
  double baseline_rate = 0;
};

// Each round fails up to q_pre random edges inside A and up to q_post inside
// A' (never cut edges).
DeliveryStats SimulateEndToEnd(const NetworkGraph& g, int q_pre, int q_post,
                               int rounds, std::uint64_t seed);

}  // namespace mfp

#endif  // MFP_HARNESS_H_
