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

// Greedy selection of pre-cut decoding nodes.
//
// Works on the pre-cut subgraph H (sink T'). A decoding node x receives more
// S->x paths than it forwards towards T'; the surplus carries redundant
// combinations so x can rebuild the data units on its S-T' paths after
// failures upstream of x. The selection runs in three phases:
//
//   1. Repeatedly pick the node that can forward the most flow to T' while
//      still able to receive one more unit from S, route f+1 units S->x on
//      a residual copy H^S and f units x->T' on a second copy H^T. Edges
//      used in one copy are removed (forward direction) from the other.
//   2. Merge both copies into H and augment S->T' until the flow equals h.
//   3. Hand any remaining S->u residual capacity to nodes on routed paths.

#ifndef MFP_PRECUT_HEURISTIC_H_
#define MFP_PRECUT_HEURISTIC_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mfp/connectivity.h"
#include "mfp/graph.h"
#include "mfp/residual_network.h"

namespace mfp {

struct HeuristicOptions {
  std::uint64_t seed = 0;  // random tie-break between equal candidates
  ResidualNetwork::Search search = ResidualNetwork::Search::kDfs;
};

// The two residual copies used by phase 1. Edge ids are those of H.
struct DualResidual {
  ResidualNetwork to_nodes;  // H^S: paths S -> x
  ResidualNetwork to_sink;   // H^T: paths x -> T'

  // No edge is usable forward in one copy while it carries flow (is
  // reversed) in the other.
  bool CouplingHolds() const;
};

struct PreCutPlan {
  PreCutSubgraph sub;  // H and its mapping back to G
  int h = 0;
  // Decoding nodes X (ids of H), ascending.
  std::vector<NodeId> decoding_nodes;
  // Per node of H: units received from S on disjoint paths (k + e) and
  // units forwarded to T' (k). Zero for nodes outside X.
  std::vector<int> flow_s;
  std::vector<int> flow_t;
  // h edge-disjoint S->T' paths in H (edge ids of H).
  std::vector<std::vector<EdgeId>> routed_paths;
  std::vector<bool> path_protected;
  // Redundant S->x paths: one entry per surplus unit, ending at
  // extra_path_target[i].
  std::vector<std::vector<EdgeId>> extra_paths;
  std::vector<NodeId> extra_path_target;
  int protected_count = 0;
  int st_flow = 0;

  // Snapshot at the end of phase 1.
  std::vector<NodeId> phase1_nodes;
  int phase1_st_flow = 0;
  // Phase-1 nodes whose surplus had to be withdrawn in phase 2 to restore h.
  int withdrawn = 0;
};

// Stepwise driver; RunHeuristic() composes all steps.
class PreCutHeuristic {
 public:
  PreCutHeuristic(PreCutSubgraph sub, int h, HeuristicOptions options = {});

  // Phase 1. Returns the selected nodes X' in selection order.
  const std::vector<NodeId>& SelectInitialNodes();
  // Merges H^S and H^T into H and augments S->T' until the flow is h.
  // Throws std::logic_error if h cannot be restored.
  void RestoreMaxFlow();
  // Phase 3 and final accounting.
  PreCutPlan UtilizeResidual();

  const DualResidual& dual() const { return dual_; }
  const std::vector<NodeId>& selected() const { return selected_; }
  int flow_s(NodeId u) const { return flow_s_[u]; }
  int flow_t(NodeId u) const { return flow_t_[u]; }
  int st_flow() const { return st_flow_; }
  // Current merged residual of H (valid after RestoreMaxFlow()).
  const ResidualNetwork& merged() const { return merged_; }

 private:
  PreCutPlan Finalize() const;
  NodeId source() const { return sub_.graph.source(); }
  NodeId sink() const { return sub_.graph.sink(); }

  PreCutSubgraph sub_;
  int h_;
  HeuristicOptions options_;
  std::mt19937_64 rng_;
  std::vector<int> depth_;  // hop distance from S in H
  DualResidual dual_;
  ResidualNetwork merged_;
  std::vector<NodeId> selected_;
  std::vector<int> flow_s_;
  std::vector<int> flow_t_;
  int st_flow_ = 0;
  int phase1_st_flow_ = 0;
  std::vector<NodeId> phase1_nodes_;
  int withdrawn_ = 0;
};

// Builds H from g's min cut and runs all three phases. Throws
// std::invalid_argument if g's min cut is not unique.
PreCutPlan RunHeuristic(const NetworkGraph& g, HeuristicOptions options = {});

// Stable-key JSON report: decoding nodes with their flows, paths (as node
// name sequences of G, T' last) and protection flags.
std::string PlanToJson(const PreCutPlan& plan);

// Number of routed paths in `plan` that visit a node of X with
// flow_s > flow_t, recounted from the paths.
int CountProtectedPaths(const PreCutPlan& plan);

}  // namespace mfp

#endif  // MFP_PRECUT_HEURISTIC_H_
