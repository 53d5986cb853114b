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

// Exact pre-cut protection by branch and bound.
//
// A solution routes h edge-disjoint S->T' paths in the pre-cut subgraph H
// and sends at most one surplus unit from S to each node of a set X, all on
// disjoint edges. A routed path is protected when it visits a node of X.
// Solutions are ranked by protected paths first, then by the sum of
// d(j) * (routed paths through j) over j in X, where d is the hop distance
// from S in H.

#ifndef MFP_PRECUT_EXACT_H_
#define MFP_PRECUT_EXACT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "mfp/connectivity.h"
#include "mfp/graph.h"

namespace mfp {

struct ExactOptions {
  // Rank equal protected counts by the depth sum. Off: stop as soon as the
  // protected count is provably maximal.
  bool depth_tiebreak = true;
  std::int64_t node_limit = 50'000'000;  // search nodes, 0 = unlimited
  double time_limit_seconds = 0;          // 0 = unlimited
};

struct ExactSolution {
  PreCutSubgraph sub;
  int h = 0;
  std::vector<std::vector<EdgeId>> routed_paths;  // edge ids of H
  std::vector<NodeId> decoding_nodes;             // X, ids of H, ascending
  std::vector<std::vector<EdgeId>> extra_paths;   // one per node of X
  std::vector<bool> path_protected;
  int protected_count = 0;
  std::int64_t depth_sum = 0;
  std::int64_t weight = 0;     // weight on the protected count
  std::int64_t objective = 0;  // weight * protected_count + depth_sum
  bool optimal = true;         // false when the budget ran out
  int upper_bound = 0;         // proven bound on protected_count
  std::int64_t nodes_explored = 0;
};

// Throws std::invalid_argument if g's min cut is not unique.
ExactSolution SolveExact(const NetworkGraph& g, const ExactOptions& options = {});
ExactSolution SolveExact(const PreCutSubgraph& sub, int h,
                         const ExactOptions& options = {});

// Weight making the linear objective lexicographic: exceeds both |E_H| and
// the largest attainable depth sum.
std::int64_t LexicographicWeight(const PreCutSubgraph& sub, int h);

// Stable-key JSON report in the layout of PlanToJson, plus the objective
// terms and the optimality flag.
std::string SolutionToJson(const ExactSolution& sol);

}  // namespace mfp

#endif  // MFP_PRECUT_EXACT_H_
