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

// Maximum coverage with group budget constraints, expressed as a single-cut
// protection instance. Used to generate hard inputs for the exact solver.
//
// Wiring (names in parentheses):
//   S -> element t (E<t>)           one edge per covered element
//   E<t> -> set i (C<i>)            for every t in set i
//   C<i> -> D<t>                    two parallel edges for every t in set i
//   D<t> -> T                       the unique min cut, h = covered elements
//   S -> group j (G<j>) -> C<i>     for every i in group j
// When the budget k is below the number of groups, S feeds a hub (K) with
// k edges and the hub feeds every group node with one edge instead.
//
// Each routed path carries one element through a set node; a set node whose
// group supplies it a spare unit protects every path through it.
//
// The optimal protected count is never below the MCG optimum. It equals it
// when every element's sets lie in a single group. Otherwise a group unit
// may route an element itself and leave that element's entry edge to feed a
// set of another group, so the count can exceed the MCG optimum.

#ifndef MFP_MCG_REDUCTION_H_
#define MFP_MCG_REDUCTION_H_

#include <vector>

#include "mfp/graph.h"

namespace mfp {

struct McgInstance {
  int num_elements = 0;                 // ground set {0, ..., n-1}
  std::vector<std::vector<int>> sets;   // subsets of the ground set
  std::vector<std::vector<int>> groups; // partition of set indices
  int budget = 0;                       // k: sets selected at most
};

// Throws std::invalid_argument when the instance is malformed: elements out
// of range, groups not partitioning the sets, an empty group or set, or no
// element covered at all.
NetworkGraph ReduceMcg(const McgInstance& instance);

}  // namespace mfp

#endif  // MFP_MCG_REDUCTION_H_
