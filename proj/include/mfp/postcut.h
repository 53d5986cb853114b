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

// Post-cut protection: data units that cross the min cut into a node other
// than T are coded over the extra destination connectivity of the post-cut
// region A'.
//
// Unit j is the data carried by the j-th cut edge whose head is not T; its
// head is one node of F'_T. n edge-disjoint paths run from F'_T to T inside
// A'. On path i the closest cutting edge C'_i (the first edge whose removal
// lowers the F'_T -> T flow) is where combination i is formed, from the
// units able to reach tail(C'_i), using column i of an m x n Cauchy matrix.

#ifndef MFP_POSTCUT_H_
#define MFP_POSTCUT_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mfp/coding.h"
#include "mfp/graph.h"

namespace mfp {

struct SufficiencyResult {
  bool holds = true;
  // Nodes of a violating subset Q of F'_T (empty when the check passes).
  std::vector<NodeId> witness;
};

struct PostCutPlan {
  int h = 0;
  CutSet cut;
  std::vector<NodeId> f_t;          // heads of cut edges, sorted, unique
  std::vector<NodeId> f_t_prime;    // f_t without T
  std::vector<EdgeId> unit_edge;    // cut edge carrying unit j (head != T)
  std::vector<NodeId> unit_head;    // head of unit_edge[j]
  int m = 0;                        // units to protect
  int n = 0;                        // F'_T -> T flow inside A'
  int e = 0;                        // n - m
  std::vector<std::vector<EdgeId>> paths;  // n paths, edge ids of G
  std::vector<int> closest_cut;     // index of C'_i within paths[i]
  std::vector<NodeId> coding_nodes; // Z = tails of the C'_i, sorted, unique
  CodingMatrix matrix;              // m x n Cauchy
  // Evaluation-point shift of `matrix`: the smallest one under which every
  // single post-cut edge failure leaves all units solvable (0 if none).
  int cauchy_offset = 0;
  // reach[i][j]: unit j can reach tail(C'_i) inside A'.
  std::vector<std::vector<bool>> reach;
  // Column i of `matrix` with entries zeroed where reach[i][j] is false.
  std::vector<std::vector<gf256::Symbol>> vectors;
  int r = 0;
  SufficiencyResult sufficiency;

  EdgeId closest_edge(int i) const { return paths[i][closest_cut[i]]; }
};

// Requires a unique min cut; throws std::invalid_argument otherwise.
PostCutPlan PlanPostcut(const NetworkGraph& g);
PostCutPlan PlanPostcut(const NetworkGraph& g, const CutSet& cut);

// Every subset Q of F'_T has at least (units entering Q) + 1 edge-disjoint
// paths to T inside A'. Exhaustive over subsets.
SufficiencyResult VerifySufficiency(const NetworkGraph& g, const PostCutPlan& plan);

// Minimum, over all m-subsets of the n vectors, of the number of units whose
// unit vector lies in the subset's span. m == 0 yields 0.
int ComputeR(std::span<const std::vector<gf256::Symbol>> vectors, int m);

// Post-cut failure injection. `arriving[j]` is unit j's payload as it
// reaches its head (nullopt if lost before the cut). Combination i reaches
// T when the segment of path i from C'_i onwards survives; it mixes the
// arriving units that still reach tail(C'_i) over surviving edges of A'.
// Returns the recovered payload per unit. Throws std::invalid_argument if a
// failed edge is not a post-cut edge.
std::vector<std::optional<Payload>> SimulatePostcutFailures(
    const NetworkGraph& g, const PostCutPlan& plan,
    std::span<const EdgeId> failed,
    std::span<const std::optional<Payload>> arriving);
// Same with every unit arriving; returns which units are recovered.
std::vector<bool> RecoveredUnits(const NetworkGraph& g,
                                 const PostCutPlan& plan,
                                 std::span<const EdgeId> failed);

// Edges with both endpoints in A'.
std::vector<EdgeId> PostCutEdges(const NetworkGraph& g, const CutSet& cut);

// Summary lines (m, n, e, |Z|, r, sufficiency verdict).
std::string PostcutReport(const NetworkGraph& g, const PostCutPlan& plan);
// One row per path: "path,closest_edge,coding_node,unit_<edge>..." with 0/1
// cells.
std::string PostcutReachabilityCsv(const NetworkGraph& g,
                                   const PostCutPlan& plan);

}  // namespace mfp

#endif  // MFP_POSTCUT_H_
