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

// Coding vectors for pre-cut decoding nodes.
//
// A decoding node x forwards k data units (its routed paths) and receives
// k + e combinations, one per S->x path. The first hop of every such path
// is assumed to hold all k units and sends one column of a systematic
// k x (k + e) generator: identity columns on the k routed paths, parity
// columns on the e surplus paths.

#ifndef MFP_PRECUT_CODING_H_
#define MFP_PRECUT_CODING_H_

#include <span>
#include <vector>

#include "mfp/coding.h"
#include "mfp/precut_heuristic.h"

namespace mfp {

struct NeighborColumn {
  bool extra = false;  // surplus path (else routed path)
  int path = 0;        // index into routed_paths or extra_paths
  NodeId first_hop = -1;  // node of H
  int column = 0;
};

struct NodeCode {
  NodeId node = -1;  // node of H
  int k = 0;
  int e = 0;
  CodingMatrix matrix;  // ProtectionMatrix(k, e)
  std::vector<NeighborColumn> neighbors;  // k + e entries, columns distinct
  // Prefix of each S->node path (edge ids of H), aligned with `neighbors`.
  std::vector<std::vector<EdgeId>> prefixes;
};

struct CodeAssignment {
  std::vector<NodeCode> nodes;  // one per decoding node, ascending
};

// Throws std::invalid_argument when a decoding node's path count differs
// from its flow_s.
CodeAssignment AssignPrecutVectors(const PreCutPlan& plan);

// Decodes at one node: `intact[c]` tells whether the path carrying column c
// survived. `data` holds the node's k units in routed-path order. Returns
// the decoded units, or an empty vector if fewer than k columns survived.
std::vector<Payload> DecodeAtNode(const NodeCode& code,
                                  std::span<const Payload> data,
                                  const std::vector<bool>& intact);

}  // namespace mfp

#endif  // MFP_PRECUT_CODING_H_
