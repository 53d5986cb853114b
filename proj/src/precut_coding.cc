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

#include "mfp/precut_coding.h"

#include <stdexcept>
#include <string>

namespace mfp {

CodeAssignment AssignPrecutVectors(const PreCutPlan& plan) {
  const NetworkGraph& hg = plan.sub.graph;
  CodeAssignment out;
  for (NodeId x : plan.decoding_nodes) {
    NodeCode code;
    code.node = x;
    for (int i = 0; i < static_cast<int>(plan.routed_paths.size()); ++i) {
      const std::vector<EdgeId>& path = plan.routed_paths[i];
      for (std::size_t k = 0; k < path.size(); ++k) {
        if (hg.edge(path[k]).head != x) continue;
        code.neighbors.push_back(
            {false, i, hg.edge(path.front()).head, code.k});
        code.prefixes.emplace_back(path.begin(), path.begin() + k + 1);
        ++code.k;
        break;
      }
    }
    for (int i = 0; i < static_cast<int>(plan.extra_paths.size()); ++i) {
      if (plan.extra_path_target[i] != x) continue;
      const std::vector<EdgeId>& path = plan.extra_paths[i];
      code.neighbors.push_back(
          {true, i, hg.edge(path.front()).head, code.k + code.e});
      code.prefixes.push_back(path);
      ++code.e;
    }
    if (code.k + code.e != plan.flow_s[x] || code.k != plan.flow_t[x]) {
      throw std::invalid_argument("decoding node " + hg.name(x) +
                                  " has " + std::to_string(code.k + code.e) +
                                  " paths but flow_s " +
                                  std::to_string(plan.flow_s[x]));
    }
    code.matrix = ProtectionMatrix(code.k, code.e);
    out.nodes.push_back(std::move(code));
  }
  return out;
}

std::vector<Payload> DecodeAtNode(const NodeCode& code,
                                  std::span<const Payload> data,
                                  const std::vector<bool>& intact) {
  const std::vector<Payload> combos = Encode(data, code.matrix);
  std::vector<Combination> received;
  for (const NeighborColumn& nb : code.neighbors) {
    if (static_cast<int>(received.size()) == code.k) break;
    if (intact[nb.column]) received.push_back({nb.column, combos[nb.column]});
  }
  if (static_cast<int>(received.size()) < code.k) return {};
  return Decode(received, code.matrix);
}

}  // namespace mfp
