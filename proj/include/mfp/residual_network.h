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

#ifndef MFP_RESIDUAL_NETWORK_H_
#define MFP_RESIDUAL_NETWORK_H_

#include <optional>
#include <vector>

namespace mfp {

// Integer-capacity flow network stored as paired arcs. Arc 2k is the forward
// arc of the k-th added edge and arc 2k+1 its reverse; residual(a) is
// capacity minus flow, and flow(2k+1) == -flow(2k) always.
class ResidualNetwork {
 public:
  // How an augmenting path is searched for.
  //   kBfs: shortest path in arcs.
  //   kDfs: depth-first, arcs scanned in insertion order (smallest edge
  //         first), so ties resolve towards earlier edges.
  enum class Search { kBfs, kDfs };

  explicit ResidualNetwork(int num_nodes = 0);

  int AddNode();
  // Returns the index of the forward arc; the edge index is that / 2.
  int AddEdge(int tail, int head, int capacity);

  int num_nodes() const { return static_cast<int>(out_.size()); }
  int num_edges() const { return static_cast<int>(arcs_.size() / 2); }

  int tail(int arc) const { return arcs_[arc ^ 1].head; }
  int head(int arc) const { return arcs_[arc].head; }
  int capacity(int arc) const { return arcs_[arc].capacity; }
  int flow(int arc) const { return arcs_[arc].flow; }
  int residual(int arc) const { return arcs_[arc].capacity - arcs_[arc].flow; }
  const std::vector<int>& out_arcs(int node) const { return out_[node]; }

  // Flow on the edge with the given edge index (not arc index).
  int EdgeFlow(int edge) const { return arcs_[2 * edge].flow; }
  // Sets the capacity of an edge's forward arc. Used to delete an arc that
  // carries no flow (capacity 0) without renumbering.
  void SetEdgeCapacity(int edge, int capacity);
  // Pushes `amount` along one arc (and the opposite on its twin).
  void Push(int arc, int amount);

  // Arc sequence from `from` to `to` through arcs with positive residual, or
  // nullopt. An empty vector is returned when from == to.
  std::optional<std::vector<int>> FindPath(int from, int to,
                                           Search search = Search::kBfs) const;
  // Augments up to `limit` unit paths from `from` to `to`; returns the number
  // of paths augmented. Every path carries exactly one unit.
  int Augment(int from, int to, int limit, Search search = Search::kBfs);
  // Max additional flow from `from` to `to` on a scratch copy; this network
  // is left unchanged.
  int MaxFlowValue(int from, int to, int limit) const;

  // Nodes reachable from `from` through positive-residual arcs.
  std::vector<bool> ReachableFrom(int from) const;
  // Nodes that reach `to` through positive-residual arcs.
  std::vector<bool> CoReachable(int to) const;

  // Net flow out of a node (outflow - inflow), over forward arcs only.
  int NetOutflow(int node) const;
  int Inflow(int node) const;
  int Outflow(int node) const;

 private:
  struct Arc {
    int head;
    int capacity;
    int flow;
  };
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
};

}  // namespace mfp

#endif  // MFP_RESIDUAL_NETWORK_H_
