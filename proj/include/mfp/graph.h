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

// Unit-capacity DAG with a distinguished source and sink, plus the max-flow,
// min-cut and path-decomposition primitives everything else is built on.

#ifndef MFP_GRAPH_H_
#define MFP_GRAPH_H_

#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mfp/residual_network.h"

namespace mfp {

using NodeId = int;
using EdgeId = int;

struct Edge {
  NodeId tail;
  NodeId head;
};

// Directed acyclic multigraph; every edge has capacity one. Immutable once
// built (see GraphBuilder). Edge ids are dense, 0..num_edges()-1, and node
// ids are dense in declaration order.
class NetworkGraph {
 public:
  int num_nodes() const { return static_cast<int>(names_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  NodeId source() const { return source_; }
  NodeId sink() const { return sink_; }

  const Edge& edge(EdgeId id) const { return edges_[id]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<EdgeId>& out_edges(NodeId u) const { return out_[u]; }
  const std::vector<EdgeId>& in_edges(NodeId u) const { return in_[u]; }

  const std::string& name(NodeId u) const { return names_[u]; }
  // Throws std::out_of_range for unknown names.
  NodeId node(std::string_view name) const;
  bool has_node(std::string_view name) const;

  // Nodes in a topological order (ties by node id).
  const std::vector<NodeId>& topological_order() const { return topo_; }

  // Unit-capacity residual network mirroring this graph: edge k of the
  // network is edge k of the graph, node ids coincide.
  ResidualNetwork ToNetwork() const;

 private:
  friend class GraphBuilder;
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
  std::vector<NodeId> topo_;
  NodeId source_ = -1;
  NodeId sink_ = -1;
};

// Collects nodes and edges, then validates the graph invariants in Build():
// acyclic, source != sink, source out-degree >= 1, sink in-degree >= 1.
class GraphBuilder {
 public:
  // Returns the id of `name`, declaring it if needed.
  NodeId AddNode(std::string_view name);
  EdgeId AddEdge(std::string_view tail, std::string_view head);
  EdgeId AddEdge(NodeId tail, NodeId head);
  void SetSource(std::string_view name);
  void SetSink(std::string_view name);

  // Throws std::invalid_argument when an invariant is violated.
  NetworkGraph Build() const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<Edge> edges_;
  std::string source_;
  std::string sink_;
};

// Parses the line-oriented graph format:
//   # comment
//   node <id>
//   edge <tail> <head>      (repeat for parallel edges)
//   source <id>
//   sink <id>
// Throws std::invalid_argument with the offending line number on error.
NetworkGraph ParseGraph(std::string_view text);
NetworkGraph ReadGraphFile(const std::string& path);
// Canonical text: all nodes declared in id order, edges in id order, then
// source and sink. ParseGraph(SerializeGraph(g)) reproduces g exactly.
std::string SerializeGraph(const NetworkGraph& g);

struct FlowAssignment {
  std::vector<int> edge_flow;  // per edge, 0 or 1
  int value = 0;
};

struct CutSet {
  std::vector<EdgeId> edges;  // sorted ascending
  std::vector<NodeId> side_a;        // contains the source
  std::vector<NodeId> side_a_prime;  // contains the sink
};

struct CommodityRouting {
  std::vector<std::vector<EdgeId>> paths;  // S -> T edge sequences
  std::vector<EdgeId> cutting_edge;        // one per path
};

FlowAssignment MaxFlow(const NetworkGraph& g);

// Max flow from a virtual source attached to every node of `from` to a
// virtual sink attached to every node of `to`; virtual edges carry
// capacity |E|+1.
int GroupFlow(const NetworkGraph& g, std::span<const NodeId> from,
              std::span<const NodeId> to);

// Source-side minimum cut: edges leaving the set of nodes reachable from S
// in the residual graph of a maximum flow.
CutSet MinCut(const NetworkGraph& g);
CutSet MinCut(const NetworkGraph& g, const FlowAssignment& flow);

// Sink-side minimum cut: edges entering the set of nodes that reach T in
// the residual graph.
CutSet SinkSideMinCut(const NetworkGraph& g, const FlowAssignment& flow);

// True iff the min cut is unique, i.e. the source-side and sink-side cuts
// have identical edge sets.
bool HasUniqueMinCut(const NetworkGraph& g);

// Splits a maximum flow into edge-disjoint S-T paths, following flow edges
// in topological order with the smallest edge id first, and tags each path
// with the cut edge it crosses. Throws std::invalid_argument when `flow`
// violates conservation or a path does not cross exactly one cut edge.
CommodityRouting DecomposeIntoPaths(const NetworkGraph& g,
                                    const FlowAssignment& flow,
                                    const CutSet& cut);

// Checks capacity and conservation; returns an empty string when valid,
// otherwise a description of the first violation.
std::string CheckFlow(const NetworkGraph& g, const FlowAssignment& flow);

struct ResidualArc {
  NodeId tail;
  NodeId head;
  EdgeId edge;
  bool backward;  // true for the reversal of a saturated edge
};

// Residual graph of a unit-capacity flow: unsaturated edges keep their
// direction, saturated edges appear reversed.
std::vector<ResidualArc> ResidualView(const NetworkGraph& g,
                                      const FlowAssignment& flow);

// Nodes that lie on at least one directed S-T path.
std::vector<bool> NodesOnSourceSinkPaths(const NetworkGraph& g);

// BFS hop distance from `from` ignoring capacities; -1 if unreachable.
std::vector<int> HopDistances(const NetworkGraph& g, NodeId from);

}  // namespace mfp

#endif  // MFP_GRAPH_H_
