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

// Extra source/destination connectivity relative to the S-T max-flow h.
//
// For a node u, with f^{A}(B) the group flow from set A to set B:
//   extra source connectivity (kEsc):      f^S({u,T}) > h, f^{S,u}(T) == h
//   extra destination connectivity (kEdc): f^S({u,T}) == h, f^{S,u}(T) > h
//   neither (kNone):                       both equal h
// Under a unique min cut, kEsc nodes lie on the source side and kEdc nodes
// on the sink side; a node fed only from the sink side that feeds only the
// source side is kNone.

#ifndef MFP_CONNECTIVITY_H_
#define MFP_CONNECTIVITY_H_

#include <string>
#include <vector>

#include "mfp/graph.h"

namespace mfp {

enum class NodeClass { kEsc, kEdc, kNone, kSource, kSink };

std::string NodeClassName(NodeClass c);

struct ConnectivityReport {
  int h = 0;
  std::vector<NodeClass> node_class;  // per node
  std::vector<int> ec;                // per node, f^S({u,T}) - h
  int esc = 0;                        // f^S(A \ {S} U {T}) - h
  std::vector<NodeId> pre_cut;        // A
  std::vector<NodeId> post_cut;       // A'
};

// Throws std::invalid_argument when u is the source or the sink.
NodeClass ClassifyNode(const NetworkGraph& g, NodeId u);
NodeClass ClassifyNode(const NetworkGraph& g, NodeId u, int h);

struct Partition {
  std::vector<NodeId> pre_cut;   // A: the source side of the cut
  std::vector<NodeId> post_cut;  // A': everything else
};
// Uses the cut's recorded sides when present. Otherwise A is the set
// reachable from S once the cut edges are deleted; that set can miss
// source-side nodes whose in-edges all come from the sink side.
Partition PartitionPrePost(const NetworkGraph& g, const CutSet& cut);

// Extra source connectivity of the whole pre-cut region; 0 when A = {S}.
int EscTotal(const NetworkGraph& g, const CutSet& cut);
// EC(u) = f^S({u,T}) - h, measured on the unrouted graph.
int ExtraConnectivity(const NetworkGraph& g, NodeId u);
int ExtraConnectivity(const NetworkGraph& g, NodeId u, int h);

ConnectivityReport AnalyzeConnectivity(const NetworkGraph& g);
ConnectivityReport AnalyzeConnectivity(const NetworkGraph& g,
                                       const CutSet& cut);

// "node,class,ec" with one row per node in id order.
std::string ConnectivityCsv(const NetworkGraph& g,
                            const ConnectivityReport& report);

// The pre-cut region A plus a dummy sink T' that receives one edge per min
// cut edge (from that edge's tail). Node and edge ids are local to `graph`.
struct PreCutSubgraph {
  NetworkGraph graph;               // sink is T'
  std::vector<NodeId> to_original;  // local node -> node of G (-1 for T')
  std::vector<EdgeId> edge_to_original;  // local edge -> edge of G; T' edges
                                         // map to their cut edge
  std::vector<NodeId> tails;        // F_S, as nodes of G (sorted, unique)
};

PreCutSubgraph BuildPreCutSubgraph(const NetworkGraph& g, const CutSet& cut);

// Name used for the dummy sink; suffixed with primes if G already has it.
std::string DummySinkName(const NetworkGraph& g);

}  // namespace mfp

#endif  // MFP_CONNECTIVITY_H_
