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

#include "mfp/connectivity.h"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace mfp {

std::string NodeClassName(NodeClass c) {
  switch (c) {
    case NodeClass::kEsc:
      return "wESC";
    case NodeClass::kEdc:
      return "wEDC";
    case NodeClass::kNone:
      return "wNEC";
    case NodeClass::kSource:
      return "source";
    case NodeClass::kSink:
      return "sink";
  }
  return "?";
}

NodeClass ClassifyNode(const NetworkGraph& g, NodeId u) {
  return ClassifyNode(g, u, MaxFlow(g).value);
}

NodeClass ClassifyNode(const NetworkGraph& g, NodeId u, int h) {
  if (u == g.source() || u == g.sink()) {
    throw std::invalid_argument("ClassifyNode: source and sink have no class");
  }
  const std::array<NodeId, 1> s{g.source()};
  const std::array<NodeId, 1> t{g.sink()};
  const std::array<NodeId, 2> u_and_t{u, g.sink()};
  const std::array<NodeId, 2> s_and_u{g.source(), u};
  const bool extra_source = GroupFlow(g, s, u_and_t) > h;
  const bool extra_dest = GroupFlow(g, s_and_u, t) > h;
  if (extra_source && extra_dest) {
    throw std::logic_error("node with both extra source and extra "
                           "destination connectivity; max flow inconsistent");
  }
  if (extra_source) return NodeClass::kEsc;
  if (extra_dest) return NodeClass::kEdc;
  return NodeClass::kNone;
}

Partition PartitionPrePost(const NetworkGraph& g, const CutSet& cut) {
  if (!cut.side_a.empty()) return {cut.side_a, cut.side_a_prime};
  std::vector<bool> is_cut(g.num_edges(), false);
  for (const EdgeId id : cut.edges) is_cut[id] = true;
  std::vector<bool> reach(g.num_nodes(), false);
  reach[g.source()] = true;
  std::vector<NodeId> stack{g.source()};
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    for (const EdgeId id : g.out_edges(u)) {
      const NodeId v = g.edge(id).head;
      if (!is_cut[id] && !reach[v]) {
        reach[v] = true;
        stack.push_back(v);
      }
    }
  }
  Partition part;
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    (reach[u] ? part.pre_cut : part.post_cut).push_back(u);
  }
  return part;
}

int EscTotal(const NetworkGraph& g, const CutSet& cut) {
  const Partition part = PartitionPrePost(g, cut);
  std::vector<NodeId> targets;
  for (const NodeId u : part.pre_cut) {
    if (u != g.source()) targets.push_back(u);
  }
  if (targets.empty()) return 0;
  targets.push_back(g.sink());
  const std::array<NodeId, 1> s{g.source()};
  return GroupFlow(g, s, targets) - static_cast<int>(cut.edges.size());
}

int ExtraConnectivity(const NetworkGraph& g, NodeId u) {
  return ExtraConnectivity(g, u, MaxFlow(g).value);
}

int ExtraConnectivity(const NetworkGraph& g, NodeId u, int h) {
  if (u == g.sink()) return 0;
  const std::array<NodeId, 1> s{g.source()};
  const std::array<NodeId, 2> u_and_t{u, g.sink()};
  // With u == S the virtual sink edge makes the flow unbounded; S carries
  // no extra connectivity of its own.
  if (u == g.source()) return 0;
  return GroupFlow(g, s, u_and_t) - h;
}

ConnectivityReport AnalyzeConnectivity(const NetworkGraph& g) {
  return AnalyzeConnectivity(g, MinCut(g));
}

ConnectivityReport AnalyzeConnectivity(const NetworkGraph& g,
                                       const CutSet& cut) {
  ConnectivityReport report;
  report.h = static_cast<int>(cut.edges.size());
  report.node_class.resize(g.num_nodes());
  report.ec.resize(g.num_nodes());
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    if (u == g.source()) {
      report.node_class[u] = NodeClass::kSource;
    } else if (u == g.sink()) {
      report.node_class[u] = NodeClass::kSink;
    } else {
      report.node_class[u] = ClassifyNode(g, u, report.h);
    }
    report.ec[u] = ExtraConnectivity(g, u, report.h);
  }
  report.esc = EscTotal(g, cut);
  const Partition part = PartitionPrePost(g, cut);
  report.pre_cut = part.pre_cut;
  report.post_cut = part.post_cut;
  return report;
}

std::string ConnectivityCsv(const NetworkGraph& g,
                            const ConnectivityReport& report) {
  std::ostringstream out;
  out << "node,class,ec\n";
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    out << g.name(u) << "," << NodeClassName(report.node_class[u]) << ","
        << report.ec[u] << "\n";
  }
  return out.str();
}

std::string DummySinkName(const NetworkGraph& g) {
  std::string name = g.name(g.sink()) + "'";
  while (g.has_node(name)) name += "'";
  return name;
}

PreCutSubgraph BuildPreCutSubgraph(const NetworkGraph& g, const CutSet& cut) {
  const Partition part = PartitionPrePost(g, cut);
  std::vector<bool> in_a(g.num_nodes(), false);
  for (const NodeId u : part.pre_cut) in_a[u] = true;
  std::vector<bool> is_cut(g.num_edges(), false);
  for (const EdgeId id : cut.edges) is_cut[id] = true;

  PreCutSubgraph sub;
  GraphBuilder builder;
  std::vector<NodeId> local(g.num_nodes(), -1);
  for (const NodeId u : part.pre_cut) {
    local[u] = builder.AddNode(g.name(u));
    sub.to_original.push_back(u);
  }
  const std::string dummy = DummySinkName(g);
  const NodeId t_prime = builder.AddNode(dummy);
  sub.to_original.push_back(-1);
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edge(id);
    if (is_cut[id]) {
      builder.AddEdge(local[e.tail], t_prime);
      sub.edge_to_original.push_back(id);
      sub.tails.push_back(e.tail);
    } else if (in_a[e.tail] && in_a[e.head]) {
      builder.AddEdge(local[e.tail], local[e.head]);
      sub.edge_to_original.push_back(id);
    }
  }
  std::sort(sub.tails.begin(), sub.tails.end());
  sub.tails.erase(std::unique(sub.tails.begin(), sub.tails.end()),
                  sub.tails.end());
  builder.SetSource(g.name(g.source()));
  builder.SetSink(dummy);
  sub.graph = builder.Build();
  return sub;
}

}  // namespace mfp
