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

#include "mfp/graph.h"

#include <algorithm>
#include <deque>
#include <fstream>
#include <functional>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace mfp {

NodeId NetworkGraph::node(std::string_view name) const {
  const auto it = index_.find(std::string(name));
  if (it == index_.end()) {
    throw std::out_of_range("unknown node '" + std::string(name) + "'");
  }
  return it->second;
}

bool NetworkGraph::has_node(std::string_view name) const {
  return index_.contains(std::string(name));
}

ResidualNetwork NetworkGraph::ToNetwork() const {
  ResidualNetwork net(num_nodes());
  for (const Edge& e : edges_) net.AddEdge(e.tail, e.head, 1);
  return net;
}

NodeId GraphBuilder::AddNode(std::string_view name) {
  if (name.empty()) throw std::invalid_argument("empty node name");
  const auto it = index_.find(std::string(name));
  if (it != index_.end()) return it->second;
  const NodeId id = static_cast<NodeId>(names_.size());
  names_.emplace_back(name);
  index_.emplace(std::string(name), id);
  return id;
}

EdgeId GraphBuilder::AddEdge(std::string_view tail, std::string_view head) {
  return AddEdge(AddNode(tail), AddNode(head));
}

EdgeId GraphBuilder::AddEdge(NodeId tail, NodeId head) {
  const int n = static_cast<int>(names_.size());
  if (tail < 0 || head < 0 || tail >= n || head >= n) {
    throw std::out_of_range("GraphBuilder::AddEdge: unknown node id");
  }
  edges_.push_back({tail, head});
  return static_cast<EdgeId>(edges_.size() - 1);
}

void GraphBuilder::SetSource(std::string_view name) {
  AddNode(name);
  source_ = name;
}

void GraphBuilder::SetSink(std::string_view name) {
  AddNode(name);
  sink_ = name;
}

NetworkGraph GraphBuilder::Build() const {
  NetworkGraph g;
  g.names_ = names_;
  g.index_ = index_;
  g.edges_ = edges_;
  const int n = static_cast<int>(names_.size());
  g.out_.assign(n, {});
  g.in_.assign(n, {});
  for (EdgeId id = 0; id < static_cast<EdgeId>(edges_.size()); ++id) {
    if (edges_[id].tail == edges_[id].head) {
      throw std::invalid_argument("self-loop on node '" +
                                  names_[edges_[id].tail] + "'");
    }
    g.out_[edges_[id].tail].push_back(id);
    g.in_[edges_[id].head].push_back(id);
  }
  if (source_.empty()) throw std::invalid_argument("no source declared");
  if (sink_.empty()) throw std::invalid_argument("no sink declared");
  g.source_ = index_.at(source_);
  g.sink_ = index_.at(sink_);
  if (g.source_ == g.sink_) {
    throw std::invalid_argument("source and sink coincide");
  }
  if (g.out_[g.source_].empty()) {
    throw std::invalid_argument("source has no outgoing edge");
  }
  if (g.in_[g.sink_].empty()) {
    throw std::invalid_argument("sink has no incoming edge");
  }

  std::vector<int> indegree(n);
  for (const Edge& e : edges_) ++indegree[e.head];
  std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
  for (NodeId u = 0; u < n; ++u) {
    if (indegree[u] == 0) ready.push(u);
  }
  while (!ready.empty()) {
    const NodeId u = ready.top();
    ready.pop();
    g.topo_.push_back(u);
    for (const EdgeId id : g.out_[u]) {
      if (--indegree[edges_[id].head] == 0) ready.push(edges_[id].head);
    }
  }
  if (static_cast<int>(g.topo_.size()) != n) {
    throw std::invalid_argument("graph contains a directed cycle");
  }
  return g;
}

NetworkGraph ParseGraph(std::string_view text) {
  GraphBuilder builder;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_source = false;
  bool have_sink = false;
  auto fail = [&line_no](const std::string& what) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": " +
                                what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string keyword;
    if (!(fields >> keyword)) continue;
    std::vector<std::string> args;
    for (std::string arg; fields >> arg;) args.push_back(arg);
    if (keyword == "node") {
      if (args.size() != 1) fail("expected 'node <id>'");
      builder.AddNode(args[0]);
    } else if (keyword == "edge") {
      if (args.size() != 2) fail("expected 'edge <tail> <head>'");
      builder.AddEdge(args[0], args[1]);
    } else if (keyword == "source") {
      if (args.size() != 1) fail("expected 'source <id>'");
      if (have_source) fail("source declared twice");
      builder.SetSource(args[0]);
      have_source = true;
    } else if (keyword == "sink") {
      if (args.size() != 1) fail("expected 'sink <id>'");
      if (have_sink) fail("sink declared twice");
      builder.SetSink(args[0]);
      have_sink = true;
    } else {
      fail("unknown keyword '" + keyword + "'");
    }
  }
  return builder.Build();
}

NetworkGraph ReadGraphFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseGraph(buffer.str());
}

std::string SerializeGraph(const NetworkGraph& g) {
  std::ostringstream out;
  for (NodeId u = 0; u < g.num_nodes(); ++u) out << "node " << g.name(u) << "\n";
  for (const Edge& e : g.edges()) {
    out << "edge " << g.name(e.tail) << " " << g.name(e.head) << "\n";
  }
  out << "source " << g.name(g.source()) << "\n";
  out << "sink " << g.name(g.sink()) << "\n";
  return out.str();
}

namespace {

ResidualNetwork NetworkWithFlow(const NetworkGraph& g,
                                const FlowAssignment& flow) {
  ResidualNetwork net = g.ToNetwork();
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    if (flow.edge_flow[id] != 0) net.Push(2 * id, flow.edge_flow[id]);
  }
  return net;
}

std::vector<NodeId> Members(const std::vector<bool>& mask, bool value) {
  std::vector<NodeId> out;
  for (NodeId u = 0; u < static_cast<NodeId>(mask.size()); ++u) {
    if (mask[u] == value) out.push_back(u);
  }
  return out;
}

}  // namespace

FlowAssignment MaxFlow(const NetworkGraph& g) {
  ResidualNetwork net = g.ToNetwork();
  FlowAssignment flow;
  flow.value = net.Augment(g.source(), g.sink(), g.num_edges());
  flow.edge_flow.resize(g.num_edges());
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    flow.edge_flow[id] = net.EdgeFlow(id);
  }
  return flow;
}

int GroupFlow(const NetworkGraph& g, std::span<const NodeId> from,
              std::span<const NodeId> to) {
  ResidualNetwork net = g.ToNetwork();
  const int big = g.num_edges() + 1;
  const int vsource = net.AddNode();
  const int vsink = net.AddNode();
  for (const NodeId u : from) net.AddEdge(vsource, u, big);
  for (const NodeId u : to) net.AddEdge(u, vsink, big);
  return net.Augment(vsource, vsink, big);
}

CutSet MinCut(const NetworkGraph& g) { return MinCut(g, MaxFlow(g)); }

CutSet MinCut(const NetworkGraph& g, const FlowAssignment& flow) {
  const ResidualNetwork net = NetworkWithFlow(g, flow);
  const std::vector<bool> reach = net.ReachableFrom(g.source());
  CutSet cut;
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    if (reach[g.edge(id).tail] && !reach[g.edge(id).head]) {
      cut.edges.push_back(id);
    }
  }
  cut.side_a = Members(reach, true);
  cut.side_a_prime = Members(reach, false);
  return cut;
}

CutSet SinkSideMinCut(const NetworkGraph& g, const FlowAssignment& flow) {
  const ResidualNetwork net = NetworkWithFlow(g, flow);
  const std::vector<bool> coreach = net.CoReachable(g.sink());
  CutSet cut;
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    if (!coreach[g.edge(id).tail] && coreach[g.edge(id).head]) {
      cut.edges.push_back(id);
    }
  }
  cut.side_a = Members(coreach, false);
  cut.side_a_prime = Members(coreach, true);
  return cut;
}

bool HasUniqueMinCut(const NetworkGraph& g) {
  const FlowAssignment flow = MaxFlow(g);
  return MinCut(g, flow).edges == SinkSideMinCut(g, flow).edges;
}

std::string CheckFlow(const NetworkGraph& g, const FlowAssignment& flow) {
  if (static_cast<int>(flow.edge_flow.size()) != g.num_edges()) {
    return "flow vector size differs from edge count";
  }
  std::vector<int> net(g.num_nodes(), 0);
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const int f = flow.edge_flow[id];
    if (f < 0 || f > 1) {
      return "edge " + std::to_string(id) + " carries flow outside [0,1]";
    }
    net[g.edge(id).tail] += f;
    net[g.edge(id).head] -= f;
  }
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    if (u == g.source() || u == g.sink()) continue;
    if (net[u] != 0) return "conservation violated at node " + g.name(u);
  }
  if (net[g.source()] != flow.value || -net[g.sink()] != flow.value) {
    return "source/sink imbalance does not match flow value";
  }
  return {};
}

CommodityRouting DecomposeIntoPaths(const NetworkGraph& g,
                                    const FlowAssignment& flow,
                                    const CutSet& cut) {
  if (const std::string problem = CheckFlow(g, flow); !problem.empty()) {
    throw std::invalid_argument("DecomposeIntoPaths: " + problem);
  }
  std::vector<bool> in_cut(g.num_edges(), false);
  for (const EdgeId id : cut.edges) in_cut[id] = true;
  std::vector<int> remaining = flow.edge_flow;
  CommodityRouting routing;
  for (int p = 0; p < flow.value; ++p) {
    std::vector<EdgeId> path;
    NodeId at = g.source();
    while (at != g.sink()) {
      EdgeId next = -1;
      for (const EdgeId id : g.out_edges(at)) {
        if (remaining[id] > 0) {
          next = id;
          break;
        }
      }
      if (next < 0) throw std::invalid_argument("flow path dead-ends");
      remaining[next] = 0;
      path.push_back(next);
      at = g.edge(next).head;
    }
    EdgeId cutting = -1;
    int crossings = 0;
    for (const EdgeId id : path) {
      if (in_cut[id]) {
        cutting = id;
        ++crossings;
      }
    }
    if (crossings != 1) {
      throw std::invalid_argument("path crosses the cut " +
                                  std::to_string(crossings) + " times");
    }
    routing.paths.push_back(std::move(path));
    routing.cutting_edge.push_back(cutting);
  }
  return routing;
}

std::vector<ResidualArc> ResidualView(const NetworkGraph& g,
                                      const FlowAssignment& flow) {
  std::vector<ResidualArc> arcs;
  arcs.reserve(g.num_edges());
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edge(id);
    if (flow.edge_flow[id] > 0) {
      arcs.push_back({e.head, e.tail, id, true});
    } else {
      arcs.push_back({e.tail, e.head, id, false});
    }
  }
  return arcs;
}

std::vector<bool> NodesOnSourceSinkPaths(const NetworkGraph& g) {
  std::vector<bool> from_source(g.num_nodes(), false);
  std::vector<bool> to_sink(g.num_nodes(), false);
  from_source[g.source()] = true;
  for (const NodeId u : g.topological_order()) {
    if (!from_source[u]) continue;
    for (const EdgeId id : g.out_edges(u)) from_source[g.edge(id).head] = true;
  }
  to_sink[g.sink()] = true;
  const auto& order = g.topological_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (const EdgeId id : g.out_edges(*it)) {
      if (to_sink[g.edge(id).head]) to_sink[*it] = true;
    }
  }
  std::vector<bool> on_path(g.num_nodes());
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    on_path[u] = from_source[u] && to_sink[u];
  }
  return on_path;
}

std::vector<int> HopDistances(const NetworkGraph& g, NodeId from) {
  std::vector<int> dist(g.num_nodes(), -1);
  std::deque<NodeId> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    for (const EdgeId id : g.out_edges(u)) {
      const NodeId v = g.edge(id).head;
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace mfp
