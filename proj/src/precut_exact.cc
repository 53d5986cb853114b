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

#include "mfp/precut_exact.h"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>
#include <utility>

#include "json.hpp"
#include "mfp/residual_network.h"

namespace mfp {
namespace {

using Clock = std::chrono::steady_clock;

class BranchAndBound {
 public:
  BranchAndBound(const PreCutSubgraph& sub, int h, const ExactOptions& options)
      : g_(sub.graph),
        h_(h),
        options_(options),
        used_(g_.num_edges(), 0),
        start_(Clock::now()) {
    if (h_ > 63) throw std::invalid_argument("h too large for exact search");
    depth_ = HopDistances(g_, g_.source());
    for (int& d : depth_) d = std::max(d, 0);
    // Largest sum of interior depths along any S->T' path (DAG longest path).
    std::vector<std::int64_t> best_to_sink(g_.num_nodes(), -1);
    const std::vector<NodeId> order = g_.topological_order();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const NodeId u = *it;
      if (u == g_.sink()) {
        best_to_sink[u] = 0;
        continue;
      }
      for (EdgeId e : g_.out_edges(u)) {
        const NodeId v = g_.edge(e).head;
        if (best_to_sink[v] < 0) continue;
        const std::int64_t own = (u == g_.source()) ? 0 : depth_[u];
        best_to_sink[u] = std::max(best_to_sink[u], best_to_sink[v] + own);
      }
    }
    max_path_depth_ = std::max<std::int64_t>(best_to_sink[g_.source()], 0);
  }

  void Run() {
    Branch(0, -1);
  }

  bool exhausted() const { return exhausted_; }
  bool has_best() const { return has_best_; }
  std::int64_t nodes() const { return nodes_; }
  int best_count() const { return best_count_; }
  std::int64_t best_depth() const { return best_depth_; }
  const std::vector<std::vector<EdgeId>>& best_paths() const {
    return best_paths_;
  }
  const std::vector<NodeId>& best_x() const { return best_x_; }

 private:
  bool Tick() {
    ++nodes_;
    if (options_.node_limit > 0 && nodes_ > options_.node_limit) {
      exhausted_ = true;
    } else if (options_.time_limit_seconds > 0 && (nodes_ & 1023) == 0) {
      const std::chrono::duration<double> spent = Clock::now() - start_;
      if (spent.count() > options_.time_limit_seconds) exhausted_ = true;
    }
    return !exhausted_;
  }

  bool Done() const {
    return exhausted_ ||
           (!options_.depth_tiebreak && has_best_ && best_count_ == h_);
  }

  // True when (count, depth) bounds cannot beat the incumbent.
  bool Dominated(int count_bound, std::int64_t depth_bound) const {
    if (!has_best_) return false;
    if (count_bound != best_count_) return count_bound < best_count_;
    return !options_.depth_tiebreak || depth_bound <= best_depth_;
  }

  std::vector<bool> ReachableOverUnused() const {
    std::vector<bool> seen(g_.num_nodes(), false);
    std::vector<NodeId> stack = {g_.source()};
    seen[g_.source()] = true;
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      for (EdgeId e : g_.out_edges(u)) {
        const NodeId v = g_.edge(e).head;
        if (used_[e] || seen[v]) continue;
        seen[v] = true;
        stack.push_back(v);
      }
    }
    return seen;
  }

  bool Interior(NodeId u) const {
    return u != g_.source() && u != g_.sink();
  }

  ResidualNetwork UnusedNetwork(int extra_nodes) const {
    ResidualNetwork net(g_.num_nodes() + extra_nodes);
    for (EdgeId e = 0; e < g_.num_edges(); ++e) {
      net.AddEdge(g_.edge(e).tail, g_.edge(e).head, used_[e] ? 0 : 1);
    }
    return net;
  }

  // Parallel edges are interchangeable: only the lowest-id unused edge of a
  // parallel class is tried. Call with the out-edges of one node in order.
  bool FirstUnusedParallel(EdgeId e, std::vector<NodeId>& heads_seen) const {
    const NodeId v = g_.edge(e).head;
    if (std::find(heads_seen.begin(), heads_seen.end(), v) !=
        heads_seen.end()) {
      return false;
    }
    heads_seen.push_back(v);
    return true;
  }

  void Branch(int chosen, EdgeId last_first_edge) {
    if (Done() || !Tick()) return;
    const std::vector<bool> reach = ReachableOverUnused();
    int coverable = 0;
    std::int64_t depth_bound = 0;
    for (const std::vector<NodeId>& nodes : path_nodes_) {
      bool any = false;
      for (NodeId u : nodes) {
        if (Interior(u) && reach[u]) {
          any = true;
          depth_bound += depth_[u];
        }
      }
      coverable += any ? 1 : 0;
    }
    const int remaining = h_ - chosen;
    if (Dominated(coverable + remaining,
                  depth_bound + remaining * max_path_depth_)) {
      return;
    }
    if (remaining == 0) {
      EvaluateLeaf(reach);
      return;
    }
    if (UnusedNetwork(0).MaxFlowValue(g_.source(), g_.sink(), remaining) <
        remaining) {
      return;
    }
    std::vector<EdgeId> edges;
    std::vector<NodeId> nodes = {g_.source()};
    std::vector<NodeId> heads_seen;
    for (EdgeId e : g_.out_edges(g_.source())) {
      if (used_[e] || !FirstUnusedParallel(e, heads_seen)) continue;
      if (e <= last_first_edge) continue;
      edges.push_back(e);
      nodes.push_back(g_.edge(e).head);
      used_[e] = 1;
      ExtendPath(chosen, e, edges, nodes);
      used_[e] = 0;
      nodes.pop_back();
      edges.pop_back();
      if (Done()) return;
    }
  }

  void ExtendPath(int chosen, EdgeId first_edge, std::vector<EdgeId>& edges,
                  std::vector<NodeId>& nodes) {
    const NodeId u = nodes.back();
    if (u == g_.sink()) {
      path_edges_.push_back(edges);
      path_nodes_.push_back(nodes);
      Branch(chosen + 1, first_edge);
      path_nodes_.pop_back();
      path_edges_.pop_back();
      return;
    }
    std::vector<NodeId> heads_seen;
    for (EdgeId e : g_.out_edges(u)) {
      if (used_[e] || !FirstUnusedParallel(e, heads_seen)) continue;
      edges.push_back(e);
      nodes.push_back(g_.edge(e).head);
      used_[e] = 1;
      ExtendPath(chosen, first_edge, edges, nodes);
      used_[e] = 0;
      nodes.pop_back();
      edges.pop_back();
      if (Done()) return;
    }
  }

  struct Candidate {
    NodeId node;
    std::uint64_t mask;
    std::int64_t weight;
  };

  void EvaluateLeaf(const std::vector<bool>& reach) {
    std::vector<std::uint64_t> mask(g_.num_nodes(), 0);
    for (int i = 0; i < h_; ++i) {
      for (NodeId u : path_nodes_[i]) {
        if (Interior(u) && reach[u]) mask[u] |= std::uint64_t{1} << i;
      }
    }
    candidates_.clear();
    for (NodeId u = 0; u < g_.num_nodes(); ++u) {
      if (mask[u] == 0) continue;
      candidates_.push_back(
          {u, mask[u], std::int64_t{depth_[u]} * std::popcount(mask[u])});
    }
    std::stable_sort(candidates_.begin(), candidates_.end(),
                     [](const Candidate& a, const Candidate& b) {
                       const int pa = std::popcount(a.mask);
                       const int pb = std::popcount(b.mask);
                       if (pa != pb) return pa > pb;
                       return a.weight > b.weight;
                     });
    const int n = static_cast<int>(candidates_.size());
    suffix_mask_.assign(n + 1, 0);
    suffix_weight_.assign(n + 1, 0);
    for (int i = n - 1; i >= 0; --i) {
      suffix_mask_[i] = suffix_mask_[i + 1] | candidates_[i].mask;
      suffix_weight_[i] = suffix_weight_[i + 1] + candidates_[i].weight;
    }
    ResidualNetwork net = UnusedNetwork(1);
    chosen_x_.clear();
    Select(0, 0, 0, net);
  }

  void Select(int idx, std::uint64_t covered, std::int64_t weight,
              const ResidualNetwork& net) {
    if (Done() || !Tick()) return;
    const int count = std::popcount(covered);
    if (!has_best_ || count > best_count_ ||
        (count == best_count_ && options_.depth_tiebreak &&
         weight > best_depth_)) {
      has_best_ = true;
      best_count_ = count;
      best_depth_ = weight;
      best_paths_ = path_edges_;
      best_x_ = chosen_x_;
    }
    if (idx == static_cast<int>(candidates_.size())) return;
    if (Dominated(std::popcount(covered | suffix_mask_[idx]),
                  weight + suffix_weight_[idx])) {
      return;
    }
    const Candidate& c = candidates_[idx];
    const int super_sink = g_.num_nodes();
    ResidualNetwork with = net;
    with.AddEdge(c.node, super_sink, 1);
    if (with.Augment(g_.source(), super_sink, 1) == 1) {
      chosen_x_.push_back(c.node);
      Select(idx + 1, covered | c.mask, weight + c.weight, with);
      chosen_x_.pop_back();
    }
    Select(idx + 1, covered, weight, net);
  }

  const NetworkGraph& g_;
  const int h_;
  const ExactOptions options_;
  std::vector<int> depth_;
  std::int64_t max_path_depth_ = 0;
  std::vector<char> used_;
  std::vector<std::vector<EdgeId>> path_edges_;
  std::vector<std::vector<NodeId>> path_nodes_;
  std::vector<Candidate> candidates_;
  std::vector<std::uint64_t> suffix_mask_;
  std::vector<std::int64_t> suffix_weight_;
  std::vector<NodeId> chosen_x_;

  Clock::time_point start_;
  std::int64_t nodes_ = 0;
  bool exhausted_ = false;
  bool has_best_ = false;
  int best_count_ = 0;
  std::int64_t best_depth_ = 0;
  std::vector<std::vector<EdgeId>> best_paths_;
  std::vector<NodeId> best_x_;
};

// Walks unit paths of positive forward flow from `from` until a node in
// `is_end` is reached, consuming flow; edge ids below `num_edges` only.
std::vector<EdgeId> PeelPath(ResidualNetwork& net, int num_edges, NodeId from,
                             const std::vector<bool>& is_end) {
  std::vector<EdgeId> path;
  NodeId u = from;
  while (!is_end[u]) {
    int next = -1;
    for (int arc : net.out_arcs(u)) {
      if (arc % 2 == 0 && net.flow(arc) > 0) {
        next = arc;
        break;
      }
    }
    if (next < 0) throw std::logic_error("flow decomposition stalled");
    net.Push(next ^ 1, 1);
    if (next / 2 < num_edges) path.push_back(next / 2);
    u = net.head(next);
  }
  return path;
}

// Any h edge-disjoint S->T' paths, used when the budget ran out before the
// first complete solution.
std::vector<std::vector<EdgeId>> FallbackRouting(const NetworkGraph& hg,
                                                 int h) {
  ResidualNetwork net = hg.ToNetwork();
  net.Augment(hg.source(), hg.sink(), h, ResidualNetwork::Search::kDfs);
  std::vector<bool> is_end(hg.num_nodes(), false);
  is_end[hg.sink()] = true;
  std::vector<std::vector<EdgeId>> paths;
  for (int i = 0; i < h; ++i) {
    paths.push_back(PeelPath(net, hg.num_edges(), hg.source(), is_end));
  }
  return paths;
}

}  // namespace

std::int64_t LexicographicWeight(const PreCutSubgraph& sub, int h) {
  std::int64_t sum = 0;
  for (int d : HopDistances(sub.graph, sub.graph.source())) {
    sum += std::max(d, 0);
  }
  return std::max<std::int64_t>(1 + h * sum, sub.graph.num_edges() + 1);
}

ExactSolution SolveExact(const NetworkGraph& g, const ExactOptions& options) {
  if (!HasUniqueMinCut(g)) {
    throw std::invalid_argument("graph has more than one minimum cut");
  }
  const CutSet cut = MinCut(g);
  return SolveExact(BuildPreCutSubgraph(g, cut),
                    static_cast<int>(cut.edges.size()), options);
}

ExactSolution SolveExact(const PreCutSubgraph& sub, int h,
                         const ExactOptions& options) {
  const NetworkGraph& hg = sub.graph;
  BranchAndBound search(sub, h, options);
  search.Run();

  ExactSolution sol;
  sol.sub = sub;
  sol.h = h;
  sol.nodes_explored = search.nodes();
  sol.optimal = !search.exhausted();
  if (search.has_best()) {
    sol.routed_paths = search.best_paths();
    sol.decoding_nodes = search.best_x();
  } else {
    sol.routed_paths = FallbackRouting(hg, h);
  }
  std::sort(sol.decoding_nodes.begin(), sol.decoding_nodes.end());

  // Extra S->x paths on the edges left unused by the routing.
  std::vector<char> used(hg.num_edges(), 0);
  for (const auto& path : sol.routed_paths) {
    for (EdgeId e : path) used[e] = 1;
  }
  const int super_sink = hg.num_nodes();
  ResidualNetwork net(hg.num_nodes() + 1);
  for (EdgeId e = 0; e < hg.num_edges(); ++e) {
    net.AddEdge(hg.edge(e).tail, hg.edge(e).head, used[e] ? 0 : 1);
  }
  std::vector<bool> is_x(hg.num_nodes() + 1, false);
  for (NodeId x : sol.decoding_nodes) {
    net.AddEdge(x, super_sink, 1);
    is_x[x] = true;
  }
  const int k = static_cast<int>(sol.decoding_nodes.size());
  if (net.Augment(hg.source(), super_sink, k, ResidualNetwork::Search::kDfs) !=
      k) {
    throw std::logic_error("decoding nodes cannot be served");
  }
  std::vector<bool> is_end(hg.num_nodes() + 1, false);
  is_end[super_sink] = true;
  std::vector<std::vector<EdgeId>> by_target(hg.num_nodes());
  for (int i = 0; i < k; ++i) {
    std::vector<EdgeId> path =
        PeelPath(net, hg.num_edges(), hg.source(), is_end);
    const NodeId end = path.empty() ? hg.source() : hg.edge(path.back()).head;
    by_target[end] = std::move(path);
  }
  for (NodeId x : sol.decoding_nodes) {
    sol.extra_paths.push_back(std::move(by_target[x]));
  }

  const std::vector<int> depth = HopDistances(hg, hg.source());
  sol.path_protected.assign(h, false);
  for (int i = 0; i < h; ++i) {
    for (EdgeId e : sol.routed_paths[i]) {
      const NodeId v = hg.edge(e).head;
      if (is_x[v]) {
        sol.path_protected[i] = true;
        sol.depth_sum += std::max(depth[v], 0);
      }
    }
    sol.protected_count += sol.path_protected[i] ? 1 : 0;
  }
  sol.weight = LexicographicWeight(sub, h);
  sol.objective = sol.weight * sol.protected_count + sol.depth_sum;
  sol.upper_bound = sol.optimal ? sol.protected_count : h;
  return sol;
}

std::string SolutionToJson(const ExactSolution& sol) {
  const NetworkGraph& hg = sol.sub.graph;
  nlohmann::ordered_json out;
  out["h"] = sol.h;
  out["protected_count"] = sol.protected_count;
  out["depth_sum"] = sol.depth_sum;
  out["weight"] = sol.weight;
  out["objective"] = sol.objective;
  out["optimal"] = sol.optimal;
  out["upper_bound"] = sol.upper_bound;
  out["nodes_explored"] = sol.nodes_explored;
  auto node_names = [&hg](const std::vector<EdgeId>& path) {
    std::vector<std::string> names{hg.name(hg.source())};
    for (const EdgeId e : path) names.push_back(hg.name(hg.edge(e).head));
    return names;
  };
  nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
  for (const NodeId x : sol.decoding_nodes) nodes.push_back(hg.name(x));
  out["decoding_nodes"] = nodes;
  nlohmann::ordered_json paths = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < sol.routed_paths.size(); ++i) {
    paths.push_back({{"nodes", node_names(sol.routed_paths[i])},
                     {"protected", static_cast<bool>(sol.path_protected[i])}});
  }
  out["paths"] = paths;
  nlohmann::ordered_json extra = nlohmann::ordered_json::array();
  for (const auto& path : sol.extra_paths) extra.push_back(node_names(path));
  out["extra_paths"] = extra;
  return out.dump(2);
}

}  // namespace mfp
