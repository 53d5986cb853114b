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

#include "mfp/precut_heuristic.h"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "json.hpp"

namespace mfp {

namespace {

// Removes the forward arc of every edge that is still unused in `target`
// but carries flow in `reference`.
void DeleteEdgesReversedIn(const ResidualNetwork& reference,
                           ResidualNetwork& target) {
  for (int e = 0; e < target.num_edges(); ++e) {
    if (reference.EdgeFlow(e) > 0 && target.EdgeFlow(e) == 0) {
      target.SetEdgeCapacity(e, 0);
    }
  }
}

struct Decomposition {
  std::vector<std::vector<EdgeId>> routed;
  std::vector<std::vector<EdgeId>> extra;
  std::vector<NodeId> extra_target;
};

// Edge sequence from `from` to `to` over edges with remaining flow, BFS
// order, or empty if none.
std::vector<EdgeId> FlowPath(const NetworkGraph& h_graph,
                             const std::vector<int>& remaining, NodeId from,
                             NodeId to) {
  std::vector<EdgeId> via(h_graph.num_nodes(), -1);
  std::vector<bool> seen(h_graph.num_nodes(), false);
  std::vector<NodeId> queue = {from};
  seen[from] = true;
  for (std::size_t k = 0; k < queue.size() && !seen[to]; ++k) {
    for (const EdgeId e : h_graph.out_edges(queue[k])) {
      const NodeId v = h_graph.edge(e).head;
      if (remaining[e] == 0 || seen[v]) continue;
      seen[v] = true;
      via[v] = e;
      queue.push_back(v);
    }
  }
  std::vector<EdgeId> path;
  if (!seen[to]) return path;
  for (NodeId at = to; at != from; at = h_graph.edge(via[at]).tail) {
    path.push_back(via[at]);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// Splits the pseudo-flow held in `net` (S->T' flow plus surplus units that
// terminate at intermediate nodes) into S->T' paths and S->x surplus paths.
// Routed paths through surplus nodes are peeled first (deepest node first)
// so that the split protects as many routed paths as it can.
Decomposition DecomposePseudoFlow(const NetworkGraph& h_graph,
                                  const ResidualNetwork& net) {
  const NodeId s = h_graph.source();
  const NodeId t = h_graph.sink();
  std::vector<int> remaining(h_graph.num_edges());
  for (EdgeId e = 0; e < h_graph.num_edges(); ++e) remaining[e] = net.EdgeFlow(e);
  Decomposition out;

  const std::vector<int> depth = HopDistances(h_graph, s);
  std::vector<NodeId> surplus_nodes;
  for (NodeId u = 0; u < h_graph.num_nodes(); ++u) {
    if (u != s && u != t && net.Inflow(u) > net.Outflow(u)) {
      surplus_nodes.push_back(u);
    }
  }
  std::stable_sort(surplus_nodes.begin(), surplus_nodes.end(),
                   [&](NodeId a, NodeId b) { return depth[a] > depth[b]; });
  for (bool progress = true; progress;) {
    progress = false;
    for (const NodeId x : surplus_nodes) {
      std::vector<EdgeId> head = FlowPath(h_graph, remaining, s, x);
      if (head.empty()) continue;
      for (const EdgeId e : head) --remaining[e];
      const std::vector<EdgeId> tail = FlowPath(h_graph, remaining, x, t);
      if (tail.empty()) {
        for (const EdgeId e : head) ++remaining[e];
        continue;
      }
      for (const EdgeId e : tail) --remaining[e];
      head.insert(head.end(), tail.begin(), tail.end());
      out.routed.push_back(std::move(head));
      progress = true;
    }
  }

  for (const NodeId u : surplus_nodes) {
    const int surplus = net.Inflow(u) - net.Outflow(u);
    for (int unit = 0; unit < surplus; ++unit) {
      std::vector<EdgeId> path;
      NodeId at = u;
      while (at != s) {
        EdgeId back = -1;
        for (const EdgeId e : h_graph.in_edges(at)) {
          if (remaining[e] > 0) {
            back = e;
            break;
          }
        }
        if (back < 0) throw std::logic_error("surplus path dead-ends");
        remaining[back] = 0;
        path.push_back(back);
        at = h_graph.edge(back).tail;
      }
      std::reverse(path.begin(), path.end());
      out.extra.push_back(std::move(path));
      out.extra_target.push_back(u);
    }
  }
  while (true) {
    std::vector<EdgeId> path;
    NodeId at = s;
    while (at != t) {
      EdgeId next = -1;
      for (const EdgeId e : h_graph.out_edges(at)) {
        if (remaining[e] > 0) {
          next = e;
          break;
        }
      }
      if (next < 0) break;
      remaining[next] = 0;
      path.push_back(next);
      at = h_graph.edge(next).head;
    }
    if (at != t) {
      if (!path.empty()) throw std::logic_error("routed path dead-ends");
      break;
    }
    out.routed.push_back(std::move(path));
  }
  return out;
}

// Routed paths of the decomposition that pass a node of `in_x` with surplus.
int ProtectedCount(const NetworkGraph& h_graph, const ResidualNetwork& net,
                   const std::vector<bool>& in_x) {
  int count = 0;
  for (const auto& path : DecomposePseudoFlow(h_graph, net).routed) {
    for (const EdgeId e : path) {
      const NodeId v = h_graph.edge(e).head;
      if (in_x[v] && net.Inflow(v) > net.Outflow(v)) {
        ++count;
        break;
      }
    }
  }
  return count;
}

}  // namespace

bool DualResidual::CouplingHolds() const {
  for (int e = 0; e < to_nodes.num_edges(); ++e) {
    const bool fwd_s = to_nodes.residual(2 * e) > 0;
    const bool fwd_t = to_sink.residual(2 * e) > 0;
    if (to_nodes.EdgeFlow(e) > 0 && fwd_t) return false;
    if (to_sink.EdgeFlow(e) > 0 && fwd_s) return false;
  }
  return true;
}

PreCutHeuristic::PreCutHeuristic(PreCutSubgraph sub, int h,
                                 HeuristicOptions options)
    : sub_(std::move(sub)),
      h_(h),
      options_(options),
      rng_(options.seed),
      depth_(HopDistances(sub_.graph, sub_.graph.source())),
      dual_{sub_.graph.ToNetwork(), sub_.graph.ToNetwork()},
      merged_(sub_.graph.ToNetwork()),
      flow_s_(sub_.graph.num_nodes(), 0),
      flow_t_(sub_.graph.num_nodes(), 0) {}

const std::vector<NodeId>& PreCutHeuristic::SelectInitialNodes() {
  const NetworkGraph& hg = sub_.graph;
  const int limit = hg.num_edges() + 1;
  std::vector<bool> chosen(hg.num_nodes(), false);
  while (true) {
    std::vector<int> from_source(hg.num_nodes(), 0);
    std::vector<int> to_sink(hg.num_nodes(), 0);
    for (NodeId u = 0; u < hg.num_nodes(); ++u) {
      if (u == source() || u == sink() || chosen[u]) continue;
      to_sink[u] = dual_.to_sink.MaxFlowValue(u, sink(), limit);
      if (to_sink[u] == 0) continue;
      from_source[u] = dual_.to_nodes.MaxFlowValue(source(), u, limit);
    }
    std::vector<bool> blocked(hg.num_nodes(), false);
    bool committed = false;
    while (!committed) {
      // Best key: most flow to T', then deepest; equal keys drawn at random.
      std::vector<NodeId> best;
      std::tuple<int, int> best_key{-1, -1};
      for (NodeId u = 0; u < hg.num_nodes(); ++u) {
        if (u == source() || u == sink() || chosen[u] || blocked[u]) continue;
        if (to_sink[u] < 1 || from_source[u] <= to_sink[u]) continue;
        const std::tuple<int, int> key{to_sink[u], depth_[u]};
        if (key > best_key) {
          best_key = key;
          best.clear();
        }
        if (key == best_key) best.push_back(u);
      }
      if (best.empty()) break;
      const NodeId x =
          best.size() == 1 ? best[0] : best[rng_() % best.size()];
      const int forward = to_sink[x];

      ResidualNetwork to_nodes = dual_.to_nodes;
      ResidualNetwork to_sink_copy = dual_.to_sink;
      if (to_nodes.Augment(source(), x, forward + 1, options_.search) !=
          forward + 1) {
        throw std::logic_error("phase 1: S->x paths vanished");
      }
      DeleteEdgesReversedIn(to_nodes, to_sink_copy);
      // The deletions can cut x off from T'; such a node is skipped for
      // this round so the surplus stays exactly one unit.
      if (to_sink_copy.Augment(x, sink(), forward, options_.search) !=
          forward) {
        blocked[x] = true;
        continue;
      }
      DeleteEdgesReversedIn(to_sink_copy, to_nodes);
      dual_.to_nodes = std::move(to_nodes);
      dual_.to_sink = std::move(to_sink_copy);
      chosen[x] = true;
      selected_.push_back(x);
      st_flow_ += forward;
      flow_s_[x] = forward + 1;
      flow_t_[x] = forward;
      committed = true;
    }
    if (!committed) break;
  }
  phase1_nodes_ = selected_;
  phase1_st_flow_ = st_flow_;
  return selected_;
}

void PreCutHeuristic::RestoreMaxFlow() {
  const NetworkGraph& hg = sub_.graph;
  merged_ = hg.ToNetwork();
  for (EdgeId e = 0; e < hg.num_edges(); ++e) {
    const bool in_s = dual_.to_nodes.EdgeFlow(e) > 0;
    const bool in_t = dual_.to_sink.EdgeFlow(e) > 0;
    if (in_s && in_t) throw std::logic_error("edge used by both copies");
    if (in_s || in_t) merged_.Push(2 * e, 1);
  }
  st_flow_ = merged_.Inflow(sink());
  while (st_flow_ < h_) {
    if (merged_.Augment(source(), sink(), 1, options_.search) == 1) {
      ++st_flow_;
      continue;
    }
    // The surplus units block every remaining augmenting path. Withdraw the
    // surplus of the most recently selected node and retry.
    bool withdrew = false;
    for (auto it = selected_.rbegin(); it != selected_.rend(); ++it) {
      const NodeId x = *it;
      if (merged_.Inflow(x) - merged_.Outflow(x) <= 0) continue;
      if (merged_.Augment(x, source(), 1, options_.search) != 1) continue;
      flow_s_[x] = 0;
      flow_t_[x] = 0;
      selected_.erase(std::next(it).base());
      ++withdrawn_;
      withdrew = true;
      break;
    }
    if (!withdrew) {
      throw std::logic_error("phase 2 cannot restore the S-T max-flow");
    }
  }
}

PreCutPlan PreCutHeuristic::UtilizeResidual() {
  const NetworkGraph& hg = sub_.graph;
  const int limit = hg.num_edges() + 1;
  std::vector<bool> visited(hg.num_nodes(), false);
  visited[source()] = visited[sink()] = true;
  std::vector<bool> in_x(hg.num_nodes(), false);
  for (const NodeId x : selected_) in_x[x] = true;
  while (true) {
    // Visit every node once; the next one is the node covering the most
    // still-unprotected routed paths (then deepest, then lowest id).
    const Decomposition dec = DecomposePseudoFlow(hg, merged_);
    std::vector<int> unprotected_through(hg.num_nodes(), 0);
    std::vector<bool> on_routed(hg.num_nodes(), false);
    for (const auto& path : dec.routed) {
      bool covered = false;
      for (const EdgeId e : path) {
        const NodeId v = hg.edge(e).head;
        on_routed[v] = true;
        if (in_x[v] && merged_.Inflow(v) > merged_.Outflow(v)) covered = true;
      }
      if (covered) continue;
      for (const EdgeId e : path) ++unprotected_through[hg.edge(e).head];
    }
    NodeId next = -1;
    for (NodeId u = 0; u < hg.num_nodes(); ++u) {
      if (visited[u]) continue;
      if (next < 0 ||
          std::tuple(unprotected_through[u], depth_[u]) >
              std::tuple(unprotected_through[next], depth_[next])) {
        next = u;
      }
    }
    if (next < 0) break;
    visited[next] = true;
    if (!on_routed[next]) continue;
    const int extra = merged_.MaxFlowValue(source(), next, limit);
    if (extra == 0) continue;
    // Commit only if the S-T' flow and the protected count survive.
    ResidualNetwork trial = merged_;
    trial.Augment(source(), next, extra, options_.search);
    std::vector<bool> trial_x = in_x;
    trial_x[next] = true;
    if (trial.Inflow(sink()) < merged_.Inflow(sink()) ||
        ProtectedCount(hg, trial, trial_x) < ProtectedCount(hg, merged_, in_x)) {
      continue;
    }
    merged_ = std::move(trial);
    if (!in_x[next]) {
      in_x[next] = true;
      selected_.push_back(next);
    }
  }
  return Finalize();
}

PreCutPlan PreCutHeuristic::Finalize() const {
  const NetworkGraph& hg = sub_.graph;
  PreCutPlan plan;
  plan.sub = sub_;
  plan.h = h_;
  plan.phase1_nodes = phase1_nodes_;
  plan.phase1_st_flow = phase1_st_flow_;
  plan.withdrawn = withdrawn_;
  plan.st_flow = merged_.Inflow(sink());
  const Decomposition dec = DecomposePseudoFlow(hg, merged_);
  plan.routed_paths = dec.routed;
  plan.extra_paths = dec.extra;
  plan.extra_path_target = dec.extra_target;
  plan.flow_s.assign(hg.num_nodes(), 0);
  plan.flow_t.assign(hg.num_nodes(), 0);
  std::vector<int> through(hg.num_nodes(), 0);
  for (const auto& path : dec.routed) {
    for (const EdgeId e : path) ++through[hg.edge(e).head];
  }
  std::vector<int> surplus(hg.num_nodes(), 0);
  for (const NodeId x : dec.extra_target) ++surplus[x];
  for (NodeId u = 0; u < hg.num_nodes(); ++u) {
    if (u == source() || u == sink()) continue;
    if (surplus[u] > 0 && through[u] > 0) {
      plan.decoding_nodes.push_back(u);
      plan.flow_t[u] = through[u];
      plan.flow_s[u] = through[u] + surplus[u];
    }
  }
  plan.protected_count = CountProtectedPaths(plan);
  plan.path_protected.assign(plan.routed_paths.size(), false);
  std::vector<bool> is_x(hg.num_nodes(), false);
  for (const NodeId x : plan.decoding_nodes) is_x[x] = true;
  for (size_t i = 0; i < plan.routed_paths.size(); ++i) {
    for (const EdgeId e : plan.routed_paths[i]) {
      if (is_x[hg.edge(e).head]) plan.path_protected[i] = true;
    }
  }
  return plan;
}

int CountProtectedPaths(const PreCutPlan& plan) {
  const NetworkGraph& hg = plan.sub.graph;
  std::vector<bool> useful(hg.num_nodes(), false);
  for (const NodeId x : plan.decoding_nodes) {
    useful[x] = plan.flow_s[x] > plan.flow_t[x];
  }
  int count = 0;
  for (const auto& path : plan.routed_paths) {
    for (const EdgeId e : path) {
      if (useful[hg.edge(e).head]) {
        ++count;
        break;
      }
    }
  }
  return count;
}

PreCutPlan RunHeuristic(const NetworkGraph& g, HeuristicOptions options) {
  if (!HasUniqueMinCut(g)) {
    throw std::invalid_argument("graph has more than one minimum cut");
  }
  const CutSet cut = MinCut(g);
  PreCutHeuristic heuristic(BuildPreCutSubgraph(g, cut),
                            static_cast<int>(cut.edges.size()), options);
  heuristic.SelectInitialNodes();
  heuristic.RestoreMaxFlow();
  return heuristic.UtilizeResidual();
}

std::string PlanToJson(const PreCutPlan& plan) {
  const NetworkGraph& hg = plan.sub.graph;
  nlohmann::ordered_json out;
  out["h"] = plan.h;
  out["st_flow"] = plan.st_flow;
  out["protected_count"] = plan.protected_count;
  nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
  for (const NodeId x : plan.decoding_nodes) {
    nodes.push_back({{"node", hg.name(x)},
                     {"flow_s", plan.flow_s[x]},
                     {"flow_t", plan.flow_t[x]}});
  }
  out["decoding_nodes"] = nodes;
  auto node_names = [&hg](const std::vector<EdgeId>& path) {
    std::vector<std::string> names{hg.name(hg.source())};
    for (const EdgeId e : path) names.push_back(hg.name(hg.edge(e).head));
    return names;
  };
  nlohmann::ordered_json paths = nlohmann::ordered_json::array();
  for (size_t i = 0; i < plan.routed_paths.size(); ++i) {
    paths.push_back({{"nodes", node_names(plan.routed_paths[i])},
                     {"protected", static_cast<bool>(plan.path_protected[i])}});
  }
  out["paths"] = paths;
  nlohmann::ordered_json extra = nlohmann::ordered_json::array();
  for (size_t i = 0; i < plan.extra_paths.size(); ++i) {
    extra.push_back({{"target", hg.name(plan.extra_path_target[i])},
                     {"nodes", node_names(plan.extra_paths[i])}});
  }
  out["extra_paths"] = extra;
  return out.dump(2);
}

}  // namespace mfp
