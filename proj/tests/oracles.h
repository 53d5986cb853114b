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

// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond the graph container.

#ifndef MFP_TESTS_ORACLES_H_
#define MFP_TESTS_ORACLES_H_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "mfp/graph.h"
#include "mfp/mcg_reduction.h"

namespace mfp::oracle {

// Plain BFS augmenting-path max flow over the edges with usable[e] set,
// from `sources` to `sinks` (each sink node may absorb sink_cap units, each
// source emits unlimited units).
inline int SimpleFlow(const NetworkGraph& g, const std::vector<bool>& usable,
                      const std::vector<NodeId>& sources,
                      const std::vector<NodeId>& sinks, int sink_cap) {
  const int n = g.num_nodes();
  const int src = n;
  const int dst = n + 1;
  struct Arc {
    int to;
    int cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> adj(n + 2);
  auto add = [&](int a, int b, int cap) {
    adj[a].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({b, cap});
    adj[b].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({a, 0});
  };
  const int big = g.num_edges() + 1;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (usable[e]) add(g.edge(e).tail, g.edge(e).head, 1);
  }
  for (const NodeId s : sources) add(src, s, big);
  for (const NodeId t : sinks) add(t, dst, sink_cap);
  int flow = 0;
  while (true) {
    std::vector<int> via(n + 2, -1);
    std::vector<int> queue = {src};
    std::vector<bool> seen(n + 2, false);
    seen[src] = true;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      for (const int a : adj[queue[k]]) {
        if (arcs[a].cap > 0 && !seen[arcs[a].to]) {
          seen[arcs[a].to] = true;
          via[arcs[a].to] = a;
          queue.push_back(arcs[a].to);
        }
      }
    }
    if (!seen[dst]) return flow;
    for (int v = dst; v != src; v = arcs[via[v] ^ 1].to) {
      --arcs[via[v]].cap;
      ++arcs[via[v] ^ 1].cap;
    }
    ++flow;
  }
}

inline int SimpleFlow(const NetworkGraph& g) {
  return SimpleFlow(g, std::vector<bool>(g.num_edges(), true), {g.source()},
                    {g.sink()}, g.num_edges() + 1);
}

// All distinct edge sets of minimum S-T cuts, by subset enumeration.
// Feasible for up to about 20 nodes.
inline std::set<std::vector<EdgeId>> MinCutEdgeSets(const NetworkGraph& g,
                                                    int* value = nullptr) {
  const int n = g.num_nodes();
  std::vector<NodeId> free_nodes;
  for (NodeId u = 0; u < n; ++u) {
    if (u != g.source() && u != g.sink()) free_nodes.push_back(u);
  }
  int best = g.num_edges() + 1;
  std::set<std::vector<EdgeId>> cuts;
  const std::uint64_t count = std::uint64_t{1} << free_nodes.size();
  std::vector<bool> inside(n);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::fill(inside.begin(), inside.end(), false);
    inside[g.source()] = true;
    for (std::size_t i = 0; i < free_nodes.size(); ++i) {
      if (mask >> i & 1) inside[free_nodes[i]] = true;
    }
    std::vector<EdgeId> edges;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (inside[g.edge(e).tail] && !inside[g.edge(e).head]) edges.push_back(e);
    }
    const int size = static_cast<int>(edges.size());
    if (size < best) {
      best = size;
      cuts.clear();
    }
    if (size == best) cuts.insert(edges);
  }
  if (value != nullptr) *value = best;
  return cuts;
}

// Every simple path from `from` to `to` as an edge sequence.
inline std::vector<std::vector<EdgeId>> AllPaths(const NetworkGraph& g,
                                                 NodeId from, NodeId to) {
  std::vector<std::vector<EdgeId>> out;
  std::vector<EdgeId> stack;
  std::function<void(NodeId)> walk = [&](NodeId u) {
    if (u == to) {
      out.push_back(stack);
      return;
    }
    for (const EdgeId e : g.out_edges(u)) {
      stack.push_back(e);
      walk(g.edge(e).head);
      stack.pop_back();
    }
  };
  walk(from);
  return out;
}

// Maximum number of routed paths that can be protected in `hg` (S -> sink,
// flow h): over every set of h edge-disjoint paths and every node set X on
// those paths such that the unused edges carry one extra unit from S to
// each member of X, count the paths visiting X.
inline int BruteForceProtected(const NetworkGraph& hg, int h) {
  const std::vector<std::vector<EdgeId>> paths =
      AllPaths(hg, hg.source(), hg.sink());
  int best = -1;
  std::vector<int> chosen;
  std::vector<bool> used(hg.num_edges(), false);
  std::function<void(std::size_t)> pick = [&](std::size_t start) {
    if (static_cast<int>(chosen.size()) == h) {
      std::vector<NodeId> candidates;
      for (const int p : chosen) {
        for (const EdgeId e : paths[p]) {
          const NodeId v = hg.edge(e).head;
          if (v != hg.sink() &&
              std::find(candidates.begin(), candidates.end(), v) ==
                  candidates.end()) {
            candidates.push_back(v);
          }
        }
      }
      std::vector<bool> unused(hg.num_edges());
      for (EdgeId e = 0; e < hg.num_edges(); ++e) unused[e] = !used[e];
      const std::uint64_t count = std::uint64_t{1} << candidates.size();
      for (std::uint64_t mask = 0; mask < count; ++mask) {
        std::vector<NodeId> x;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
          if (mask >> i & 1) x.push_back(candidates[i]);
        }
        int covered = 0;
        for (const int p : chosen) {
          for (const EdgeId e : paths[p]) {
            if (std::find(x.begin(), x.end(), hg.edge(e).head) != x.end()) {
              ++covered;
              break;
            }
          }
        }
        if (covered <= best) continue;
        if (SimpleFlow(hg, unused, {hg.source()}, x, 1) ==
            static_cast<int>(x.size())) {
          best = covered;
        }
      }
      return;
    }
    for (std::size_t p = start; p < paths.size(); ++p) {
      bool clash = false;
      for (const EdgeId e : paths[p]) clash = clash || used[e];
      if (clash) continue;
      for (const EdgeId e : paths[p]) used[e] = true;
      chosen.push_back(static_cast<int>(p));
      pick(p + 1);
      chosen.pop_back();
      for (const EdgeId e : paths[p]) used[e] = false;
    }
  };
  pick(0);
  return best;
}

// Pre-cut graph built from the (assumed unique) brute-force min cut: nodes
// reachable from S without crossing the cut, each cut edge redirected to a
// fresh sink.
inline NetworkGraph BruteForcePreCut(const NetworkGraph& g) {
  const std::vector<EdgeId> cut = *MinCutEdgeSets(g).begin();
  std::vector<bool> is_cut(g.num_edges(), false);
  for (const EdgeId e : cut) is_cut[e] = true;
  std::vector<bool> inside(g.num_nodes(), false);
  std::vector<NodeId> queue = {g.source()};
  inside[g.source()] = true;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (const EdgeId e : g.out_edges(queue[k])) {
      const NodeId v = g.edge(e).head;
      if (is_cut[e] || inside[v]) continue;
      inside[v] = true;
      queue.push_back(v);
    }
  }
  GraphBuilder b;
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    if (inside[u]) b.AddNode(g.name(u));
  }
  b.AddNode("~sink");
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edge(e);
    if (is_cut[e]) {
      b.AddEdge(g.name(edge.tail), "~sink");
    } else if (inside[edge.tail] && inside[edge.head]) {
      b.AddEdge(g.name(edge.tail), g.name(edge.head));
    }
  }
  b.SetSource(g.name(g.source()));
  b.SetSink("~sink");
  return b.Build();
}

// Best union size over at most `budget` sets, one per group at most.
inline int BruteForceMcg(const McgInstance& instance) {
  std::vector<int> group_of(instance.sets.size());
  for (std::size_t j = 0; j < instance.groups.size(); ++j) {
    for (const int i : instance.groups[j]) group_of[i] = static_cast<int>(j);
  }
  int best = 0;
  const std::uint64_t count = std::uint64_t{1} << instance.sets.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    if (std::popcount(mask) > instance.budget) continue;
    std::vector<bool> group_used(instance.groups.size(), false);
    std::vector<bool> covered(instance.num_elements, false);
    bool ok = true;
    for (std::size_t i = 0; i < instance.sets.size() && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      if (group_used[group_of[i]]) ok = false;
      group_used[group_of[i]] = true;
      for (const int t : instance.sets[i]) covered[t] = true;
    }
    if (ok) {
      best = std::max(best, static_cast<int>(std::count(
                                covered.begin(), covered.end(), true)));
    }
  }
  return best;
}

}  // namespace mfp::oracle

#endif  // MFP_TESTS_ORACLES_H_
