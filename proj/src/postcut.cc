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

#include "mfp/postcut.h"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mfp/residual_network.h"

namespace mfp {
namespace {

std::vector<bool> Membership(int num_nodes, const std::vector<NodeId>& nodes) {
  std::vector<bool> in(num_nodes, false);
  for (NodeId v : nodes) in[v] = true;
  return in;
}

// Residual network over all nodes of g plus one virtual source (the last
// node). Edge ids of g are kept; edges outside A' get capacity 0.
ResidualNetwork PostCutNetwork(const NetworkGraph& g,
                               const std::vector<bool>& in_post,
                               const std::vector<bool>& alive) {
  ResidualNetwork net(g.num_nodes() + 1);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edge(e);
    const bool usable = in_post[edge.tail] && in_post[edge.head] && alive[e];
    net.AddEdge(edge.tail, edge.head, usable ? 1 : 0);
  }
  return net;
}

std::vector<bool> ReachableAlive(const NetworkGraph& g, NodeId from,
                                 const std::vector<bool>& in_post,
                                 const std::vector<bool>& alive) {
  std::vector<bool> seen(g.num_nodes(), false);
  std::vector<NodeId> stack = {from};
  seen[from] = true;
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    for (EdgeId e : g.out_edges(u)) {
      const NodeId v = g.edge(e).head;
      if (!alive[e] || !in_post[v] || seen[v]) continue;
      seen[v] = true;
      stack.push_back(v);
    }
  }
  return seen;
}

std::string EdgeLabel(const NetworkGraph& g, EdgeId e) {
  return g.name(g.edge(e).tail) + "->" + g.name(g.edge(e).head);
}

}  // namespace

std::vector<EdgeId> PostCutEdges(const NetworkGraph& g, const CutSet& cut) {
  const std::vector<bool> in_post =
      Membership(g.num_nodes(), cut.side_a_prime);
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (in_post[g.edge(e).tail] && in_post[g.edge(e).head]) out.push_back(e);
  }
  return out;
}

PostCutPlan PlanPostcut(const NetworkGraph& g) {
  if (!HasUniqueMinCut(g)) {
    throw std::invalid_argument("graph has more than one minimum cut");
  }
  return PlanPostcut(g, MinCut(g));
}

PostCutPlan PlanPostcut(const NetworkGraph& g, const CutSet& cut) {
  PostCutPlan plan;
  plan.cut = cut;
  plan.h = static_cast<int>(cut.edges.size());
  const NodeId t = g.sink();
  std::set<NodeId> heads;
  for (EdgeId e : cut.edges) {
    const NodeId v = g.edge(e).head;
    heads.insert(v);
    if (v != t) {
      plan.unit_edge.push_back(e);
      plan.unit_head.push_back(v);
    }
  }
  plan.f_t.assign(heads.begin(), heads.end());
  for (NodeId v : plan.f_t) {
    if (v != t) plan.f_t_prime.push_back(v);
  }
  plan.m = static_cast<int>(plan.unit_edge.size());
  if (plan.m == 0) return plan;

  const std::vector<bool> in_post =
      Membership(g.num_nodes(), cut.side_a_prime);
  const std::vector<bool> all_alive(g.num_edges(), true);
  ResidualNetwork net = PostCutNetwork(g, in_post, all_alive);
  const int vs = g.num_nodes();
  for (NodeId v : plan.f_t_prime) net.AddEdge(vs, v, g.num_edges() + 1);
  plan.n = net.Augment(vs, t, g.num_edges() + 1, ResidualNetwork::Search::kBfs);
  plan.e = plan.n - plan.m;
  const std::vector<bool> source_side = net.ReachableFrom(vs);

  // Decompose into n paths, smallest edge id first, consuming flow.
  for (int i = 0; i < plan.n; ++i) {
    std::vector<EdgeId> path;
    int u = vs;
    while (u != t) {
      int next = -1;
      for (int arc : net.out_arcs(u)) {
        if (arc % 2 == 0 && net.flow(arc) > 0) {
          next = arc;
          break;
        }
      }
      if (next < 0) throw std::logic_error("post-cut decomposition stalled");
      net.Push(next ^ 1, 1);
      if (next / 2 < g.num_edges()) path.push_back(next / 2);
      u = net.head(next);
    }
    int closest = 0;
    for (int k = 0; k < static_cast<int>(path.size()); ++k) {
      const Edge& edge = g.edge(path[k]);
      if (source_side[edge.tail] && !source_side[edge.head]) {
        closest = k;
        break;
      }
    }
    plan.paths.push_back(std::move(path));
    plan.closest_cut.push_back(closest);
  }
  std::set<NodeId> z;
  for (int i = 0; i < plan.n; ++i) z.insert(g.edge(plan.closest_edge(i)).tail);
  plan.coding_nodes.assign(z.begin(), z.end());

  std::vector<std::vector<bool>> from_unit;
  for (NodeId v : plan.unit_head) {
    from_unit.push_back(ReachableAlive(g, v, in_post, all_alive));
  }
  plan.reach.assign(plan.n, std::vector<bool>(plan.m));
  for (int i = 0; i < plan.n; ++i) {
    const NodeId tail = g.edge(plan.closest_edge(i)).tail;
    for (int j = 0; j < plan.m; ++j) plan.reach[i][j] = from_unit[j][tail];
  }
  auto assign_vectors = [&plan](int offset) {
    plan.cauchy_offset = offset;
    plan.matrix = CauchyMatrix(plan.m, plan.n, offset);
    plan.vectors.assign(plan.n, std::vector<gf256::Symbol>(plan.m, 0));
    for (int i = 0; i < plan.n; ++i) {
      for (int j = 0; j < plan.m; ++j) {
        if (plan.reach[i][j]) plan.vectors[i][j] = plan.matrix.at(j, i);
      }
    }
  };
  // Masking can make a minor singular by coincidence; shift the evaluation
  // points until every single post-cut failure leaves all units solvable.
  const std::vector<EdgeId> post_edges = PostCutEdges(g, cut);
  auto survives_single_failures = [&]() {
    for (const EdgeId e : post_edges) {
      const std::array<EdgeId, 1> failed{e};
      for (const bool ok : RecoveredUnits(g, plan, failed)) {
        if (!ok) return false;
      }
    }
    return true;
  };
  const int max_offset = plan.m > 0 ? 256 - plan.m - plan.n : 0;
  for (int offset = 0;; ++offset) {
    if (offset > max_offset) {
      assign_vectors(0);
      break;
    }
    assign_vectors(offset);
    if (plan.m == 0 || survives_single_failures()) break;
  }
  plan.r = ComputeR(plan.vectors, plan.m);
  plan.sufficiency = VerifySufficiency(g, plan);
  return plan;
}

SufficiencyResult VerifySufficiency(const NetworkGraph& g, const PostCutPlan& plan) {
  SufficiencyResult result;
  const int p = static_cast<int>(plan.f_t_prime.size());
  if (p == 0) return result;
  if (p > 24) throw std::invalid_argument("too many post-cut sources");
  const std::vector<bool> in_post =
      Membership(g.num_nodes(), plan.cut.side_a_prime);
  const std::vector<bool> all_alive(g.num_edges(), true);
  const ResidualNetwork base = PostCutNetwork(g, in_post, all_alive);
  const int vs = g.num_nodes();
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << p); ++mask) {
    ResidualNetwork net = base;
    int units = 0;
    std::vector<NodeId> q;
    for (int k = 0; k < p; ++k) {
      if ((mask >> k & 1) == 0) continue;
      const NodeId v = plan.f_t_prime[k];
      q.push_back(v);
      units += static_cast<int>(
          std::count(plan.unit_head.begin(), plan.unit_head.end(), v));
      net.AddEdge(vs, v, g.num_edges() + 1);
    }
    if (net.MaxFlowValue(vs, g.sink(), units + 1) < units + 1) {
      result.holds = false;
      result.witness = std::move(q);
      return result;
    }
  }
  return result;
}

int ComputeR(std::span<const std::vector<gf256::Symbol>> vectors, int m) {
  const int n = static_cast<int>(vectors.size());
  if (m == 0) return 0;
  if (n < m) {
    const auto solvable = SolvableUnits(vectors, m);
    return static_cast<int>(std::count(solvable.begin(), solvable.end(), true));
  }
  int best = m;
  std::vector<int> idx(m);
  for (int k = 0; k < m; ++k) idx[k] = k;
  std::vector<std::vector<gf256::Symbol>> chosen(m);
  while (true) {
    for (int k = 0; k < m; ++k) chosen[k] = vectors[idx[k]];
    const auto solvable = SolvableUnits(chosen, m);
    best = std::min(
        best, static_cast<int>(std::count(solvable.begin(), solvable.end(), true)));
    int k = m - 1;
    while (k >= 0 && idx[k] == n - m + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int l = k + 1; l < m; ++l) idx[l] = idx[l - 1] + 1;
  }
  return best;
}

std::vector<std::optional<Payload>> SimulatePostcutFailures(
    const NetworkGraph& g, const PostCutPlan& plan,
    std::span<const EdgeId> failed,
    std::span<const std::optional<Payload>> arriving) {
  if (static_cast<int>(arriving.size()) != plan.m) {
    throw std::invalid_argument("one arriving payload per unit expected");
  }
  const std::vector<bool> in_post =
      Membership(g.num_nodes(), plan.cut.side_a_prime);
  std::vector<bool> alive(g.num_edges(), true);
  for (EdgeId e : failed) {
    if (e < 0 || e >= g.num_edges() || !in_post[g.edge(e).tail] ||
        !in_post[g.edge(e).head]) {
      throw std::invalid_argument("failed edge is not a post-cut edge");
    }
    alive[e] = false;
  }
  std::size_t length = 0;
  for (const auto& p : arriving) {
    if (p) length = p->size();
  }
  std::vector<std::vector<bool>> from_unit;
  for (int j = 0; j < plan.m; ++j) {
    from_unit.push_back(arriving[j]
                            ? ReachableAlive(g, plan.unit_head[j], in_post, alive)
                            : std::vector<bool>(g.num_nodes(), false));
  }
  std::vector<CodedSymbol> received;
  for (int i = 0; i < plan.n; ++i) {
    const std::vector<EdgeId>& path = plan.paths[i];
    bool delivered = true;
    for (std::size_t k = plan.closest_cut[i]; k < path.size(); ++k) {
      delivered = delivered && alive[path[k]];
    }
    if (!delivered) continue;
    const NodeId tail = g.edge(plan.closest_edge(i)).tail;
    CodedSymbol symbol{std::vector<gf256::Symbol>(plan.m, 0),
                       Payload(length, 0)};
    for (int j = 0; j < plan.m; ++j) {
      if (!from_unit[j][tail] || !plan.reach[i][j]) continue;
      const gf256::Symbol c = plan.matrix.at(j, i);
      symbol.coefficients[j] = c;
      for (std::size_t b = 0; b < length; ++b) {
        symbol.payload[b] ^= gf256::Mul(c, (*arriving[j])[b]);
      }
    }
    received.push_back(std::move(symbol));
  }
  return RecoverSolvable(received, plan.m);
}

std::vector<bool> RecoveredUnits(const NetworkGraph& g,
                                 const PostCutPlan& plan,
                                 std::span<const EdgeId> failed) {
  std::vector<std::optional<Payload>> arriving;
  for (int j = 0; j < plan.m; ++j) {
    arriving.push_back(Payload{static_cast<gf256::Symbol>(j + 1),
                               static_cast<gf256::Symbol>(3 * j + 7)});
  }
  const auto out = SimulatePostcutFailures(g, plan, failed, arriving);
  std::vector<bool> ok(plan.m);
  for (int j = 0; j < plan.m; ++j) ok[j] = out[j] && *out[j] == *arriving[j];
  return ok;
}

std::string PostcutReport(const NetworkGraph& g, const PostCutPlan& plan) {
  std::ostringstream out;
  auto names = [&](const std::vector<NodeId>& nodes) {
    std::string s;
    for (NodeId v : nodes) s += (s.empty() ? "" : " ") + g.name(v);
    return s;
  };
  out << "h=" << plan.h << " m=" << plan.m << " n=" << plan.n
      << " e=" << plan.e << "\n";
  out << "F_T: " << names(plan.f_t) << "\n";
  out << "F'_T: " << names(plan.f_t_prime) << "\n";
  out << "Z: " << names(plan.coding_nodes) << " (|Z|=" << plan.coding_nodes.size()
      << ")\n";
  out << "r=" << plan.r << "\n";
  out << "single-failure condition: "
      << (plan.sufficiency.holds ? "holds" : "violated by {" +
                                              names(plan.sufficiency.witness) + "}")
      << "\n";
  if (plan.m > 0) {
    out << "e-failure guarantee: "
        << (plan.r == plan.m ? "full" : "partial, at least " +
                                            std::to_string(plan.r) + " units")
        << "\n";
  }
  return out.str();
}

std::string PostcutReachabilityCsv(const NetworkGraph& g,
                                   const PostCutPlan& plan) {
  std::ostringstream out;
  out << "path,closest_edge,coding_node";
  for (int j = 0; j < plan.m; ++j) {
    out << ",unit_" << EdgeLabel(g, plan.unit_edge[j]);
  }
  out << "\n";
  for (int i = 0; i < plan.n; ++i) {
    const EdgeId c = plan.closest_edge(i);
    out << i << "," << EdgeLabel(g, c) << "," << g.name(g.edge(c).tail);
    for (int j = 0; j < plan.m; ++j) out << "," << (plan.reach[i][j] ? 1 : 0);
    out << "\n";
  }
  return out.str();
}

}  // namespace mfp
