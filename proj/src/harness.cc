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

#include "mfp/harness.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "mfp/connectivity.h"

namespace mfp {
namespace {

double Uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t Below(std::mt19937_64& rng, std::size_t n) { return rng() % n; }

double Millis(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - since)
      .count();
}

// Up to `count` distinct entries of `pool`, uniformly.
std::vector<EdgeId> Sample(std::vector<EdgeId> pool, int count,
                           std::mt19937_64& rng) {
  const std::size_t take = std::min<std::size_t>(pool.size(), count);
  for (std::size_t i = 0; i < take; ++i) {
    std::swap(pool[i], pool[i + Below(rng, pool.size() - i)]);
  }
  pool.resize(take);
  return pool;
}

ExperimentRecord RunInstance(const BenchConfig& config, int id, int nodes,
                             std::uint64_t seed) {
  GeneratorConfig gen;
  gen.nodes = nodes;
  gen.edge_probability = config.edge_probability;
  gen.seed = seed;
  const NetworkGraph g = GenerateInstance(gen);
  const CutSet cut = MinCut(g);
  const PreCutSubgraph sub = BuildPreCutSubgraph(g, cut);
  const int h = static_cast<int>(cut.edges.size());

  ExperimentRecord rec;
  rec.instance = id;
  rec.nodes = nodes;
  rec.h = h;

  auto start = std::chrono::steady_clock::now();
  PreCutHeuristic heuristic(sub, h, {.seed = DeriveSeed(seed, 1)});
  heuristic.SelectInitialNodes();
  heuristic.RestoreMaxFlow();
  rec.heuristic_protected = heuristic.UtilizeResidual().protected_count;
  rec.heuristic_ms = Millis(start);

  start = std::chrono::steady_clock::now();
  const ExactSolution exact = SolveExact(sub, h, config.exact);
  rec.exact_ms = Millis(start);
  rec.exact_protected = exact.protected_count;
  rec.exact_optimal = exact.optimal;
  if (config.zero_timings) rec.heuristic_ms = rec.exact_ms = 0;
  return rec;
}

}  // namespace

double DefaultEdgeProbability(int nodes) {
  if (nodes <= 5) return 0.7;
  return std::clamp(3.0 / (nodes - 1), 0.12, 0.7);
}

std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t a,
                         std::uint64_t b) {
  auto mix = [](std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(base) ^ a) ^ b);
}

NetworkGraph GenerateInstance(const GeneratorConfig& config) {
  const int v = config.nodes;
  if (v < 3) throw std::invalid_argument("need at least 3 nodes");
  const double p = config.edge_probability > 0
                       ? config.edge_probability
                       : DefaultEdgeProbability(v);
  if (!(p > 0 && p < 1)) {
    throw std::invalid_argument("edge probability must lie in (0, 1)");
  }
  std::mt19937_64 rng(config.seed);
  for (int attempt = 0; attempt < config.max_attempts; ++attempt) {
    // Position k of the topological order carries label[k].
    std::vector<int> label(v - 2);
    std::iota(label.begin(), label.end(), 1);
    for (int i = static_cast<int>(label.size()) - 1; i > 0; --i) {
      std::swap(label[i], label[Below(rng, i + 1)]);
    }
    auto name = [&](int pos) {
      if (pos == 0) return std::string("S");
      if (pos == v - 1) return std::string("T");
      return "v" + std::to_string(label[pos - 1]);
    };
    std::vector<std::pair<int, int>> edges;
    std::vector<bool> has_in(v, false), has_out(v, false);
    for (int i = 0; i < v; ++i) {
      for (int j = i + 1; j < v; ++j) {
        if (Uniform(rng) < p) {
          edges.emplace_back(i, j);
          has_out[i] = has_in[j] = true;
        }
      }
    }
    for (int j = 1; j < v; ++j) {
      if (has_in[j]) continue;
      const int i = static_cast<int>(Below(rng, j));
      edges.emplace_back(i, j);
      has_out[i] = has_in[j] = true;
    }
    for (int i = 0; i < v - 1; ++i) {
      if (has_out[i]) continue;
      const int j = i + 1 + static_cast<int>(Below(rng, v - 1 - i));
      edges.emplace_back(i, j);
      has_out[i] = has_in[j] = true;
    }
    std::sort(edges.begin(), edges.end());

    GraphBuilder b;
    b.AddNode("S");
    for (int k = 1; k <= v - 2; ++k) b.AddNode("v" + std::to_string(k));
    b.AddNode("T");
    for (const auto& [i, j] : edges) b.AddEdge(name(i), name(j));
    b.SetSource("S");
    b.SetSink("T");
    NetworkGraph g = b.Build();
    if (MaxFlow(g).value < 1) continue;
    if (config.require_single_cut && !HasUniqueMinCut(g)) continue;
    return g;
  }
  throw std::runtime_error("no acceptable instance within " +
                           std::to_string(config.max_attempts) + " attempts");
}

BenchResult RunComparison(const BenchConfig& config) {
  struct Job {
    int id;
    int nodes;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (int nodes : config.nodes) {
    for (int i = 0; i < config.instances; ++i) {
      jobs.push_back({static_cast<int>(jobs.size()), nodes,
                      DeriveSeed(config.seed, nodes, i)});
    }
  }
  std::vector<ExperimentRecord> records(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    while (true) {
      const std::size_t k = next.fetch_add(1);
      if (k >= jobs.size()) return;
      try {
        records[k] = RunInstance(config, jobs[k].id, jobs[k].nodes,
                                 jobs[k].seed);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  int threads = config.threads > 0
                    ? config.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp<int>(threads, 1, std::max<int>(1, jobs.size()));
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  BenchResult result;
  for (const ExperimentRecord& r : records) {
    (r.exact_optimal ? result.records : result.exhausted).push_back(r);
  }
  double ratio_sum = 0;
  for (int nodes : config.nodes) {
    NodeSummary s;
    s.nodes = nodes;
    double sum_h = 0, sum_heur = 0, sum_exact = 0;
    for (const ExperimentRecord& r : result.records) {
      if (r.nodes != nodes) continue;
      ++s.instances;
      sum_h += r.h;
      sum_heur += r.heuristic_protected;
      sum_exact += r.exact_protected;
      ++s.histogram[{r.h, r.heuristic_protected, r.exact_protected}];
      if (r.heuristic_protected > r.exact_protected ||
          r.exact_protected > r.h) {
        ++result.dominance_violations;
      }
    }
    for (const ExperimentRecord& r : result.exhausted) {
      if (r.nodes == nodes) ++s.exhausted;
    }
    if (s.instances > 0) {
      s.mean_h = sum_h / s.instances;
      s.mean_heuristic = sum_heur / s.instances;
      s.mean_exact = sum_exact / s.instances;
    }
    s.ratio = sum_exact > 0 ? sum_heur / sum_exact : 1.0;
    ratio_sum += s.ratio;
    result.per_nodes.push_back(std::move(s));
  }
  if (!config.nodes.empty()) result.average_ratio = ratio_sum / config.nodes.size();
  return result;
}

std::string RecordsCsv(std::span<const ExperimentRecord> records) {
  std::string out =
      "instance,V,h,heuristic_protected,exact_protected,heuristic_ms,"
      "exact_ms\n";
  char line[160];
  for (const ExperimentRecord& r : records) {
    std::snprintf(line, sizeof(line), "%d,%d,%d,%d,%d,%.3f,%.3f\n", r.instance,
                  r.nodes, r.h, r.heuristic_protected, r.exact_protected,
                  r.heuristic_ms, r.exact_ms);
    out += line;
  }
  return out;
}

std::string HistogramCsv(const BenchResult& result) {
  std::ostringstream out;
  out << "V,h,heuristic_protected,exact_protected,count\n";
  for (const NodeSummary& s : result.per_nodes) {
    for (const auto& [key, count] : s.histogram) {
      out << s.nodes << "," << std::get<0>(key) << "," << std::get<1>(key)
          << "," << std::get<2>(key) << "," << count << "\n";
    }
  }
  return out.str();
}

std::string SummaryText(const BenchResult& result) {
  std::ostringstream out;
  char line[200];
  for (const NodeSummary& s : result.per_nodes) {
    std::snprintf(line, sizeof(line),
                  "V=%-3d instances=%-3d exhausted=%-2d mean_h=%.2f "
                  "heuristic=%.2f exact=%.2f ratio=%.3f\n",
                  s.nodes, s.instances, s.exhausted, s.mean_h,
                  s.mean_heuristic, s.mean_exact, s.ratio);
    out << line;
  }
  std::snprintf(line, sizeof(line),
                "average ratio=%.3f dominance violations=%d\n",
                result.average_ratio, result.dominance_violations);
  out << line;
  return out.str();
}

ProtectionSetup BuildProtection(const NetworkGraph& g,
                                const HeuristicOptions& options) {
  if (!HasUniqueMinCut(g)) {
    throw std::invalid_argument("graph has more than one minimum cut");
  }
  const FlowAssignment flow = MaxFlow(g);
  CutSet cut = MinCut(g, flow);
  PreCutHeuristic heuristic(BuildPreCutSubgraph(g, cut),
                            static_cast<int>(cut.edges.size()), options);
  heuristic.SelectInitialNodes();
  heuristic.RestoreMaxFlow();
  PreCutPlan pre = heuristic.UtilizeResidual();
  CodeAssignment codes = AssignPrecutVectors(pre);
  PostCutPlan post = PlanPostcut(g, cut);
  CommodityRouting baseline = DecomposeIntoPaths(g, flow, cut);
  std::vector<EdgeId> unit_cut_edge;
  for (const auto& path : pre.routed_paths) {
    unit_cut_edge.push_back(pre.sub.edge_to_original[path.back()]);
  }
  return {g,
          std::move(cut),
          std::move(pre),
          std::move(codes),
          std::move(post),
          std::move(baseline),
          std::move(unit_cut_edge)};
}

RoundOutcome DeliverRound(const ProtectionSetup& setup,
                          std::span<const EdgeId> failed,
                          std::uint64_t payload_seed) {
  const NetworkGraph& g = setup.g;
  const PreCutPlan& pre = setup.pre;
  const NetworkGraph& hg = pre.sub.graph;
  std::vector<bool> alive(g.num_edges(), true);
  std::vector<bool> is_cut(g.num_edges(), false);
  for (EdgeId e : setup.cut.edges) is_cut[e] = true;
  std::vector<bool> in_post(g.num_nodes(), false);
  for (NodeId v : setup.cut.side_a_prime) in_post[v] = true;
  std::vector<EdgeId> failed_post;
  for (EdgeId e : failed) {
    if (e < 0 || e >= g.num_edges()) {
      throw std::invalid_argument("failed edge out of range");
    }
    if (is_cut[e]) {
      throw std::invalid_argument("min-cut edges cannot fail: " +
                                  g.name(g.edge(e).tail) + "->" +
                                  g.name(g.edge(e).head));
    }
    alive[e] = false;
    if (in_post[g.edge(e).tail] && in_post[g.edge(e).head]) {
      failed_post.push_back(e);
    }
  }

  const int h = static_cast<int>(pre.routed_paths.size());
  std::mt19937_64 rng(payload_seed);
  std::vector<Payload> data(h, Payload(8));
  for (Payload& p : data) {
    for (auto& b : p) b = static_cast<gf256::Symbol>(rng() & 0xFF);
  }

  // Pre-cut stage: decoding nodes rebuild their units when at least k of
  // their k + e incoming paths survive.
  auto alive_h = [&](EdgeId eh) {
    return alive[pre.sub.edge_to_original[eh]];
  };
  std::vector<bool> rebuilt(hg.num_nodes(), false);
  for (const NodeCode& code : setup.codes.nodes) {
    std::vector<bool> intact(code.k + code.e, false);
    std::vector<Payload> units;
    for (std::size_t c = 0; c < code.neighbors.size(); ++c) {
      intact[code.neighbors[c].column] = std::all_of(
          code.prefixes[c].begin(), code.prefixes[c].end(), alive_h);
      if (!code.neighbors[c].extra) {
        units.push_back(data[code.neighbors[c].path]);
      }
    }
    const std::vector<Payload> decoded = DecodeAtNode(code, units, intact);
    rebuilt[code.node] = !decoded.empty() && decoded == units;
  }
  std::vector<bool> at_cut(h, true);
  for (int i = 0; i < h; ++i) {
    bool ok = true;
    for (EdgeId eh : pre.routed_paths[i]) {
      if (!alive_h(eh)) ok = false;
      if (rebuilt[hg.edge(eh).head]) ok = true;
    }
    at_cut[i] = ok;
  }

  // Post-cut stage.
  const PostCutPlan& post = setup.post;
  std::vector<std::optional<Payload>> arriving(post.m);
  std::vector<int> unit_of_path(h, -1);
  for (int j = 0; j < post.m; ++j) {
    for (int i = 0; i < h; ++i) {
      if (setup.unit_cut_edge[i] != post.unit_edge[j]) continue;
      unit_of_path[i] = j;
      if (at_cut[i]) arriving[j] = data[i];
    }
  }
  const auto recovered =
      SimulatePostcutFailures(g, post, failed_post, arriving);

  RoundOutcome out;
  out.delivered.resize(h);
  for (int i = 0; i < h; ++i) {
    const int j = unit_of_path[i];
    out.delivered[i] =
        j < 0 ? at_cut[i] : (recovered[j] && *recovered[j] == data[i]);
  }
  for (const auto& path : setup.baseline.paths) {
    out.baseline.push_back(std::all_of(path.begin(), path.end(),
                                       [&](EdgeId e) { return alive[e]; }));
  }
  return out;
}

DeliveryStats SimulateEndToEnd(const NetworkGraph& g, int q_pre, int q_post,
                               int rounds, std::uint64_t seed) {
  if (q_pre < 0 || q_post < 0 || rounds < 0) {
    throw std::invalid_argument("failure counts and rounds must be >= 0");
  }
  const ProtectionSetup setup = BuildProtection(g, {.seed = seed});
  std::vector<bool> in_post(g.num_nodes(), false);
  for (NodeId v : setup.cut.side_a_prime) in_post[v] = true;
  std::vector<EdgeId> pre_edges, post_edges;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const bool tail_post = in_post[g.edge(e).tail];
    const bool head_post = in_post[g.edge(e).head];
    if (!tail_post && !head_post) pre_edges.push_back(e);
    if (tail_post && head_post) post_edges.push_back(e);
  }

  DeliveryStats stats;
  stats.rounds = rounds;
  stats.h = static_cast<int>(setup.cut.edges.size());
  stats.delivered.assign(stats.h, 0);
  stats.baseline.assign(stats.h, 0);
  std::mt19937_64 rng(DeriveSeed(seed, 2));
  for (int round = 0; round < rounds; ++round) {
    std::vector<EdgeId> failed = Sample(pre_edges, q_pre, rng);
    const std::vector<EdgeId> more = Sample(post_edges, q_post, rng);
    failed.insert(failed.end(), more.begin(), more.end());
    const RoundOutcome out = DeliverRound(setup, failed, rng());
    for (int i = 0; i < stats.h; ++i) {
      stats.delivered[i] += out.delivered[i] ? 1 : 0;
      stats.baseline[i] += out.baseline[i] ? 1 : 0;
    }
  }
  const double total = static_cast<double>(rounds) * stats.h;
  if (total > 0) {
    stats.delivery_rate =
        std::accumulate(stats.delivered.begin(), stats.delivered.end(), 0) /
        total;
    stats.baseline_rate =
        std::accumulate(stats.baseline.begin(), stats.baseline.end(), 0) /
        total;
  }
  return stats;
}

}  // namespace mfp
