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

// Command-line front end: analysis, planning, exact solving, the
// heuristic-versus-exact benchmark and failure-injection simulation.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mfp/connectivity.h"
#include "mfp/graph.h"
#include "mfp/harness.h"
#include "mfp/ilp_model.h"
#include "mfp/postcut.h"
#include "mfp/precut_exact.h"
#include "mfp/precut_heuristic.h"

namespace {

void WriteText(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string WithNewline(std::string s) {
  if (s.empty() || s.back() != '\n') s.push_back('\n');
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Max-flow protection planner"};
  app.require_subcommand(1);

  std::string graph_path;
  std::uint64_t seed = 0;

  auto* analyze = app.add_subcommand(
      "analyze", "Node classification, pre-cut plan and post-cut plan");
  analyze->add_option("graph", graph_path, "Graph file")->required();
  analyze->add_option("--seed", seed, "Heuristic tie-break seed");

  std::string out_path;
  auto* precut = app.add_subcommand("plan-precut", "Heuristic pre-cut plan");
  precut->add_option("graph", graph_path, "Graph file")->required();
  precut->add_option("--seed", seed, "Heuristic tie-break seed");
  precut->add_option("--out", out_path, "JSON output (default stdout)");

  std::string reach_csv;
  auto* postcut = app.add_subcommand("plan-postcut", "Post-cut coding plan");
  postcut->add_option("graph", graph_path, "Graph file")->required();
  postcut->add_option("--reach-csv", reach_csv, "Reachability CSV output");

  std::string model_path;
  bool no_tiebreak = false;
  double time_limit = 0;
  std::int64_t node_limit = 50'000'000;
  auto* exact = app.add_subcommand("solve-exact", "Exact pre-cut optimum");
  exact->add_option("graph", graph_path, "Graph file")->required();
  exact->add_option("--emit-model", model_path, "Write the ILP model (LP)");
  exact->add_flag("--no-depth-tiebreak", no_tiebreak,
                  "Maximize the protected count only");
  exact->add_option("--time-limit", time_limit, "Seconds, 0 = unlimited");
  exact->add_option("--node-limit", node_limit, "Search nodes, 0 = unlimited");
  exact->add_option("--out", out_path, "JSON output (default stdout)");

  mfp::BenchConfig bench_config;
  bench_config.seed = 1;
  std::string csv_path;
  std::string histogram_path;
  std::string exhausted_path;
  auto* bench = app.add_subcommand("bench", "Heuristic versus exact");
  bench->add_option("--nodes", bench_config.nodes, "Node counts")
      ->delimiter(',');
  bench->add_option("--instances", bench_config.instances,
                    "Instances per node count");
  bench->add_option("--seed", bench_config.seed, "Base seed");
  bench->add_option("--threads", bench_config.threads, "0 = all cores");
  bench->add_option("--edge-probability", bench_config.edge_probability,
                    "Override the per-V default");
  bench->add_option("--time-limit", bench_config.exact.time_limit_seconds,
                    "Exact solver seconds per instance");
  bench->add_flag("--zero-timings", bench_config.zero_timings,
                  "Write 0 ms for byte-stable output");
  bench->add_option("--out", csv_path, "Per-instance CSV")->required();
  bench->add_option("--histogram", histogram_path, "Histogram CSV");
  bench->add_option("--exhausted", exhausted_path,
                    "CSV of instances whose exact budget ran out");

  int q_pre = 1;
  int q_post = 1;
  int rounds = 100;
  int gen_nodes = 10;
  double gen_p = 0;
  auto* simulate = app.add_subcommand(
      "simulate", "End-to-end failure injection (random graph if none given)");
  simulate->add_option("graph", graph_path, "Graph file");
  simulate->add_option("--pre-failures", q_pre, "Failures per round in A");
  simulate->add_option("--post-failures", q_post, "Failures per round in A'");
  simulate->add_option("--rounds", rounds, "Rounds");
  simulate->add_option("--seed", seed, "Seed");
  simulate->add_option("--nodes", gen_nodes, "Generated graph size");

  auto* generate = app.add_subcommand("generate", "Random single-cut DAG");
  generate->add_option("--nodes", gen_nodes, "Node count");
  generate->add_option("--seed", seed, "Seed");
  generate->add_option("--edge-probability", gen_p, "Edge probability");
  generate->add_option("--out", out_path, "Graph output (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      const mfp::NetworkGraph g = mfp::ReadGraphFile(graph_path);
      const mfp::ConnectivityReport report = mfp::AnalyzeConnectivity(g);
      std::cout << "h," << report.h << "\n";
      std::cout << "unique_min_cut," << (mfp::HasUniqueMinCut(g) ? 1 : 0)
                << "\n";
      std::cout << mfp::ConnectivityCsv(g, report);
      if (!mfp::HasUniqueMinCut(g)) {
        std::cerr << "min cut is not unique; plans skipped\n";
        return 1;
      }
      const mfp::PreCutPlan plan = mfp::RunHeuristic(g, {.seed = seed});
      std::cout << "\n[pre-cut]\n" << WithNewline(mfp::PlanToJson(plan));
      std::cout << "\n[post-cut]\n"
                << WithNewline(mfp::PostcutReport(g, mfp::PlanPostcut(g)));
    } else if (precut->parsed()) {
      const mfp::NetworkGraph g = mfp::ReadGraphFile(graph_path);
      const mfp::PreCutPlan plan = mfp::RunHeuristic(g, {.seed = seed});
      WriteText(out_path, WithNewline(mfp::PlanToJson(plan)));
    } else if (postcut->parsed()) {
      const mfp::NetworkGraph g = mfp::ReadGraphFile(graph_path);
      const mfp::PostCutPlan plan = mfp::PlanPostcut(g);
      std::cout << WithNewline(mfp::PostcutReport(g, plan));
      if (!reach_csv.empty()) {
        WriteText(reach_csv, mfp::PostcutReachabilityCsv(g, plan));
      }
    } else if (exact->parsed()) {
      const mfp::NetworkGraph g = mfp::ReadGraphFile(graph_path);
      const mfp::ExactOptions options{.depth_tiebreak = !no_tiebreak,
                                      .node_limit = node_limit,
                                      .time_limit_seconds = time_limit};
      const mfp::ExactSolution sol = mfp::SolveExact(g, options);
      if (!model_path.empty()) {
        WriteText(model_path,
                  mfp::WriteLp(mfp::BuildPrecutModel(sol.sub, sol.h)));
      }
      WriteText(out_path, WithNewline(mfp::SolutionToJson(sol)));
    } else if (bench->parsed()) {
      const mfp::BenchResult result = mfp::RunComparison(bench_config);
      WriteText(csv_path, mfp::RecordsCsv(result.records));
      if (!histogram_path.empty()) {
        WriteText(histogram_path, mfp::HistogramCsv(result));
      }
      if (!exhausted_path.empty()) {
        WriteText(exhausted_path, mfp::RecordsCsv(result.exhausted));
      }
      std::cerr << mfp::SummaryText(result);
    } else if (simulate->parsed()) {
      const mfp::NetworkGraph g =
          graph_path.empty()
              ? mfp::GenerateInstance({.nodes = gen_nodes, .seed = seed})
              : mfp::ReadGraphFile(graph_path);
      const mfp::DeliveryStats stats =
          mfp::SimulateEndToEnd(g, q_pre, q_post, rounds, seed);
      std::cout << "unit,protected_delivered,baseline_delivered,rounds\n";
      for (std::size_t i = 0; i < stats.delivered.size(); ++i) {
        std::cout << i << "," << stats.delivered[i] << ","
                  << stats.baseline[i] << "," << stats.rounds << "\n";
      }
      std::fprintf(stderr, "delivery_rate=%.4f baseline_rate=%.4f\n",
                   stats.delivery_rate, stats.baseline_rate);
    } else if (generate->parsed()) {
      const mfp::NetworkGraph g = mfp::GenerateInstance(
          {.nodes = gen_nodes, .edge_probability = gen_p, .seed = seed});
      WriteText(out_path, mfp::SerializeGraph(g));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
