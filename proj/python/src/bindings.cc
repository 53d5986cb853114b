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

// Python extension `maxflow_protection._core`. Structured results cross the
// boundary as JSON text or plain containers; the package wrapper decodes
// them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "mfp/connectivity.h"
#include "mfp/coding.h"
#include "mfp/graph.h"
#include "mfp/harness.h"
#include "mfp/postcut.h"
#include "mfp/precut_exact.h"
#include "mfp/precut_heuristic.h"

namespace py = pybind11;

namespace mfp {
namespace {

std::string EdgeName(const NetworkGraph& g, EdgeId e) {
  return g.name(g.edge(e).tail) + "->" + g.name(g.edge(e).head);
}

std::vector<std::string> CutEdgeNames(const NetworkGraph& g) {
  std::vector<std::string> names;
  for (const EdgeId e : MinCut(g).edges) names.push_back(EdgeName(g, e));
  return names;
}

std::vector<std::pair<std::string, std::string>> EdgeList(
    const NetworkGraph& g) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const Edge& e : g.edges()) {
    out.emplace_back(g.name(e.tail), g.name(e.head));
  }
  return out;
}

py::dict Analyze(const NetworkGraph& g) {
  const ConnectivityReport report = AnalyzeConnectivity(g);
  py::dict classes;
  py::dict ec;
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    classes[py::str(g.name(u))] = NodeClassName(report.node_class[u]);
    ec[py::str(g.name(u))] = report.ec[u];
  }
  py::dict out;
  out["h"] = report.h;
  out["esc"] = report.esc;
  out["classes"] = classes;
  out["ec"] = ec;
  return out;
}

py::dict Postcut(const NetworkGraph& g) {
  const PostCutPlan plan = PlanPostcut(g);
  std::vector<std::string> z;
  for (const NodeId v : plan.coding_nodes) z.push_back(g.name(v));
  py::dict out;
  out["h"] = plan.h;
  out["m"] = plan.m;
  out["n"] = plan.n;
  out["e"] = plan.e;
  out["r"] = plan.r;
  out["coding_nodes"] = z;
  out["single_failure_condition"] = plan.sufficiency.holds;
  out["reach"] = plan.reach;
  return out;
}

py::dict Simulate(const NetworkGraph& g, int pre_failures, int post_failures,
                  int rounds, std::uint64_t seed) {
  const DeliveryStats stats =
      SimulateEndToEnd(g, pre_failures, post_failures, rounds, seed);
  py::dict out;
  out["rounds"] = stats.rounds;
  out["h"] = stats.h;
  out["delivered"] = stats.delivered;
  out["baseline"] = stats.baseline;
  out["delivery_rate"] = stats.delivery_rate;
  out["baseline_rate"] = stats.baseline_rate;
  return out;
}

std::vector<std::vector<int>> MatrixRows(const CodingMatrix& m) {
  std::vector<std::vector<int>> rows(m.rows, std::vector<int>(m.cols));
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) rows[i][j] = m.at(i, j);
  }
  return rows;
}

Payload ToPayload(const py::bytes& b) {
  const std::string s = b;
  return Payload(s.begin(), s.end());
}

py::bytes ToBytes(const Payload& p) {
  return py::bytes(std::string(p.begin(), p.end()));
}

std::vector<py::bytes> EncodeBytes(const std::vector<py::bytes>& data,
                                   int extra) {
  std::vector<Payload> units;
  for (const auto& b : data) units.push_back(ToPayload(b));
  const CodingMatrix m =
      ProtectionMatrix(static_cast<int>(units.size()), extra);
  std::vector<py::bytes> out;
  for (const Payload& p : Encode(units, m)) out.push_back(ToBytes(p));
  return out;
}

std::vector<py::bytes> DecodeBytes(
    const std::vector<std::pair<int, py::bytes>>& received, int k,
    int extra) {
  std::vector<Combination> combos;
  for (const auto& [column, b] : received) {
    combos.push_back({column, ToPayload(b)});
  }
  const CodingMatrix m = ProtectionMatrix(k, extra);
  std::vector<py::bytes> out;
  for (const Payload& p : Decode(combos, m)) out.push_back(ToBytes(p));
  return out;
}

}  // namespace
}  // namespace mfp

PYBIND11_MODULE(_core, m) {
  using namespace mfp;
  m.doc() = "Max-flow protection: graph analysis, coding plans, benchmarks.";

  py::class_<NetworkGraph>(m, "Graph")
      .def_static("from_text", &ParseGraph, py::arg("text"))
      .def_static("from_file", &ReadGraphFile, py::arg("path"))
      .def("to_text", &SerializeGraph)
      .def_property_readonly("num_nodes", &NetworkGraph::num_nodes)
      .def_property_readonly("num_edges", &NetworkGraph::num_edges)
      .def_property_readonly("source",
                             [](const NetworkGraph& g) {
                               return g.name(g.source());
                             })
      .def_property_readonly(
          "sink", [](const NetworkGraph& g) { return g.name(g.sink()); })
      .def("nodes",
           [](const NetworkGraph& g) {
             std::vector<std::string> names;
             for (NodeId u = 0; u < g.num_nodes(); ++u) {
               names.push_back(g.name(u));
             }
             return names;
           })
      .def("edges", &EdgeList)
      .def("max_flow",
           [](const NetworkGraph& g) { return MaxFlow(g).value; })
      .def("min_cut", &CutEdgeNames)
      .def("has_unique_min_cut",
           [](const NetworkGraph& g) { return HasUniqueMinCut(g); });

  m.def(
      "generate",
      [](int nodes, std::uint64_t seed, double edge_probability,
         bool require_single_cut) {
        return GenerateInstance({.nodes = nodes,
                                 .edge_probability = edge_probability,
                                 .seed = seed,
                                 .require_single_cut = require_single_cut});
      },
      py::arg("nodes"), py::arg("seed") = 1, py::arg("edge_probability") = 0.0,
      py::arg("require_single_cut") = true);
  m.def("analyze", &Analyze, py::arg("graph"));
  m.def(
      "heuristic_plan_json",
      [](const NetworkGraph& g, std::uint64_t seed) {
        return PlanToJson(RunHeuristic(g, {.seed = seed}));
      },
      py::arg("graph"), py::arg("seed") = 0);
  m.def(
      "exact_solution_json",
      [](const NetworkGraph& g, bool depth_tiebreak, std::int64_t node_limit,
         double time_limit) {
        py::gil_scoped_release release;
        return SolutionToJson(
            SolveExact(g, {.depth_tiebreak = depth_tiebreak,
                           .node_limit = node_limit,
                           .time_limit_seconds = time_limit}));
      },
      py::arg("graph"), py::arg("depth_tiebreak") = true,
      py::arg("node_limit") = 50'000'000, py::arg("time_limit") = 0.0);
  m.def("plan_postcut", &Postcut, py::arg("graph"));
  m.def(
      "compare_csv",
      [](const std::vector<int>& nodes, int instances, std::uint64_t seed,
         int threads) {
        py::gil_scoped_release release;
        const BenchResult result =
            RunComparison({.nodes = nodes,
                           .instances = instances,
                           .seed = seed,
                           .threads = threads,
                           .zero_timings = true});
        return RecordsCsv(result.records);
      },
      py::arg("nodes"), py::arg("instances"), py::arg("seed") = 1,
      py::arg("threads") = 0);
  m.def("simulate", &Simulate, py::arg("graph"), py::arg("pre_failures"),
        py::arg("post_failures"), py::arg("rounds"), py::arg("seed") = 1);
  m.def(
      "protection_matrix",
      [](int k, int extra) { return MatrixRows(ProtectionMatrix(k, extra)); },
      py::arg("k"), py::arg("extra"));
  m.def("encode", &EncodeBytes, py::arg("data"), py::arg("extra"));
  m.def("decode", &DecodeBytes, py::arg("received"), py::arg("k"),
        py::arg("extra"));
}
