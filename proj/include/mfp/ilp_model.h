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

// Integer program for pre-cut protection, written in CPLEX LP text format so
// it can be handed to an external solver, plus a checker that evaluates an
// assignment against the model.
//
// Variables (i: commodity 0..h-1, j/v: node of H, e: edge id of H):
//   f_i_e   commodity i uses edge e                 binary
//   u_i_j   commodity i enters node j               binary
//   g_j_e   the extra unit for node j uses edge e   binary
//   x_j     node j receives an extra unit           binary
//   z_i_j   commodity i is protected by node j      binary
//   s_i     commodity i is protected                binary
//   dl_i_j  depth credit d_j * z_i_j                integer in [0, d_j]
// Objective: maximize w * sum_i s_i + sum_{i,j} dl_i_j.

#ifndef MFP_ILP_MODEL_H_
#define MFP_ILP_MODEL_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mfp/connectivity.h"
#include "mfp/precut_exact.h"
#include "mfp/precut_heuristic.h"

namespace mfp {

struct LinearTerm {
  std::int64_t coef = 0;
  std::string var;
  bool operator==(const LinearTerm&) const = default;
};

enum class Sense { kLessEqual, kEqual, kGreaterEqual };

struct LinearConstraint {
  std::string name;
  std::vector<LinearTerm> terms;
  Sense sense = Sense::kEqual;
  std::int64_t rhs = 0;
  bool operator==(const LinearConstraint&) const = default;
};

enum class VarType { kBinary, kInteger };

struct Variable {
  std::string name;
  VarType type = VarType::kBinary;
  std::int64_t lower = 0;
  std::int64_t upper = 1;
  bool operator==(const Variable&) const = default;
};

struct IlpModel {
  std::vector<LinearTerm> objective;  // maximized
  std::vector<LinearConstraint> constraints;
  std::vector<Variable> variables;

  // Number of variables whose name starts with `prefix` followed by '_'.
  int CountVariables(std::string_view prefix) const;
  bool operator==(const IlpModel&) const = default;
};

IlpModel BuildPrecutModel(const PreCutSubgraph& sub, int h);

std::string WriteLp(const IlpModel& model);
// Accepts the subset of LP format produced by WriteLp(). Throws
// std::invalid_argument with a line number on malformed input.
IlpModel ParseLp(std::string_view text);

using Assignment = std::map<std::string, std::int64_t>;

// Variables absent from the map are zero.
std::int64_t EvaluateObjective(const IlpModel& model, const Assignment& a);
// Names of violated constraints and out-of-bound variables; empty if the
// assignment is feasible. Unknown variable names are reported too.
std::vector<std::string> CheckAssignment(const IlpModel& model,
                                         const Assignment& a);

// Encodes a protection plan as model variables. `extra_paths[k]` ends at
// `decoding_nodes[k]`; every decoding node contributes one extra unit.
Assignment AssignmentFromPlan(
    const PreCutSubgraph& sub, int h,
    const std::vector<std::vector<EdgeId>>& routed_paths,
    const std::vector<NodeId>& decoding_nodes,
    const std::vector<std::vector<EdgeId>>& extra_paths);
Assignment AssignmentFromSolution(const ExactSolution& sol);
// Uses the first surplus path of each decoding node.
Assignment AssignmentFromPlan(const PreCutPlan& plan);

}  // namespace mfp

#endif  // MFP_ILP_MODEL_H_
