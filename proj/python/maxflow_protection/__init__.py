# Copyright 2026 The maxflow-protection Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Max-flow protection for unit-capacity DAG multicast networks."""

import csv
import io
import json

from maxflow_protection._core import (
    Graph,
    analyze,
    decode,
    encode,
    generate,
    plan_postcut,
    protection_matrix,
    simulate,
)
from maxflow_protection import _core

__all__ = [
    "Graph",
    "analyze",
    "compare",
    "decode",
    "encode",
    "generate",
    "plan_postcut",
    "plan_precut",
    "protection_matrix",
    "simulate",
    "solve_exact",
]


def plan_precut(graph, seed=0):
    """Runs the pre-cut heuristic and returns the plan as a dict."""
    return json.loads(_core.heuristic_plan_json(graph, seed))


def solve_exact(graph, depth_tiebreak=True, node_limit=50_000_000,
                time_limit=0.0):
    """Solves the pre-cut problem exactly and returns the solution as a dict."""
    return json.loads(
        _core.exact_solution_json(graph, depth_tiebreak, node_limit,
                                  time_limit))


def compare(nodes, instances, seed=1, threads=0):
    """Heuristic vs exact on random instances; one dict per instance."""
    text = _core.compare_csv(list(nodes), instances, seed, threads)
    rows = []
    for row in csv.DictReader(io.StringIO(text)):
        rows.append({key: float(value) if key.endswith("_ms") else int(value)
                     for key, value in row.items()})
    return rows
