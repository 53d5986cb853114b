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
"""Smoke tests for the Python bindings."""

import itertools
import os
import pathlib

import pytest

import maxflow_protection as mfp

DATA = pathlib.Path(
    os.environ.get("MFP_TEST_DATA_DIR",
                   pathlib.Path(__file__).resolve().parents[1] / "data"))


def fixture(name):
    return mfp.Graph.from_file(str(DATA / f"{name}.graph"))


def test_graph_round_trip():
    g = fixture("four_paths")
    again = mfp.Graph.from_text(g.to_text())
    assert again.to_text() == g.to_text()
    assert g.max_flow() == 4
    assert g.has_unique_min_cut()
    assert sorted(g.min_cut()) == ["F->H", "G->T", "I->T", "J->T"]
    assert g.source == "S" and g.sink == "T"
    assert len(g.edges()) == g.num_edges


def test_malformed_graph_raises_value_error():
    with pytest.raises(ValueError):
        mfp.Graph.from_text("source S\nsink T\nedge S\n")


def test_analyze_classes():
    report = mfp.analyze(fixture("two_routings"))
    assert report["h"] == 2
    assert report["esc"] == 2
    assert set(report["classes"]) == set(fixture("two_routings").nodes())


def test_precut_heuristic_and_exact():
    g = fixture("two_routings")
    plan = mfp.plan_precut(g)
    assert plan["protected_count"] == 2
    assert [x["node"] for x in plan["decoding_nodes"]] == ["A", "C"]
    sol = mfp.solve_exact(fixture("four_paths"))
    assert sol["protected_count"] == 2
    assert sol["optimal"]


def test_non_unique_cut_is_rejected():
    chain = fixture("chain")
    with pytest.raises(ValueError):
        mfp.plan_precut(chain)


def test_postcut_plan():
    plan = mfp.plan_postcut(fixture("postcut_four_units"))
    assert (plan["m"], plan["n"], plan["e"], plan["r"]) == (4, 6, 2, 2)
    assert sorted(plan["coding_nodes"]) == ["A", "B", "C", "M", "N", "P"]
    assert plan["single_failure_condition"]


def test_compare_is_dominated_by_exact():
    rows = mfp.compare([5, 7], instances=3, seed=5, threads=1)
    assert rows
    for row in rows:
        assert row["heuristic_protected"] <= row["exact_protected"] <= row["h"]


def test_generate_and_simulate():
    g = mfp.generate(10, seed=3)
    assert g.num_nodes == 10
    assert g.has_unique_min_cut()
    stats = mfp.simulate(g, 0, 0, rounds=4)
    assert stats["delivery_rate"] == 1.0
    assert stats["rounds"] == 4


def test_encode_decode_any_k_columns():
    data = [b"abc", b"def", b"ghi"]
    combos = mfp.encode(data, extra=2)
    assert len(combos) == 5
    for cols in itertools.combinations(range(5), 3):
        received = [(c, combos[c]) for c in cols]
        assert mfp.decode(received, k=3, extra=2) == data
    assert len(mfp.protection_matrix(3, 2)[0]) == 5
