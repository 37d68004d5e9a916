# homcount: exact point counts for homogeneous spaces over finite fields
# Copyright 2026 The homcount Authors.
# SPDX-License-Identifier: Apache-2.0

import json
import os

import pytest

import homcount

SPEC_DIR = os.environ.get(
    "HOMCOUNT_SPEC_DIR",
    os.path.join(os.path.dirname(__file__), "..", "..", "data", "specs"),
)


def load(name):
    return homcount.Spec.from_file(os.path.join(SPEC_DIR, name))


def test_split_sl2():
    spec = load("sl2_mod_torus.json")
    assert spec.period == 1
    assert spec.polynomial(0) == [0, 1, 1]
    assert spec.count(2, 1) == 6
    assert spec.count(3, 2) == 90  # 9 * 10
    assert spec.shifted(0) == [2, 3, 1]


def test_conic_torus():
    spec = load("conic_torus.json")
    assert spec.period == 2
    assert spec.minimal_period == 2
    assert spec.polynomial(0) == [-1, 1]
    assert spec.polynomial(1) == [1, 1]
    assert spec.count(3, 1) == 4
    assert spec.count(3, 2) == 8
    r, q_x = spec.factorization()
    assert (r, q_x) == (1, [1])


def test_result_json_roundtrip():
    spec = load("gl2r_h_r2.json")
    doc = json.loads(spec.result_json())
    assert doc["period"] == 1
    assert doc["dim"] == 14
    assert doc["checks"] == {"thm12": True, "thm13": True, "thm14": True}
    assert doc["polynomials"][0]["coeffs"][-1] == "1"


def test_big_counts_are_python_ints():
    spec = load("gl2r_h_r2.json")
    value = spec.count(5, 6)
    assert isinstance(value, int)
    assert value == homcount.oracle.glr_closed_form(2, 5**6)


def test_oracles():
    assert homcount.oracle.conic_count(3, 2, 1) == 4
    assert homcount.oracle.flag_count(2, 3, [1, 2]) == 21
    assert homcount.oracle.p1_pair_count(2, "ordered") == 6
    assert homcount.oracle.p1_pair_count(2, "unordered_variety") == 4
    assert homcount.oracle.twisted_torus_count([[-1]], 3, 2) == 4
    assert homcount.oracle.glr_closed_form(2, 2) == 11200


def test_period_bound():
    assert homcount.period_bound(1) == 2
    assert homcount.period_bound(2) == 12
    assert homcount.period_bound(4) == 120


def test_replay_trace():
    trace = {"base": ["1", "1"], "steps": [{"type": "unipotent", "d": 2}]}
    assert homcount.replay_trace(json.dumps(trace)) == [0, 0, 1, 1]


def test_invalid_spec_raises():
    with pytest.raises(homcount.Error):
        homcount.Spec('{"group": {"preset": "SL", "n": 2}, "subtorus_restriction": [["2"]]}')
