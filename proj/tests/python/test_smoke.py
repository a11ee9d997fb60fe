"""Smoke tests for the python bindings."""

import json

import _chirogrid as cg


def test_sampling_is_deterministic():
    a = cg.sample(10, 2, seed=42)
    b = cg.sample(10, 2, seed=42)
    assert a == b
    assert len(a) == 10 and len(a[0]) == 2
    assert cg.sample(10, 2, seed=43) != a


def test_grid_denominator():
    assert cg.grid_denominator(10, 2, "0") == "1000"
    assert cg.grid_denominator(32, 2, "1/2") == "185364"


def test_orientation_and_chirotope():
    square = [["0", "0"], ["1", "0"], ["0", "1"], ["1", "1"]]
    assert cg.orientation(square[:3]) == 1
    assert cg.chirotope(square, 2) == "++--"


def test_round_and_codec_roundtrip():
    pts = cg.sample(8, 2, seed=7)
    rounded = cg.round_config(pts, "1000")
    blob = cg.encode(rounded, "1000")
    assert cg.decode(blob) == rounded


def test_experiment_summary():
    out = json.loads(cg.run_theorem_experiment(8, 2, eps="1", trials=5, seed=1))
    assert out["preserved"] + out["flip"] + out["degenerate"] + out["collision"] == 5
    paper, exact = cg.success_lower_bound(32, 2, "1/2")
    assert abs(paper - 0.8719) < 1e-3
    assert exact < paper  # the two-sided slab bound is weaker


def test_verifiers_are_quiet():
    assert cg.verify_lemma1(2, 50, seed=3) == 0
    assert cg.verify_lemma2(2, 100, "1000", seed=4) == 0
