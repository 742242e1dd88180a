import json

import numpy as np
import pytest

from gcsynth import GroupOp, MomentVector
from gcsynth.errors import ParseError
from gcsynth.serialize import (
    load_circuit,
    load_lqc,
    load_moments,
    save_circuit,
    save_lqc,
    save_moments,
)


def test_moments_round_trip(tmp_path):
    moments = MomentVector([0.25, -1.0, 0.5], source="sampled", shots=100, seed=7)
    path = tmp_path / "m.json"
    save_moments(moments, "su2:1", path)
    loaded, label = load_moments(path)
    assert label == "su2:1"
    assert np.array_equal(loaded.values, moments.values)
    assert loaded.shots == 100
    assert loaded.seed == 7
    assert loaded.source == "sampled"


def test_exact_moments_round_trip(tmp_path):
    moments = MomentVector([1.0, 0.0, 0.0])
    path = tmp_path / "m.json"
    save_moments(moments, "su2:1", path)
    loaded, _ = load_moments(path)
    assert loaded.source == "exact"


def test_circuit_round_trip(tmp_path):
    ops = [GroupOp(0, 0.5 + 0.25j), GroupOp(3, -1.0j)]
    path = tmp_path / "c.json"
    save_circuit(ops, ["weyl", "jacobi"], [1.0, 0.1], "so2n:2", path)
    loaded, tags, trace, label = load_circuit(path)
    assert loaded == ops
    assert tags == ["weyl", "jacobi"]
    assert trace == [1.0, 0.1]
    assert label == "so2n:2"


def test_lqc_round_trip(tmp_path):
    gates = [GroupOp(1, 0.3j), np.eye(4, dtype=complex)]
    path = tmp_path / "l.json"
    save_lqc(gates, "hw", "so2n:2", path)
    loaded, initial, label = load_lqc(path)
    assert initial == "hw"
    assert loaded[0] == gates[0]
    assert np.array_equal(loaded[1], gates[1])


def test_lqc_moment_initial_round_trip(tmp_path):
    initial = MomentVector([0.1] * 6)
    path = tmp_path / "l.json"
    save_lqc([], initial, "so2n:2", path)
    _, loaded, _ = load_lqc(path)
    assert np.allclose(loaded.values, initial.values)


def test_corrupt_json_raises(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(ParseError):
        load_circuit(path)


def test_missing_keys_raise(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"algebra": "su2:1"}))
    with pytest.raises(ParseError):
        load_circuit(path)
    with pytest.raises(ParseError):
        load_moments(path)


def test_malformed_ops_raise(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"algebra": "x", "ops": [{"l": 0, "alpha": [0.0]}]}))
    with pytest.raises(ParseError):
        load_circuit(path)


def test_writer_is_deterministic(tmp_path):
    moments = MomentVector([0.3, 0.1, -0.2])
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    save_moments(moments, "su2:1", p1)
    save_moments(moments, "su2:1", p2)
    assert p1.read_bytes() == p2.read_bytes()
