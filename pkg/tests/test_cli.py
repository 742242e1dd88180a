import json

import pytest

from gcsynth.cli import main
from gcsynth.serialize import load_circuit, save_circuit, save_lqc, save_moments
from gcsynth import GroupOp, MomentVector, hidden_gcs


@pytest.fixture()
def su2_file(tmp_path):
    path = tmp_path / "su2.json"
    assert main(["algebra", "export", "--name", "su2", "--two-j", "1",
                 "--out", str(path)]) == 0
    return path


def test_algebra_list(capsys):
    assert main(["algebra", "list"]) == 0
    out = capsys.readouterr().out
    assert "su2" in out and "so2n" in out


def test_algebra_export_so2n(tmp_path):
    path = tmp_path / "so4.json"
    assert main(["algebra", "export", "--name", "so2n", "--n", "2",
                 "--out", str(path)]) == 0
    data = json.loads(path.read_text())
    assert data["rep_dim"] == 4
    assert len(data["basis"]) == 6


def test_synth_pipe_through(tmp_path, su2_file, su2_half):
    handle = hidden_gcs(su2_half, seed=5, num_ops=2)
    moments_path = tmp_path / "m.json"
    save_moments(handle.exact_moments(), "su2:1", moments_path)
    circuit_path = tmp_path / "c.json"
    assert main(["synth", "--algebra", str(su2_file), "--moments", str(moments_path),
                 "--epsilon", "1e-6", "--out", str(circuit_path), "--quiet"]) == 0
    ops, tags, trace, label = load_circuit(circuit_path)
    assert label == "su2:1"
    assert len(ops) >= 1
    assert set(tags) <= {"weyl", "jacobi"}
    assert trace[-1] <= trace[0]


def test_tomo_sim_deterministic(tmp_path, su2_file):
    p1, p2 = tmp_path / "r1.json", tmp_path / "r2.json"
    base = ["tomo-sim", "--algebra", str(su2_file), "--seed", "7",
            "--hidden-ops", "3", "--epsilon", "0.1", "--delta", "0.05", "--quiet"]
    assert main(base + ["--out", str(p1)]) == 0
    assert main(base + ["--out", str(p2)]) == 0
    assert p1.read_bytes() == p2.read_bytes()
    report = json.loads(p1.read_text())
    assert report["distance"] <= 0.1
    assert report["shot_total"] == report["shots_per_observable"] * 3


def test_verify_against_hidden(tmp_path, su2_file, su2_half, capsys):
    handle = hidden_gcs(su2_half, seed=9, num_ops=2)
    circuit_path = tmp_path / "c.json"
    save_circuit(list(handle.preparation_ops), ["jacobi"] * 2, [], "su2:1", circuit_path)
    assert main(["verify", "--algebra", str(su2_file), "--circuit", str(circuit_path),
                 "--against", "hidden", "--seed", "9", "--hidden-ops", "2"]) == 0
    result = json.loads(capsys.readouterr().out)
    assert result["fidelity"] > 1.0 - 1e-9


def test_verify_corrupt_circuit_exits_1(tmp_path, su2_file, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{broken")
    code = main(["verify", "--algebra", str(su2_file), "--circuit", str(bad),
                 "--against", "hidden", "--seed", "1"])
    assert code == 1
    record = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert record["error"] == "ParseError"


def test_synth_max_steps_exceeded_exits_2(tmp_path, su2_file, su2_half, capsys):
    handle = hidden_gcs(su2_half, seed=3, num_ops=2)
    moments_path = tmp_path / "m.json"
    save_moments(handle.exact_moments(), "su2:1", moments_path)
    code = main(["synth", "--algebra", str(su2_file), "--moments", str(moments_path),
                 "--epsilon", "1e-6", "--max-steps", "0", "--quiet",
                 "--out", str(tmp_path / "c.json")])
    assert code == 2
    record = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert record["error"] == "MaxStepsExceeded"
    assert "trace" in record


def test_lqc_run_with_recovery(tmp_path, capsys):
    so4_path = tmp_path / "so4.json"
    assert main(["algebra", "export", "--name", "so2n", "--n", "2",
                 "--out", str(so4_path)]) == 0
    circuit_path = tmp_path / "lqc.json"
    gates = [GroupOp(0, 0.4 + 0.2j), GroupOp(1, -0.3j), GroupOp(0, 0.1)]
    save_lqc(gates, "hw", "so2n:2", circuit_path)
    out_path = tmp_path / "final.json"
    assert main(["lqc", "run", "--circuit", str(circuit_path),
                 "--algebra", str(so4_path), "--out", str(out_path),
                 "--recover-circuit", "--epsilon", "1e-5", "--quiet"]) == 0
    final = json.loads(out_path.read_text())
    assert len(final["moments"]) == 6
    recovered = json.loads((tmp_path / "final.circuit.json").read_text())
    assert len(recovered["ops"]) >= 1


def test_algebra_label_mismatch_exits_1(tmp_path, su2_file, capsys):
    moments_path = tmp_path / "m.json"
    save_moments(MomentVector([1.0, 0.0, 0.0]), "so2n:2", moments_path)
    code = main(["synth", "--algebra", str(su2_file), "--moments", str(moments_path),
                 "--epsilon", "1e-4", "--quiet", "--out", str(tmp_path / "c.json")])
    assert code == 1


def test_out_dir_env_default(tmp_path, su2_file, monkeypatch, su2_half):
    monkeypatch.setenv("GCSYNTH_OUT", str(tmp_path))
    handle = hidden_gcs(su2_half, seed=5, num_ops=1)
    moments_path = tmp_path / "m.json"
    save_moments(handle.exact_moments(), "su2:1", moments_path)
    assert main(["synth", "--algebra", str(su2_file), "--moments", str(moments_path),
                 "--epsilon", "1e-4", "--quiet"]) == 0
    assert (tmp_path / "circuit.json").exists()
