"""JSON artifact formats: algebras, moments, circuits, LQC circuits, reports.

All matrices are row-major nested lists of [re, im] pairs.  Root indices in
circuit files are 0-based.  Writers emit sorted keys so equal inputs give
byte-identical artifacts.
"""

import json

import numpy as np

from .errors import ParseError
from .moments import MomentVector
from .states import GroupOp


def _matrix_to_json(mat):
    mat = np.asarray(mat, dtype=complex)
    return [[[float(entry.real), float(entry.imag)] for entry in row] for row in mat]


def _matrix_from_json(data, context="matrix"):
    try:
        arr = np.asarray(data, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{context}: entries must be [re, im] pairs") from exc
    if arr.ndim != 3 or arr.shape[2] != 2 or arr.shape[0] != arr.shape[1]:
        raise ParseError(f"{context}: expected a square matrix of [re, im] pairs")
    return arr[:, :, 0] + 1j * arr[:, :, 1]


def _dump(obj, path):
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _load(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from exc


def _require(data, keys, context):
    if not isinstance(data, dict):
        raise ParseError(f"{context}: expected a JSON object")
    missing = [k for k in keys if k not in data]
    if missing:
        raise ParseError(f"{context}: missing keys {missing}")


# ---------------------------------------------------------------------------
# Algebra definition files
# ---------------------------------------------------------------------------

def algebra_to_dict(algebra):
    return {
        "rep_dim": int(algebra.rep_dim),
        "normalization": float(algebra.norm),
        "csa": [int(i) for i in algebra.cartan_weyl.csa_indices],
        "root_pairs": [[int(u), int(v)] for u, v in algebra.cartan_weyl.pair_map],
        "basis": [_matrix_to_json(m) for m in np.asarray(algebra.basis.basis)],
        "name": algebra.label(),
    }


def save_algebra(algebra, path):
    _dump(algebra_to_dict(algebra), path)


def parse_algebra_dict(data, context="algebra file"):
    """Raw pieces from an algebra definition; validation happens on assembly."""
    _require(data, ["rep_dim", "normalization", "csa", "root_pairs", "basis"], context)
    rep_dim = data["rep_dim"]
    if not isinstance(rep_dim, int) or rep_dim < 1:
        raise ParseError(f"{context}: rep_dim must be a positive integer")
    norm = data["normalization"]
    if norm is not None and (not isinstance(norm, (int, float)) or norm <= 0):
        raise ParseError(f"{context}: normalization must be positive or null")
    mats = [_matrix_from_json(m, context=f"{context}: basis[{k}]")
            for k, m in enumerate(data["basis"])]
    if any(m.shape != (rep_dim, rep_dim) for m in mats):
        raise ParseError(f"{context}: basis matrices must be rep_dim x rep_dim")
    csa = data["csa"]
    pairs = data["root_pairs"]
    if not isinstance(csa, list) or not all(isinstance(i, int) for i in csa):
        raise ParseError(f"{context}: csa must be a list of indices")
    if not isinstance(pairs, list) or not all(
            isinstance(p, list) and len(p) == 2 and all(isinstance(i, int) for i in p)
            for p in pairs):
        raise ParseError(f"{context}: root_pairs must be a list of index pairs")
    name = data.get("name", "custom")
    return mats, norm, csa, [tuple(p) for p in pairs], name


# ---------------------------------------------------------------------------
# Moment vector files
# ---------------------------------------------------------------------------

def moments_to_dict(moments, algebra_label):
    return {
        "algebra": algebra_label,
        "moments": [float(v) for v in moments.values],
        "shots_per_observable": moments.shots,
        "seed": moments.seed,
    }


def save_moments(moments, algebra_label, path):
    _dump(moments_to_dict(moments, algebra_label), path)


def load_moments(path):
    data = _load(path)
    _require(data, ["algebra", "moments"], str(path))
    values = data["moments"]
    if not isinstance(values, list) or not all(isinstance(v, (int, float)) for v in values):
        raise ParseError(f"{path}: moments must be a list of numbers")
    shots = data.get("shots_per_observable")
    source = "sampled" if shots else "exact"
    moments = MomentVector(values=np.array(values, dtype=float), source=source,
                           shots=shots, seed=data.get("seed"))
    return moments, data["algebra"]


# ---------------------------------------------------------------------------
# Circuit files
# ---------------------------------------------------------------------------

def circuit_to_dict(ops, kind_tags, trace, algebra_label):
    return {
        "algebra": algebra_label,
        "ops": [{"l": int(op.root_index),
                 "alpha": [float(op.alpha.real), float(op.alpha.imag)]}
                for op in ops],
        "kind_tags": list(kind_tags),
        "trace": [float(d) for d in trace],
    }


def save_circuit(ops, kind_tags, trace, algebra_label, path):
    _dump(circuit_to_dict(ops, kind_tags, trace, algebra_label), path)


def load_circuit(path):
    data = _load(path)
    _require(data, ["algebra", "ops"], str(path))
    ops = []
    for k, entry in enumerate(data["ops"]):
        _require(entry, ["l", "alpha"], f"{path}: ops[{k}]")
        alpha = entry["alpha"]
        if (not isinstance(entry["l"], int) or not isinstance(alpha, list)
                or len(alpha) != 2):
            raise ParseError(f"{path}: ops[{k}] must be {{'l': int, 'alpha': [re, im]}}")
        ops.append(GroupOp(entry["l"], complex(alpha[0], alpha[1])))
    tags = data.get("kind_tags", ["jacobi"] * len(ops))
    if len(tags) != len(ops):
        raise ParseError(f"{path}: kind_tags length must match ops")
    trace = data.get("trace", [])
    return ops, tags, trace, data["algebra"]


# ---------------------------------------------------------------------------
# LQC circuit files
# ---------------------------------------------------------------------------

def lqc_to_dict(gates, initial, algebra_label):
    """gates: sequence of GroupOp or explicit unitaries; initial: 'hw' or MomentVector."""
    encoded = []
    for gate in gates:
        if isinstance(gate, GroupOp):
            encoded.append({"type": "group_op", "l": int(gate.root_index),
                            "alpha": [float(gate.alpha.real), float(gate.alpha.imag)]})
        else:
            encoded.append({"type": "unitary", "matrix": _matrix_to_json(gate)})
    initial_enc = "hw" if isinstance(initial, str) else [float(v) for v in initial.values]
    return {"algebra": algebra_label, "initial": initial_enc, "gates": encoded}


def save_lqc(gates, initial, algebra_label, path):
    _dump(lqc_to_dict(gates, initial, algebra_label), path)


def load_lqc(path):
    data = _load(path)
    _require(data, ["algebra", "initial", "gates"], str(path))
    gates = []
    for k, entry in enumerate(data["gates"]):
        _require(entry, ["type"], f"{path}: gates[{k}]")
        if entry["type"] == "group_op":
            _require(entry, ["l", "alpha"], f"{path}: gates[{k}]")
            gates.append(GroupOp(entry["l"], complex(entry["alpha"][0], entry["alpha"][1])))
        elif entry["type"] == "unitary":
            _require(entry, ["matrix"], f"{path}: gates[{k}]")
            gates.append(_matrix_from_json(entry["matrix"], context=f"{path}: gates[{k}]"))
        else:
            raise ParseError(f"{path}: gates[{k}] has unknown type {entry['type']!r}")
    initial = data["initial"]
    if initial != "hw":
        if not isinstance(initial, list):
            raise ParseError(f"{path}: initial must be 'hw' or a list of moments")
        initial = MomentVector(values=np.array(initial, dtype=float), source="exact")
    return gates, initial, data["algebra"]


# ---------------------------------------------------------------------------
# Synthesis reports
# ---------------------------------------------------------------------------

def report_to_dict(report):
    budget = report.budget
    return {
        "algebra": report.algebra_label,
        "circuit": circuit_to_dict(report.ops, report.kind_tags, report.trace,
                                   report.algebra_label),
        "budget": {
            "epsilon": budget.epsilon,
            "delta": budget.delta,
            "eps_D": budget.eps_D,
            "eps_M": budget.eps_M,
            "Delta": budget.Delta,
            "O_norm": budget.O_norm,
            "Q": budget.Q,
            "K_prime_bound": budget.K_prime_bound,
            "c_D": budget.c_D,
            "c_M": budget.c_M,
        },
        "achieved_d": report.achieved_d,
        "K": report.total_ops,
        "K_prime": report.steps_jacobi,
        "weyl_reflections": report.steps_weyl,
        "moments_source": report.moments_source,
        "shots_per_observable": report.shots_per_observable,
        "shot_total": report.shot_total,
        "fidelity": report.fidelity,
        "distance": report.distance,
    }


def save_report(report, path):
    _dump(report_to_dict(report), path)
