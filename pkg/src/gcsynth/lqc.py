"""Classical simulation of Lie-algebraic quantum circuits.

Gates act on the moment vector through their adjoint action
d[m, m'] = Tr(O_m' T^dag O_m T)/N, so a circuit of length L propagates the
M expectation values in O(L M^2) after the actions are built.  Gates given
as explicit unitaries are accepted only when conjugation keeps the algebra
span; the final state of a valid trajectory stays a GCS, certified by its
purity, and can be handed back to the synthesis pipeline.
"""

from dataclasses import dataclass

import numpy as np

from .errors import LeavesAlgebraSpan, NotAGcs
from .moments import MomentVector
from .pipeline import synthesize
from .states import GroupOp, group_op_unitary, highest_weight_state, exact_moments

SPAN_TOL = 1e-8


@dataclass(frozen=True)
class AdjointAction:
    """Real matrix d with T^dag O_m T = sum_m' d[m, m'] O_m'."""

    matrix: np.ndarray
    descriptor: str = "gate"

    def __post_init__(self):
        mat = np.array(self.matrix, dtype=float)
        mat.setflags(write=False)
        object.__setattr__(self, "matrix", mat)


@dataclass(frozen=True)
class LqcCircuit:
    """Ordered gate actions plus the initial moment vector."""

    actions: tuple
    initial: MomentVector

    def __post_init__(self):
        object.__setattr__(self, "actions", tuple(self.actions))
        dims = {a.matrix.shape for a in self.actions}
        if dims and dims != {(len(self.initial), len(self.initial))}:
            raise ValueError("all gate actions must share the algebra dimension")


def adjoint_action_of(gate, algebra):
    """Adjoint action of a gate on the moment vector.

    Parameters
    ----------
    gate : GroupOp or (rep_dim, rep_dim) unitary ndarray
        Group operations always qualify; explicit unitaries must keep the
        algebra span under conjugation (residual below 1e-8), which is the
        classical-simulability requirement.

    Raises
    ------
    LeavesAlgebraSpan
    """
    if isinstance(gate, GroupOp):
        unitary = group_op_unitary(gate, algebra)
        descriptor = f"group_op(l={gate.root_index})"
    else:
        unitary = np.asarray(gate, dtype=complex)
        if unitary.shape != (algebra.rep_dim, algebra.rep_dim):
            raise ValueError("unitary has the wrong dimension for this representation")
        if np.abs(unitary.conj().T @ unitary - np.eye(algebra.rep_dim)).max() > 1e-10:
            raise ValueError("gate matrix is not unitary")
        descriptor = "unitary"
    mats = np.asarray(algebra.basis.basis)
    conjugated = np.einsum("ji,mjk,kl->mil", unitary.conj(), mats, unitary)
    d_complex = np.einsum("mij,nji->mn", conjugated, mats) / algebra.norm
    recon = np.einsum("mn,nij->mij", d_complex, mats)
    resid = np.linalg.norm(conjugated - recon, axis=(1, 2))
    scale = max(1.0, float(np.linalg.norm(mats, axis=(1, 2)).max()))
    if resid.max() > SPAN_TOL * scale or np.abs(d_complex.imag).max() > SPAN_TOL:
        raise LeavesAlgebraSpan(
            f"conjugation leaves the algebra span (worst residual {resid.max():.2e})"
        )
    return AdjointAction(matrix=d_complex.real, descriptor=descriptor)


def propagate(circuit):
    """Moment vector after the whole circuit: moments_l = d^(l) moments_(l-1)."""
    values = np.asarray(circuit.initial.values, dtype=float)
    for action in circuit.actions:
        values = action.matrix @ values
    return MomentVector(values=values, source=circuit.initial.source,
                        shots=circuit.initial.shots, seed=circuit.initial.seed)


def trajectory(circuit):
    """Moment vectors after each gate (initial first); length = gates + 1."""
    out = [circuit.initial]
    values = np.asarray(circuit.initial.values, dtype=float)
    for action in circuit.actions:
        values = action.matrix @ values
        out.append(MomentVector(values=values, source=circuit.initial.source))
    return out


def gcs_certificate(moments, algebra, tol=1e-8):
    """Whether the moments carry the full orbit purity; returns (ok, deficit)."""
    _, weights = highest_weight_state(algebra)
    p_h = float(np.dot(weights, weights))
    deficit = p_h - moments.purity
    return bool(abs(deficit) <= tol * p_h), float(deficit)


def hw_moments(algebra):
    """Exact moments of the highest-weight state (the canonical LQC input)."""
    hw, _ = highest_weight_state(algebra)
    return exact_moments(hw, algebra)


def final_state_query(moments, algebra, budget):
    """Recover a preparation circuit for the final state of an LQC trajectory.

    Requires the purity certificate to pass; delegates to the synthesis
    pipeline with the propagated (exact) moments.
    """
    ok, deficit = gcs_certificate(moments, algebra)
    if not ok:
        raise NotAGcs(f"purity deficit {deficit:.3e}; the state left the GCS orbit")
    return synthesize(moments, algebra, budget)
