"""Weyl-reflection mapping from a weight state to the highest-weight state.

A reflection in root l is the group operation exp{i(alpha E+_l + alpha* E-_l)}
with |alpha| = pi / sqrt(2 eta_l): a pi rotation about an equatorial axis of
the root's su(2), which maps Sz_l -> -Sz_l and therefore sends a weight state
to the state with the Weyl-reflected weight.  Reflections are chosen
greedily among roots where the current weight sits below the equator
(m_l < 0), taking the one that most increases the overlap with the
highest weight; the secondary functional sum_l m_l strictly increases at
every such reflection, which guarantees termination on any weight in the
Weyl orbit of the highest weight.
"""

from dataclasses import dataclass

import numpy as np

from .algebra import expi_hermitian
from .errors import DegenerateTop, NoProgress, NotAWeightState
from .states import GroupOp, highest_weight_state, state_fidelity

DEGENERACY_REL_TOL = 1e-8
WEIGHT_RESID_TOL = 1e-9
PROGRESS_TOL = 1e-10
M_NEGATIVE_TOL = 1e-9


@dataclass(frozen=True)
class WeightStateInfo:
    """A simultaneous CSA eigenvector with its weights and selecting eigenvalue."""

    state: np.ndarray
    weights: np.ndarray
    eigenvalue: float
    gap: float

    def __post_init__(self):
        s = np.array(self.state, dtype=complex)
        w = np.array(self.weights, dtype=float)
        s.setflags(write=False)
        w.setflags(write=False)
        object.__setattr__(self, "state", s)
        object.__setattr__(self, "weights", w)


def top_weight_state(csa_decomp, algebra):
    """Eigenvector of largest eigenvalue of the CSA element sum_r gamma_r H_r.

    Raises
    ------
    DegenerateTop
        When the gap to the second eigenvalue is below 1e-8 of the operator
        norm; the synthesis problem is ill-posed for such inputs.
    """
    if np.abs(csa_decomp.iota).max(initial=0.0) > 1e-10 * (1.0 + np.abs(csa_decomp.gamma).max(initial=0.0)):
        raise ValueError("top_weight_state expects a CSA-projected decomposition (iota = 0)")
    cw = algebra.cartan_weyl
    csa_ops = cw.csa_ops(algebra.basis)
    f_csa = np.einsum("r,rij->ij", csa_decomp.gamma, csa_ops)
    evals, evecs = np.linalg.eigh(f_csa)
    top, second = evals[-1], evals[-2]
    norm = max(abs(evals[0]), abs(evals[-1]), 1e-300)
    gap = float(top - second)
    if gap < DEGENERACY_REL_TOL * norm:
        raise DegenerateTop(
            f"top eigenvalue gap {gap:.3e} is below {DEGENERACY_REL_TOL:.0e} * ||F||"
        )
    state = evecs[:, -1]
    weights = _measure_weights(state, csa_ops)
    return WeightStateInfo(state=state, weights=weights, eigenvalue=float(top), gap=gap)


def _measure_weights(state, csa_ops, tol=WEIGHT_RESID_TOL):
    weights = np.empty(len(csa_ops))
    for r, h in enumerate(csa_ops):
        hv = h @ state
        w = float(np.real(np.vdot(state, hv)))
        if np.linalg.norm(hv - w * state) > tol * max(1.0, float(np.abs(h).max())):
            raise NotAWeightState(f"state is not an eigenvector of H_{r}")
        weights[r] = w
    return weights


def reflection_alpha(algebra, root_index):
    """Exponent alpha realizing the pi rotation for one root.

    |alpha| = pi / sqrt(2 eta); the phase is picked from {1, i, -1, -i} by
    checking which exponent best realizes Sz -> -Sz under conjugation (all
    four are exact in theory; the check pins a deterministic choice and
    guards against sign-convention drift in loaded algebra data).
    """
    cw = algebra.cartan_weyl
    triple = cw.root_triples[root_index]
    magnitude = np.pi / np.sqrt(2.0 * triple.eta)
    e_plus = cw.raising_ops[root_index]
    e_minus = cw.lowering_ops[root_index]
    best = None
    for phase in (1.0, 1j, -1.0, -1j):
        alpha = magnitude * phase
        w = expi_hermitian(alpha * e_plus + np.conj(alpha) * e_minus)
        resid = float(np.linalg.norm(w.conj().T @ triple.sz @ w + triple.sz))
        if best is None or resid < best[0] - 1e-12:
            best = (resid, alpha)
    return best[1]


def reflect_to_highest_weight(info, algebra):
    """Weyl reflections connecting the highest-weight state to `info.state`.

    Returns
    -------
    list of GroupOp
        Preparation segment: applying the returned ops to |hw> in list order
        reproduces info.state up to a global phase.

    Raises
    ------
    NotAWeightState
        info.state is not a simultaneous CSA eigenvector.
    NoProgress
        No reflection raises the state further and it is not |hw|: the
        weight lies outside the orbit of the highest weight (the input was
        not a GCS).
    """
    cw = algebra.cartan_weyl
    csa_ops = cw.csa_ops(algebra.basis)
    state = np.asarray(info.state, dtype=complex)
    weights = _measure_weights(state, csa_ops, tol=1e-8)

    hw, w_hw = highest_weight_state(algebra)
    mu = cw.mu_matrix
    etas = cw.etas
    w_scale = max(1.0, float(np.abs(w_hw).max()))
    applied = []  # (root, alpha) moving the state toward |hw>

    for _ in range(4 * cw.num_roots_L + 1):
        m_vals = mu @ weights / etas
        candidates = np.nonzero(m_vals < -M_NEGATIVE_TOL * w_scale)[0]
        if candidates.size == 0:
            break
        best = None
        for l in candidates:
            alpha = reflection_alpha(algebra, int(l))
            w_op = expi_hermitian(alpha * cw.raising_ops[l] + np.conj(alpha) * cw.lowering_ops[l])
            new_state = w_op @ state
            new_weights = _measure_weights(new_state, csa_ops)
            overlap_gain = float(np.dot(w_hw, new_weights - weights))
            height_gain = float(np.sum(mu @ new_weights / etas) - np.sum(m_vals))
            key = (overlap_gain, height_gain, -int(l))
            if best is None or key > best[0]:
                best = (key, int(l), alpha, new_state, new_weights)
        (overlap_gain, height_gain, _), l, alpha, state, weights = best
        if height_gain <= PROGRESS_TOL or overlap_gain < -PROGRESS_TOL * w_scale:
            raise NoProgress(
                "no reflection increases the weight overlap; state is outside the GCS orbit"
            )
        applied.append((l, alpha))

    if state_fidelity(state, hw) < 1.0 - 1e-9:
        raise NoProgress(
            "reflections exhausted without reaching the highest-weight state; "
            "the input weight is outside the orbit"
        )
    # state = W_J ... W_1 |w0>, so |w0> = W_1^† ... W_J^† |hw> applied last-first.
    return [GroupOp(l, -alpha) for l, alpha in reversed(applied)]
