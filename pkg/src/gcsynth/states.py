"""Exact dense-vector state engine on the defining representation.

Provides highest-weight state construction, group-element application,
exact expectations, seeded projective-measurement sampling, and the hidden
black-box source used to exercise the synthesis pipeline.
"""

from dataclasses import dataclass

import numpy as np

from .algebra import expi_hermitian
from .errors import NonHermitianObservable, NotUnique
from .moments import MomentVector

KERNEL_TOL = 1e-10
WEIGHT_TOL = 1e-8


@dataclass(frozen=True)
class GroupOp:
    """One displacement exponential exp{i(alpha E+_l + alpha* E-_l)}."""

    root_index: int
    alpha: complex

    def __post_init__(self):
        if not np.isfinite(self.alpha):
            raise ValueError("alpha must be finite")
        if self.root_index < 0:
            raise ValueError("root_index must be a valid 0-based root index")

    def inverse(self):
        return GroupOp(self.root_index, -self.alpha)


@dataclass(frozen=True)
class MeasurementRecord:
    """Outcome of Q projective measurements of one basis observable."""

    observable_index: int
    num_shots: int
    estimate: float
    shot_seed: int


def group_op_unitary(op, algebra):
    """Dense unitary of a GroupOp on the defining representation."""
    cw = algebra.cartan_weyl
    gen = op.alpha * cw.raising_ops[op.root_index] \
        + np.conj(op.alpha) * cw.lowering_ops[op.root_index]
    return expi_hermitian(gen)


def apply_group_op(state, op, algebra):
    """Apply one group exponential to a state vector; norm is preserved."""
    out = group_op_unitary(op, algebra) @ np.asarray(state, dtype=complex)
    return out / np.linalg.norm(out)


def apply_circuit(state, ops, algebra):
    """Apply a sequence of GroupOps in list order (ops[0] acts first)."""
    out = np.asarray(state, dtype=complex)
    for op in ops:
        out = apply_group_op(out, op, algebra)
    return out


_HW_CACHE = {}


def highest_weight_state(algebra):
    """Construct the highest-weight state and its CSA weights.

    The state is the unit vector annihilated by every raising operator and
    a simultaneous CSA eigenvector.  On representations with more than one
    irreducible component the joint kernel contains one candidate per
    component; candidates are refined into weight vectors and the one with
    the lexicographically largest weight vector is returned (all candidates
    are dominant, so any choice is algebraically consistent; the tie-break
    makes it deterministic).

    Returns
    -------
    (ndarray, ndarray)
        Unit state vector and the weight vector w(H_r).

    Raises
    ------
    NotUnique
        If no dominant candidate exists (inconsistent root labeling) or two
        candidates carry identical weights (e.g. repeated irreducible
        blocks).
    """
    cached = _HW_CACHE.get(algebra)
    if cached is not None:
        return cached

    cw = algebra.cartan_weyl
    raising = np.asarray(cw.raising_ops)
    kernel_op = np.einsum("lji,ljk->ik", raising.conj(), raising)
    evals, evecs = np.linalg.eigh(kernel_op)
    scale = max(1.0, float(evals.max()))
    kernel = evecs[:, evals <= KERNEL_TOL * scale]
    if kernel.shape[1] == 0:
        raise NotUnique("no state is annihilated by all raising operators")

    candidates = _split_into_weight_vectors(kernel, algebra)
    mu = cw.mu_matrix
    etas = cw.etas
    dominant = [(vec, w) for vec, w in candidates
                if (mu @ w / etas >= -WEIGHT_TOL).all()]
    if not dominant:
        raise NotUnique("no annihilated weight vector is dominant; check the root labeling")
    dominant.sort(key=lambda item: tuple(-item[1]))
    if len(dominant) > 1 and np.allclose(dominant[0][1], dominant[1][1], atol=WEIGHT_TOL):
        raise NotUnique(
            f"{len(dominant)} annihilated weight vectors share the top weight; "
            "the representation contains repeated components"
        )
    state, weights = dominant[0]

    for l, e_plus in enumerate(raising):
        resid = np.linalg.norm(e_plus @ state)
        if resid > KERNEL_TOL * max(1.0, np.linalg.norm(e_plus)):
            raise NotUnique(f"selected state is not annihilated by E+_{l} (residual {resid:.2e})")

    state = state.copy()
    weights = weights.copy()
    state.setflags(write=False)
    weights.setflags(write=False)
    if len(_HW_CACHE) >= 128:
        _HW_CACHE.clear()
    _HW_CACHE[algebra] = (state, weights)
    return state, weights


def _split_into_weight_vectors(subspace, algebra):
    """Diagonalize the CSA action within a subspace; return (vector, weights) pairs."""
    cw = algebra.cartan_weyl
    csa_ops = cw.csa_ops(algebra.basis)
    k = subspace.shape[1]
    if k == 1:
        vecs = [subspace[:, 0]]
    else:
        # A fixed incommensurate combination splits distinct weights at once.
        coeffs = 1.0 / np.sqrt(np.arange(2, cw.rank_R + 2, dtype=float))
        combo = np.einsum("r,rij->ij", coeffs, csa_ops)
        sub = subspace.conj().T @ combo @ subspace
        _, v = np.linalg.eigh((sub + sub.conj().T) / 2.0)
        vecs = [subspace @ v[:, i] for i in range(k)]
    out = []
    for vec in vecs:
        vec = vec / np.linalg.norm(vec)
        weights = np.empty(cw.rank_R)
        for r, h in enumerate(csa_ops):
            hv = h @ vec
            w = np.real(np.vdot(vec, hv))
            if np.linalg.norm(hv - w * vec) > WEIGHT_TOL * max(1.0, float(np.abs(h).max())):
                raise NotUnique("annihilated subspace does not split into weight vectors")
            weights[r] = w
        out.append((vec, weights))
    return out


def expectation(state, observable):
    """<state| observable |state> for a Hermitian observable; returns a real scalar."""
    obs = np.asarray(observable, dtype=complex)
    if np.abs(obs - obs.conj().T).max() > 1e-12 * (1.0 + np.abs(obs).max()):
        raise NonHermitianObservable("expectation requires a Hermitian observable")
    psi = np.asarray(state, dtype=complex)
    val = np.vdot(psi, obs @ psi)
    return float(val.real)


def exact_moments(state, algebra):
    """Exact expectation values of all basis observables."""
    psi = np.asarray(state, dtype=complex)
    vals = np.einsum("i,mij,j->m", psi.conj(), np.asarray(algebra.basis.basis), psi)
    return MomentVector(values=vals.real, source="exact")


def derive_seed(seed, index):
    """Stable 64-bit child seed for stream `index` of master `seed`."""
    ss = np.random.SeedSequence([int(seed) & 0xFFFFFFFFFFFFFFFF, int(index)])
    return int(ss.generate_state(1, np.uint64)[0])


def _rng(seed):
    # Counter-based generator: reproducible and cheap to fork by reseeding.
    return np.random.Generator(np.random.Philox(key=int(seed) & 0xFFFFFFFFFFFFFFFF))


def sample_measurements(state, observable, shots, seed, observable_index=0):
    """Simulate Q projective measurements of one observable.

    The observable is eigendecomposed once; Born weights of degenerate
    eigenvalues are pooled per eigenspace, so the outcome distribution never
    depends on an arbitrary eigenvector choice.  The estimate is the sample
    mean of Q i.i.d. eigenvalue draws, realized through a multinomial count
    over the distinct outcomes.

    Returns
    -------
    MeasurementRecord
    """
    if shots < 1:
        raise ValueError("shots must be >= 1")
    obs = np.asarray(observable, dtype=complex)
    if np.abs(obs - obs.conj().T).max() > 1e-12 * (1.0 + np.abs(obs).max()):
        raise NonHermitianObservable("sampling requires a Hermitian observable")
    evals, evecs = np.linalg.eigh(obs)
    amps = evecs.conj().T @ np.asarray(state, dtype=complex)
    weights = np.abs(amps) ** 2

    scale = max(1.0, float(np.abs(evals).max()))
    outcomes, probs = [], []
    idx = 0
    while idx < evals.size:
        stop = idx + 1
        while stop < evals.size and evals[stop] - evals[idx] <= 1e-10 * scale:
            stop += 1
        outcomes.append(float(evals[idx:stop].mean()))
        probs.append(float(weights[idx:stop].sum()))
        idx = stop
    probs = np.clip(np.array(probs), 0.0, None)
    probs /= probs.sum()

    counts = _rng(seed).multinomial(int(shots), probs)
    estimate = float(np.dot(counts, outcomes) / shots)
    return MeasurementRecord(
        observable_index=int(observable_index),
        num_shots=int(shots),
        estimate=estimate,
        shot_seed=int(seed),
    )


def sample_all_moments(state, algebra, shots, seed):
    """Sampled estimates of every basis observable, with per-observable derived seeds."""
    mats = np.asarray(algebra.basis.basis)
    values = np.empty(algebra.dim)
    for m in range(algebra.dim):
        rec = sample_measurements(state, mats[m], shots, derive_seed(seed, m),
                                  observable_index=m)
        values[m] = rec.estimate
    return MomentVector(values=values, source="sampled", shots=int(shots), seed=int(seed))


class HiddenGcs:
    """Black-box GCS preparation.

    Draws `num_ops` random group operations (alpha from a standard complex
    Gaussian), applies them to the highest-weight state, and hides the
    result.  The synthesis pipeline may only request measurement samples;
    the exact-moment and fidelity oracles exist for test harnesses.
    """

    def __init__(self, algebra, seed, num_ops):
        if num_ops < 0:
            raise ValueError("num_ops must be >= 0")
        self.algebra = algebra
        self.seed = int(seed)
        self.num_ops = int(num_ops)
        rng = _rng(derive_seed(seed, 0x9E3779B9))
        num_roots = algebra.cartan_weyl.num_roots_L
        ops = []
        for _ in range(self.num_ops):
            l = int(rng.integers(num_roots))
            alpha = complex(rng.standard_normal(), rng.standard_normal()) / np.sqrt(2.0)
            ops.append(GroupOp(l, alpha))
        self._ops = tuple(ops)
        hw, _ = highest_weight_state(algebra)
        self._state = apply_circuit(hw, ops, algebra)
        self._state.setflags(write=False)

    def sample_moments(self, shots, seed=None):
        """Shot-sampled moment estimates; deterministic given (self.seed, seed)."""
        base = self.seed if seed is None else seed
        return sample_all_moments(self._state, self.algebra, shots, base)

    def exact_moments(self):
        """Exact moments of the hidden state (verification oracle)."""
        return exact_moments(self._state, self.algebra)

    def reference_state(self):
        """The hidden state itself.  Test harness only."""
        return self._state.copy()

    @property
    def preparation_ops(self):
        """The random ops that built the hidden state.  Test harness only."""
        return self._ops

    def fidelity(self, candidate_state):
        return float(abs(np.vdot(self._state, np.asarray(candidate_state, dtype=complex))))

    def distance(self, candidate_state):
        """Euclidean distance minimized over a global phase."""
        return phase_min_distance(self._state, candidate_state)

    def verify_circuit(self, ops):
        """Fidelity and phase-minimized distance of `ops` applied to |hw>."""
        hw, _ = highest_weight_state(self.algebra)
        cand = apply_circuit(hw, ops, self.algebra)
        return self.fidelity(cand), self.distance(cand)


def hidden_gcs(algebra, seed, num_ops):
    """Create a hidden-state handle (see HiddenGcs)."""
    return HiddenGcs(algebra, seed, num_ops)


def state_fidelity(a, b):
    return float(abs(np.vdot(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))))


def phase_min_distance(a, b):
    """min over phi of || a - e^{i phi} b || for unit vectors."""
    return float(np.sqrt(max(0.0, 2.0 - 2.0 * state_fidelity(a, b))))
