"""Moment vectors and the Cartan-Weyl coefficient form of the target Hamiltonian.

The target Hamiltonian assembled from moments is F = sum_m <O_m> O_m; its
Cartan-Weyl coefficients are gamma_r on the CSA and iota_l on the roots,
with iota_l = <O_u> - i <O_v> for the root's partner pair (u, v), so that
F = sum_r gamma_r H_r + sum_l (iota_l E+_l + iota_l* E-_l).
"""

from dataclasses import dataclass, replace

import numpy as np

from .errors import LengthMismatch

RECONSTRUCTION_TOL = 1e-10


@dataclass(frozen=True)
class MomentVector:
    """Expectation values <O_m> (exact) or estimates (sampled).

    Values are stored untruncated even when shot noise pushes them slightly
    past ||O_m||; clipping happens only when a Hamiltonian is assembled.
    """

    values: np.ndarray
    source: str = "exact"
    shots: int = None
    seed: int = None

    def __post_init__(self):
        vals = np.array(self.values, dtype=float)
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)
        if self.source not in ("exact", "sampled"):
            raise ValueError("source must be 'exact' or 'sampled'")

    @property
    def purity(self):
        return float(np.dot(self.values, self.values))

    def __len__(self):
        return self.values.size


def purity(moments):
    """The algebra purity sum_m <O_m>^2; group-invariant, maximal on GCSs."""
    return moments.purity


@dataclass(frozen=True)
class CwDecomposition:
    """Cartan-Weyl coefficients (gamma_r, iota_l) of a Hamiltonian in the algebra."""

    gamma: np.ndarray
    iota: np.ndarray
    step_index: int = 0

    def __post_init__(self):
        g = np.array(self.gamma, dtype=float)
        i = np.array(self.iota, dtype=complex)
        g.setflags(write=False)
        i.setflags(write=False)
        object.__setattr__(self, "gamma", g)
        object.__setattr__(self, "iota", i)

    @property
    def coefficient_norm_sq(self):
        """Tr(F^2)/N in coefficient form; conserved under group conjugation."""
        return float(np.dot(self.gamma, self.gamma) + np.abs(self.iota).dot(np.abs(self.iota)))


def build_target(moments, algebra):
    """Cartan-Weyl coefficients of F = sum_m <O_m> O_m.

    Sampled estimates are clipped into [-||O_m||, ||O_m||] here (and only
    here); the raw moment vector stays auditable.
    """
    if len(moments) != algebra.dim:
        raise LengthMismatch(
            f"moment vector has length {len(moments)}, algebra dimension is {algebra.dim}"
        )
    values = np.asarray(moments.values, dtype=float)
    if moments.source == "sampled":
        bounds = algebra.observable_norms
        values = np.clip(values, -bounds, bounds)
    cw = algebra.cartan_weyl
    gamma = values[list(cw.csa_indices)]
    u = [p[0] for p in cw.pair_map]
    v = [p[1] for p in cw.pair_map]
    iota = values[u] - 1j * values[v]
    return CwDecomposition(gamma=gamma, iota=iota, step_index=0)


def offdiag_distance(decomp):
    """Squared distance to the CSA: d = sum_l |iota_l|^2."""
    return float(np.abs(decomp.iota).dot(np.abs(decomp.iota)))


def project_csa(decomp):
    """Diagonal part: keep gamma, zero every root coefficient."""
    return replace(decomp, iota=np.zeros_like(decomp.iota))


def assemble_operator(decomp, algebra):
    """Dense defining-representation matrix of a CwDecomposition."""
    cw = algebra.cartan_weyl
    csa_ops = cw.csa_ops(algebra.basis)
    out = np.einsum("r,rij->ij", decomp.gamma, csa_ops).astype(complex)
    part = np.einsum("l,lij->ij", decomp.iota, np.asarray(cw.raising_ops))
    return out + part + part.conj().T


def assemble_from_moments(moments, algebra, clip=None):
    """Dense matrix F = sum_m <O_m> O_m (clipping sampled estimates)."""
    values = np.asarray(moments.values, dtype=float)
    do_clip = moments.source == "sampled" if clip is None else clip
    if do_clip:
        bounds = algebra.observable_norms
        values = np.clip(values, -bounds, bounds)
    return np.einsum("m,mij->ij", values, np.asarray(algebra.basis.basis))


def decomposition_coefficients(decomp, algebra):
    """Length-M coefficient vector of a CwDecomposition over the orthogonal basis."""
    cw = algebra.cartan_weyl
    out = np.zeros(algebra.dim)
    out[list(cw.csa_indices)] = decomp.gamma
    for l, (u, v) in enumerate(cw.pair_map):
        out[u] = decomp.iota[l].real
        out[v] = -decomp.iota[l].imag
    return out


def decomposition_from_operator(matrix, algebra):
    """Project a defining-representation matrix onto Cartan-Weyl coefficients."""
    mats = np.asarray(algebra.basis.basis)
    coeffs = np.einsum("ij,mji->m", np.asarray(matrix, dtype=complex), mats) \
        / algebra.norm
    cw = algebra.cartan_weyl
    gamma = coeffs[list(cw.csa_indices)].real
    u = [p[0] for p in cw.pair_map]
    v = [p[1] for p in cw.pair_map]
    iota = coeffs[u].real - 1j * coeffs[v].real
    return CwDecomposition(gamma=gamma, iota=iota)
