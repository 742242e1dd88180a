"""Semisimple Lie algebras as Hermitian matrix bases.

An algebra is represented by an orthogonal basis of Hermitian matrices
O_1..O_M on a faithful representation, with Tr(O_m O_m') = N delta_mm'.
Structure constants are stored under the physicists' bracket
[x, y] = i(xy - yx), which keeps them real over Hermitian elements.
Root-triple and rotation computations use the plain commutator xy - yx,
under which the su(2) relations [S+, S-] = Sz and [Sz, S+-] = +-S+- hold
literally.

The basis is ordered Cartan-Weyl style: CSA generators H_1..H_R first,
then for each root l a pair of Hermitian partners (O_u, O_v) with

    O_u = E+ + E-,      O_v = i(E- - E+),

so the raising operator is recovered as E+ = (O_u + i O_v) / 2.
"""

from dataclasses import dataclass, field
from functools import cached_property
import hashlib

import numpy as np

from .errors import (
    BasisNotClosed,
    CsaNotAbelian,
    EtaNotPositiveAfterSwap,
    GcsynthError,
    GramNotDiagonal,
    KillingFormDegenerate,
    LinearlyDependentBasis,
    NonHermitianInput,
    RootPairNotEigenvector,
    ZeroRootBracket,
)

# Structural tolerances (double precision, rep_dim <= 64).
HERMITICITY_TOL = 1e-12
ORTHOGONALITY_TOL = 1e-10
STRUCTURE_IMAG_TOL = 1e-10
CLOSURE_TOL = 1e-8
KILLING_COND_TOL = 1e-8
CSA_COMMUTE_TOL = 1e-12
EIGENVECTOR_TOL = 1e-10
SU2_TOL = 1e-10
ADJOINT_TOL = 1e-9


def commutator(a, b):
    """Plain matrix commutator ab - ba."""
    return a @ b - b @ a


def i_bracket(a, b):
    """The stored-bracket convention i(ab - ba); real coefficients over Hermitian bases."""
    return 1j * (a @ b - b @ a)


def trace_pair(a, b):
    """Tr(a b) without forming the product."""
    return np.einsum("ij,ji->", a, b)


def expi_hermitian(h):
    """exp(i h) for Hermitian h, via eigendecomposition (exact at desk scale)."""
    w, v = np.linalg.eigh(h)
    return (v * np.exp(1j * w)) @ v.conj().T


def _freeze(arr):
    out = np.array(arr)
    out.setflags(write=False)
    return out


def _is_hermitian(mat, tol=HERMITICITY_TOL):
    scale = 1.0 + np.abs(mat).max()
    return np.abs(mat - mat.conj().T).max() <= tol * scale


@dataclass(frozen=True, eq=False)
class AlgebraBasis:
    """Orthogonal Hermitian basis with structure constants.

    Attributes
    ----------
    dim_M : int
        Algebra dimension M.
    rep_dim : int
        Dimension of the faithful representation.
    basis : ndarray, shape (M, rep_dim, rep_dim)
        Hermitian basis matrices with Tr(O_m O_m') = normalization_N * delta.
    normalization_N : float
        Common trace norm of the basis elements.
    structure_constants : ndarray, shape (M, M, M)
        Real tensor f with [O_m, O_m'] = sum_k f[m, m', k] O_k under the
        bracket recorded in `bracket_convention`.
    """

    dim_M: int
    rep_dim: int
    basis: np.ndarray
    normalization_N: float
    structure_constants: np.ndarray
    bracket_convention: str = "i-commutator"

    def __post_init__(self):
        object.__setattr__(self, "basis", _freeze(self.basis))
        object.__setattr__(self, "structure_constants", _freeze(self.structure_constants))

    @cached_property
    def observable_norms(self):
        """Spectral norms of the basis elements (max |eigenvalue| each)."""
        norms = np.array([np.abs(np.linalg.eigvalsh(o)).max() for o in self.basis])
        norms.setflags(write=False)
        return norms

    def fingerprint(self):
        """Short content hash of the basis, for artifact cross-checks."""
        digest = hashlib.sha256(np.round(np.asarray(self.basis), 10).tobytes())
        return digest.hexdigest()[:12]


@dataclass(frozen=True, eq=False)
class RootTriple:
    """The su(2) triple attached to one root.

    Z = [E+, E-] = sum_r mu[r] H_r lies in the CSA, and [Z, E+] = eta E+ with
    eta > 0.  The normalized operators Sz = Z/eta, S+- = E+-/sqrt(eta),
    Sx = (S+ + S-)/sqrt(2), Sy = i(S- - S+)/sqrt(2) obey the standard
    commutation relations in any representation.
    """

    root_index: int
    mu: np.ndarray
    eta: float
    sz: np.ndarray
    sx: np.ndarray
    sy: np.ndarray

    def __post_init__(self):
        for name in ("mu", "sz", "sx", "sy"):
            object.__setattr__(self, name, _freeze(getattr(self, name)))


@dataclass(frozen=True, eq=False)
class CartanWeylData:
    """Cartan-Weyl split of an orthogonal basis.

    `pair_map[l] = (u, v)` names the two basis indices housing E+ + E- and
    i(E- - E+) for root l; `raising_ops[l]` is E+_l on the defining
    representation and `lowering_ops[l]` its adjoint.
    """

    rank_R: int
    num_roots_L: int
    csa_indices: tuple
    raising_ops: np.ndarray
    lowering_ops: np.ndarray
    pair_map: tuple
    root_triples: tuple

    def __post_init__(self):
        object.__setattr__(self, "raising_ops", _freeze(self.raising_ops))
        object.__setattr__(self, "lowering_ops", _freeze(self.lowering_ops))
        object.__setattr__(self, "csa_indices", tuple(self.csa_indices))
        object.__setattr__(self, "pair_map", tuple(tuple(p) for p in self.pair_map))
        object.__setattr__(self, "root_triples", tuple(self.root_triples))

    def csa_ops(self, basis):
        """CSA generator matrices H_1..H_R drawn from `basis`."""
        return basis.basis[list(self.csa_indices)]

    @property
    def mu_matrix(self):
        """Stacked root coefficients, shape (L, R): Z_l = sum_r mu[l, r] H_r."""
        return np.array([t.mu for t in self.root_triples])

    @property
    def etas(self):
        return np.array([t.eta for t in self.root_triples])


@dataclass(frozen=True, eq=False)
class AdjointRep:
    """Hermitian form of the adjoint representation.

    matrices[m] is the M x M Hermitian image of O_m; the map preserves the
    stored-bracket structure constants exactly, so coefficient extraction
    and group conjugation work in this representation with the same formulas
    as in the defining one.  Tr(matrices[m] matrices[m']) = norm_adj * delta.
    """

    matrices: np.ndarray
    norm_adj: float
    csa_images: np.ndarray = None
    raising_images: np.ndarray = None
    lowering_images: np.ndarray = None

    def __post_init__(self):
        object.__setattr__(self, "matrices", _freeze(self.matrices))
        for name in ("csa_images", "raising_images", "lowering_images"):
            val = getattr(self, name)
            if val is not None:
                object.__setattr__(self, name, _freeze(val))


def orthonormalize_basis(raw_basis, target_N=None):
    """Rescale a Hermitian, trace-orthogonal set into an AlgebraBasis.

    Only per-element scaling is performed.  A non-diagonal Gram matrix is
    rejected rather than rotated, since rotating would scramble the caller's
    Cartan-Weyl labeling.

    Parameters
    ----------
    raw_basis : sequence of (d, d) arrays
        Hermitian, linearly independent, pairwise trace-orthogonal matrices.
    target_N : float, optional
        Desired Tr(O_m O_m).  When omitted, an already-uniform Gram diagonal
        is kept as-is; otherwise the elements are scaled to N = rep_dim.

    Returns
    -------
    AlgebraBasis
        With structure constants derived and semisimplicity verified.
    """
    mats = np.array([np.asarray(m, dtype=complex) for m in raw_basis])
    if mats.ndim != 3 or mats.shape[1] != mats.shape[2]:
        raise ValueError("basis must be a sequence of square matrices of equal size")
    dim_m, rep_dim = mats.shape[0], mats.shape[1]

    for k, mat in enumerate(mats):
        if not _is_hermitian(mat):
            raise NonHermitianInput(f"basis element {k} is not Hermitian")

    gram = np.einsum("mij,nji->mn", mats, mats)
    if np.abs(gram.imag).max() > 1e-10 * (1.0 + np.abs(gram.real).max()):
        raise NonHermitianInput("Gram matrix has imaginary part; inputs are inconsistent")
    gram = gram.real
    diag = np.diag(gram).copy()
    if diag.min() <= 1e-12 * max(1.0, diag.max()):
        raise LinearlyDependentBasis("a basis element has (numerically) zero trace norm")
    off = gram - np.diag(diag)
    limit = ORTHOGONALITY_TOL * np.sqrt(np.outer(diag, diag))
    if (np.abs(off) > np.maximum(limit, 1e-14)).any():
        worst = np.abs(off / np.sqrt(np.outer(diag, diag))).max()
        raise GramNotDiagonal(
            f"basis is not trace-orthogonal (worst relative overlap {worst:.2e}); "
            "only rescaling is supported"
        )

    if target_N is not None:
        norm = float(target_N)
        if norm <= 0:
            raise ValueError("target_N must be positive")
    elif np.allclose(diag, diag[0], rtol=ORTHOGONALITY_TOL, atol=0.0):
        norm = float(diag.mean())
    else:
        norm = float(rep_dim)
    mats = mats * np.sqrt(norm / diag)[:, None, None]

    f = _structure_constants(mats, norm)
    _check_killing(f)
    return AlgebraBasis(
        dim_M=dim_m,
        rep_dim=rep_dim,
        basis=mats,
        normalization_N=norm,
        structure_constants=f,
    )


def _structure_constants(mats, norm):
    """f[m, m', k] = Tr([O_m, O_m'] O_k) / N under the i-commutator, with closure check.

    Works one row of brackets at a time so peak memory stays at O(M d^2)
    rather than O(M^2 d^2).
    """
    dim_m, rep_dim = mats.shape[0], mats.shape[1]
    # Flattened views let BLAS carry the trace contractions:
    # Tr(B O_k) = vec(B) . vec(O_k^T).
    flat = mats.reshape(dim_m, rep_dim * rep_dim)
    flat_t = np.transpose(mats, (0, 2, 1)).reshape(dim_m, rep_dim * rep_dim)
    f = np.empty((dim_m, dim_m, dim_m))
    worst_imag = 0.0
    worst_resid = 0.0
    worst_pair = (0, 0)
    bracket_scale = norm
    for m in range(dim_m):
        brackets = 1j * (mats[m] @ mats - mats @ mats[m])  # (M, d, d)
        bflat = brackets.reshape(dim_m, rep_dim * rep_dim)
        row = (bflat @ flat_t.T) / norm
        worst_imag = max(worst_imag, float(np.abs(row.imag).max()))
        f[m] = row.real
        recon = f[m] @ flat
        resid = np.linalg.norm(bflat - recon, axis=1)
        bracket_scale = max(bracket_scale, float(np.linalg.norm(bflat, axis=1).max()))
        if resid.max() > worst_resid:
            worst_resid = float(resid.max())
            worst_pair = (m, int(resid.argmax()))
    if worst_imag > STRUCTURE_IMAG_TOL * (1.0 + np.abs(f).max()):
        raise BasisNotClosed("structure constants have a large imaginary part")
    if worst_resid > CLOSURE_TOL * bracket_scale:
        m, n = worst_pair
        raise BasisNotClosed(
            f"[O_{m}, O_{n}] leaves the basis span (residual {worst_resid:.2e})"
        )
    return f


def _check_killing(f):
    """Semisimplicity witness: Killing form from structure constants is nondegenerate."""
    killing = -np.einsum("mab,nab->mn", f, f)
    svals = np.linalg.svd(killing, compute_uv=False)
    if svals.max() == 0.0 or svals.min() <= KILLING_COND_TOL * svals.max():
        raise KillingFormDegenerate(
            "Killing form is singular; the basis does not span a semisimple algebra"
        )
    return killing


def derive_structure(basis, cw=None):
    """Recompute structure constants and build the adjoint representation.

    The adjoint matrices are taken in Hermitian form: with bar(O_m) the real
    matrix of ad(O_m) over basis coefficients, matrices[m] = -i bar(O_m) is
    Hermitian and satisfies the same stored-bracket relations and (up to the
    constant norm_adj) the same orthogonality as the defining basis.

    Parameters
    ----------
    basis : AlgebraBasis
    cw : CartanWeylData, optional
        When given, adjoint images of H_r and E+-_l are attached.

    Returns
    -------
    (ndarray, AdjointRep)
        The structure constants and the adjoint representation.
    """
    f = _structure_constants(np.asarray(basis.basis), basis.normalization_N)
    return f, _adjoint_from_constants(f, basis.dim_M, cw)


def _adjoint_from_constants(f, dim_m, cw=None):
    # bar(O_m)[k, m'] = f[m, m', k]; Hermitian form is -i times that.
    adj = -1j * np.transpose(f, (0, 2, 1)).astype(complex)
    gram = np.einsum("mij,nji->mn", adj, adj).real
    norm_adj = float(np.trace(gram) / dim_m)
    kwargs = {}
    if cw is not None:
        csa_images = adj[list(cw.csa_indices)]
        raising = np.array([(adj[u] + 1j * adj[v]) / 2.0 for u, v in cw.pair_map])
        kwargs = {
            "csa_images": csa_images,
            "raising_images": raising,
            "lowering_images": np.conj(np.transpose(raising, (0, 2, 1))),
        }
    return AdjointRep(matrices=adj, norm_adj=norm_adj, **kwargs)


def build_cartan_weyl(basis, csa_indices, root_pairs):
    """Assemble and validate the Cartan-Weyl split of an orthogonal basis.

    Parameters
    ----------
    basis : AlgebraBasis
    csa_indices : sequence of int
        Positions of the mutually commuting H_1..H_R in the basis.
    root_pairs : sequence of (int, int)
        Per root, the basis indices (u, v) with O_u = E+ + E- and
        O_v = i(E- - E+); equivalently E+ = (O_u + i O_v)/2.

    Returns
    -------
    CartanWeylData
        With per-root su(2) triples attached.

    Raises
    ------
    CsaNotAbelian, RootPairNotEigenvector, ZeroRootBracket,
    EtaNotPositiveAfterSwap
    """
    csa_indices = tuple(int(i) for i in csa_indices)
    pair_map = tuple((int(u), int(v)) for u, v in root_pairs)
    rank = len(csa_indices)
    num_roots = len(pair_map)
    if 2 * num_roots + rank != basis.dim_M:
        raise ValueError(
            f"index bookkeeping is off: M={basis.dim_M} but R={rank}, L={num_roots}"
        )
    used = list(csa_indices) + [i for p in pair_map for i in p]
    if sorted(used) != list(range(basis.dim_M)):
        raise ValueError("csa_indices and root_pairs must partition the basis indices")

    mats = np.asarray(basis.basis)
    csa_ops = mats[list(csa_indices)]
    scale = 1.0 + max(float(np.abs(h).max()) for h in csa_ops)
    for r in range(rank):
        for s in range(r + 1, rank):
            resid = np.abs(commutator(csa_ops[r], csa_ops[s])).max()
            if resid > CSA_COMMUTE_TOL * scale * scale:
                raise CsaNotAbelian(f"H_{r} and H_{s} do not commute (residual {resid:.2e})")

    raising = np.array([(mats[u] + 1j * mats[v]) / 2.0 for u, v in pair_map])
    lowering = np.conj(np.transpose(raising, (0, 2, 1)))

    # Each E+ must be a simultaneous eigenvector of ad(H_r).
    norm = basis.normalization_N
    for l, e_plus in enumerate(raising):
        e_norm = np.linalg.norm(e_plus)
        for r in range(rank):
            comm = commutator(csa_ops[r], e_plus)
            lam = trace_pair(comm, lowering[l]) / (norm / 2.0)
            if abs(lam.imag) > EIGENVECTOR_TOL * (1.0 + abs(lam.real)):
                raise RootPairNotEigenvector(
                    f"root {l}: complex eigenvalue under ad(H_{r})"
                )
            resid = np.linalg.norm(comm - lam.real * e_plus)
            if resid > EIGENVECTOR_TOL * max(1.0, e_norm) * max(1.0, float(np.abs(csa_ops[r]).max())):
                raise RootPairNotEigenvector(
                    f"root {l} is not an ad-eigenvector of H_{r} (residual {resid:.2e})"
                )

    triples = _root_triples(basis, csa_indices, raising, lowering)
    return CartanWeylData(
        rank_R=rank,
        num_roots_L=num_roots,
        csa_indices=csa_indices,
        raising_ops=raising,
        lowering_ops=lowering,
        pair_map=pair_map,
        root_triples=triples,
    )


def compute_root_triples(basis, cw):
    """Recompute the per-root su(2) triples of an existing Cartan-Weyl split."""
    return _root_triples(basis, cw.csa_indices, np.asarray(cw.raising_ops),
                         np.asarray(cw.lowering_ops))


def _root_triples(basis, csa_indices, raising, lowering):
    norm = basis.normalization_N
    csa_ops = np.asarray(basis.basis)[list(csa_indices)]
    triples = []
    for l in range(raising.shape[0]):
        e_plus, e_minus = raising[l], lowering[l]
        for attempt in range(2):
            z = commutator(e_plus, e_minus)
            z_norm = np.linalg.norm(z)
            if z_norm <= 1e-12 * max(1.0, np.linalg.norm(e_plus) ** 2):
                raise ZeroRootBracket(f"[E+, E-] vanished for root {l}")
            mu = np.array([trace_pair(z, h).real for h in csa_ops]) / norm
            z_csa = np.einsum("r,rij->ij", mu, csa_ops)
            if np.linalg.norm(z - z_csa) > 1e-8 * z_norm:
                raise ZeroRootBracket(f"[E+, E-] of root {l} is not in the CSA span")
            eta = (trace_pair(commutator(z, e_plus), e_minus) / (norm / 2.0)).real
            if eta > 0:
                break
            # Provably unreachable for a genuine root pair (eta * ||E+||_F^2
            # = ||Z||_F^2 > 0); retained as a guard against corrupt inputs.
            e_plus, e_minus = e_minus, e_plus
        else:
            raise EtaNotPositiveAfterSwap(f"root {l}: eta <= 0 in both orientations")
        resid = np.linalg.norm(commutator(z, e_plus) - eta * e_plus)
        if resid > SU2_TOL * max(1.0, eta) * max(1.0, np.linalg.norm(e_plus)):
            raise RootPairNotEigenvector(
                f"root {l}: [Z, E+] is not proportional to E+ (residual {resid:.2e})"
            )
        sqrt_eta = np.sqrt(eta)
        s_plus, s_minus = e_plus / sqrt_eta, e_minus / sqrt_eta
        triples.append(RootTriple(
            root_index=l,
            mu=mu,
            eta=float(eta),
            sz=z / eta,
            sx=(s_plus + s_minus) / np.sqrt(2.0),
            sy=1j * (s_minus - s_plus) / np.sqrt(2.0),
        ))
    return tuple(triples)


# ---------------------------------------------------------------------------
# Validation report
# ---------------------------------------------------------------------------

@dataclass
class CheckResult:
    name: str
    passed: bool
    residual: float
    tolerance: float

    def __str__(self):
        tag = "pass" if self.passed else "FAIL"
        return f"[{tag}] {self.name}: residual {self.residual:.3e} (tol {self.tolerance:.1e})"


@dataclass
class ValidationReport:
    entries: list = field(default_factory=list)

    def add(self, name, residual, tolerance):
        self.entries.append(CheckResult(name, residual <= tolerance, float(residual), tolerance))
        return self.entries[-1]

    @property
    def ok(self):
        return all(e.passed for e in self.entries)

    def failures(self):
        return [e for e in self.entries if not e.passed]

    def __str__(self):
        return "\n".join(str(e) for e in self.entries)


def validate_algebra(basis, cw=None, adjoint=None):
    """Run the full invariant suite and return a diagnostic report.

    Checks Hermiticity, trace orthogonality, structure-constant reality and
    antisymmetry, Killing-form nondegeneracy (failing fast there), and, when
    a Cartan-Weyl split is supplied, the reconstruction identity, CSA
    commutativity, su(2) triple relations, adjoint bracket homomorphism,
    adjoint orthogonality, and defining-vs-adjoint conjugation consistency.
    """
    report = ValidationReport()
    mats = np.asarray(basis.basis)
    norm = basis.normalization_N
    f = np.asarray(basis.structure_constants)

    herm = max(np.abs(m - m.conj().T).max() for m in mats)
    report.add("basis hermiticity", herm, HERMITICITY_TOL * (1.0 + np.abs(mats).max()))

    gram = np.einsum("mij,nji->mn", mats, mats).real
    ortho = np.abs(gram - norm * np.eye(basis.dim_M)).max()
    report.add("trace orthogonality Tr(O_m O_m') = N delta", ortho, ORTHOGONALITY_TOL * norm)

    antisym = np.abs(f + np.transpose(f, (1, 0, 2))).max()
    report.add("structure constants antisymmetric", antisym,
               STRUCTURE_IMAG_TOL * (1.0 + np.abs(f).max()))

    flat = mats.reshape(basis.dim_M, -1)
    closure = 0.0
    scale = norm
    for m in range(basis.dim_M):
        brackets = (1j * (mats[m] @ mats - mats @ mats[m])).reshape(basis.dim_M, -1)
        resid = np.linalg.norm(brackets - f[m] @ flat, axis=1)
        scale = max(scale, float(np.linalg.norm(brackets, axis=1).max()))
        closure = max(closure, float(resid.max()))
    report.add("brackets close over the basis", closure / scale, CLOSURE_TOL)

    killing = -np.einsum("mab,nab->mn", f, f)
    svals = np.linalg.svd(killing, compute_uv=False)
    cond_resid = 1.0 if svals.max() == 0.0 else svals.min() / svals.max()
    kill_ok = svals.max() > 0.0 and svals.min() > KILLING_COND_TOL * svals.max()
    report.entries.append(CheckResult(
        "Killing form nondegenerate", kill_ok,
        float(0.0 if kill_ok else cond_resid), KILLING_COND_TOL))
    if not kill_ok:
        return report  # fail fast: nothing downstream is meaningful

    if cw is None:
        return report

    csa_ops = cw.csa_ops(basis)
    commute = 0.0
    for r in range(cw.rank_R):
        for s in range(r + 1, cw.rank_R):
            commute = max(commute, float(np.abs(commutator(csa_ops[r], csa_ops[s])).max()))
    report.add("CSA generators commute", commute,
               CSA_COMMUTE_TOL * (1.0 + np.abs(csa_ops).max()) ** 2)

    report.add("L = (M - R)/2", abs(basis.dim_M - cw.rank_R - 2 * cw.num_roots_L), 0.0)

    recon = 0.0
    for l, (u, v) in enumerate(cw.pair_map):
        e_p, e_m = cw.raising_ops[l], cw.lowering_ops[l]
        recon = max(recon, float(np.abs(mats[u] - (e_p + e_m)).max()))
        recon = max(recon, float(np.abs(mats[v] - 1j * (e_m - e_p)).max()))
    report.add("Cartan-Weyl reconstruction identity", recon,
               1e-12 * (1.0 + np.abs(mats).max()))

    su2 = 0.0
    for t in cw.root_triples:
        s_plus = (t.sx + 1j * t.sy) / np.sqrt(2.0)
        s_minus = (t.sx - 1j * t.sy) / np.sqrt(2.0)
        su2 = max(su2, float(np.abs(commutator(s_plus, s_minus) - t.sz).max()))
        su2 = max(su2, float(np.abs(commutator(t.sz, s_plus) - s_plus).max()))
        su2 = max(su2, float(np.abs(commutator(t.sz, s_minus) + s_minus).max()))
    report.add("su(2) triple relations", su2, SU2_TOL)

    if adjoint is None:
        try:
            _, adjoint = derive_structure(basis, cw)
        except GcsynthError as exc:
            report.entries.append(CheckResult(
                f"adjoint construction ({type(exc).__name__}: {exc})",
                False, float("inf"), 0.0))
            return report
    adj = np.asarray(adjoint.matrices)

    hom = 0.0
    for m in range(basis.dim_M):
        for n in range(m + 1, basis.dim_M):
            lhs = np.einsum("k,kij->ij", f[m, n], adj)
            rhs = i_bracket(adj[m], adj[n])
            denom = max(1.0, np.linalg.norm(adj[m]) * np.linalg.norm(adj[n]))
            hom = max(hom, float(np.linalg.norm(lhs - rhs) / denom))
    report.add("adjoint bracket homomorphism", hom, ADJOINT_TOL)

    agram = np.einsum("mij,nji->mn", adj, adj).real
    aresid = np.abs(agram - adjoint.norm_adj * np.eye(basis.dim_M)).max()
    report.add("adjoint orthogonality Tr = N_adj delta", aresid,
               ADJOINT_TOL * max(adjoint.norm_adj, 1.0))

    report.add("defining vs adjoint conjugation", _conjugation_residual(basis, cw, adjoint),
               ADJOINT_TOL)
    return report


def _conjugation_residual(basis, cw, adjoint):
    """Deterministic probe: conjugation coefficients agree between representations."""
    rng = np.random.default_rng(20240901)
    coeffs = rng.standard_normal(basis.dim_M)
    alpha = 0.37 - 0.21j
    worst = 0.0
    mats = np.asarray(basis.basis)
    adj = np.asarray(adjoint.matrices)
    for l in range(min(cw.num_roots_L, 3)):
        gen_def = alpha * cw.raising_ops[l] + np.conj(alpha) * cw.lowering_ops[l]
        u_def = expi_hermitian(gen_def)
        x_def = np.einsum("m,mij->ij", coeffs, mats)
        out_def = u_def.conj().T @ x_def @ u_def
        c_def = np.einsum("ij,mji->m", out_def, mats).real / basis.normalization_N

        gen_adj = alpha * adjoint.raising_images[l] + np.conj(alpha) * adjoint.lowering_images[l]
        u_adj = expi_hermitian(gen_adj)
        x_adj = np.einsum("m,mij->ij", coeffs, adj)
        out_adj = u_adj.conj().T @ x_adj @ u_adj
        c_adj = np.einsum("ij,mji->m", out_adj, adj).real / adjoint.norm_adj
        worst = max(worst, float(np.abs(c_def - c_adj).max()))
    return worst


# ---------------------------------------------------------------------------
# Bundled algebra
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Algebra:
    """An orthogonal basis together with its Cartan-Weyl split and adjoint rep."""

    basis: AlgebraBasis
    cartan_weyl: CartanWeylData
    adjoint: AdjointRep
    name: str = "custom"

    @property
    def dim(self):
        return self.basis.dim_M

    @property
    def rep_dim(self):
        return self.basis.rep_dim

    @property
    def norm(self):
        return self.basis.normalization_N

    @property
    def observable_norms(self):
        return self.basis.observable_norms

    @property
    def max_observable_norm(self):
        """||O|| = max_m ||O_m|| (spectral norm)."""
        return float(self.observable_norms.max())

    def label(self):
        """Name for artifact files: the catalog name, or a content hash."""
        if self.name != "custom":
            return self.name
        return "custom-" + self.basis.fingerprint()


def assemble_algebra(basis, csa_indices, root_pairs, name="custom", validate=True):
    """Build an Algebra from a validated basis plus Cartan-Weyl labeling."""
    cw = build_cartan_weyl(basis, csa_indices, root_pairs)
    # The basis carries structure constants from construction; no recompute.
    adjoint = _adjoint_from_constants(np.asarray(basis.structure_constants),
                                      basis.dim_M, cw)
    algebra = Algebra(basis=basis, cartan_weyl=cw, adjoint=adjoint, name=name)
    if validate:
        report = validate_algebra(basis, cw, adjoint)
        if not report.ok:
            from .errors import ValidationFailed
            raise ValidationFailed(
                "algebra failed validation:\n" + "\n".join(str(e) for e in report.failures()),
                report=report,
            )
    return algebra
