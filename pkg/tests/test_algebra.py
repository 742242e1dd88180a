import numpy as np
import pytest

from gcsynth import (
    AlgebraBasis,
    build_cartan_weyl,
    compute_root_triples,
    derive_structure,
    orthonormalize_basis,
    validate_algebra,
)
from gcsynth.algebra import commutator, expi_hermitian, i_bracket
from gcsynth.errors import (
    BasisNotClosed,
    CsaNotAbelian,
    GramNotDiagonal,
    KillingFormDegenerate,
    LinearlyDependentBasis,
    NonHermitianInput,
    RootPairNotEigenvector,
)

from conftest import SIGMA_X, SIGMA_Y, SIGMA_Z, gell_mann


# ---------------------------------------------------------------------------
# orthonormalize_basis
# ---------------------------------------------------------------------------

def test_pauli_basis_unchanged():
    basis = orthonormalize_basis([SIGMA_Z, SIGMA_X, SIGMA_Y])
    assert basis.normalization_N == pytest.approx(2.0)
    assert np.allclose(basis.basis, [SIGMA_Z, SIGMA_X, SIGMA_Y], atol=1e-14)


def test_rescaling_to_target():
    basis = orthonormalize_basis([2 * SIGMA_Z, SIGMA_X, SIGMA_Y], target_N=2.0)
    assert np.allclose(basis.basis[0], SIGMA_Z, atol=1e-14)
    assert np.allclose(basis.basis[1], SIGMA_X, atol=1e-14)


def test_gell_mann_unchanged():
    mats = gell_mann()
    # Oracle: all 64 trace pairs computed directly.
    gram = np.array([[np.trace(a @ b).real for b in mats] for a in mats])
    assert np.allclose(gram, 2.0 * np.eye(8), atol=1e-12)
    basis = orthonormalize_basis(mats)
    assert basis.normalization_N == pytest.approx(2.0)
    assert np.allclose(basis.basis, mats, atol=1e-14)


def test_non_hermitian_rejected():
    bad = np.array([[0, 1], [0, 0]], dtype=complex)
    with pytest.raises(NonHermitianInput):
        orthonormalize_basis([SIGMA_Z, bad, SIGMA_Y])


def test_non_diagonal_gram_rejected():
    with pytest.raises(GramNotDiagonal):
        orthonormalize_basis([SIGMA_Z, SIGMA_X + 0.2 * SIGMA_Z, SIGMA_Y])


def test_dependent_basis_rejected():
    with pytest.raises(LinearlyDependentBasis):
        orthonormalize_basis([SIGMA_Z, np.zeros((2, 2), dtype=complex), SIGMA_Y])


# ---------------------------------------------------------------------------
# derive_structure
# ---------------------------------------------------------------------------

def test_su2_structure_constants():
    basis = orthonormalize_basis([SIGMA_Z, SIGMA_X, SIGMA_Y])
    f = basis.structure_constants
    # Oracle: i[s_z, s_x] = -2 s_y etc., computed from the 2x2 matrices.
    assert np.allclose(i_bracket(SIGMA_Z, SIGMA_X), -2.0 * SIGMA_Y, atol=1e-14)
    nonzero = np.abs(f) > 1e-12
    assert nonzero.sum() == 6  # single orbit of index triples
    assert np.allclose(np.abs(f[nonzero]), 2.0, atol=1e-12)
    assert np.allclose(f, -np.transpose(f, (1, 0, 2)), atol=1e-12)


def test_abelian_input_rejected():
    with pytest.raises(KillingFormDegenerate):
        orthonormalize_basis([SIGMA_Z, np.eye(2, dtype=complex)])


def test_not_closed_rejected():
    # s_z and s_x alone bracket into s_y, which is outside the span.
    with pytest.raises(BasisNotClosed):
        mats = np.array([SIGMA_Z, SIGMA_X])
        from gcsynth.algebra import _structure_constants
        _structure_constants(mats, 2.0)


def test_so4_adjoint_homomorphism(so4):
    f = np.asarray(so4.basis.structure_constants)
    adj = np.asarray(so4.adjoint.matrices)
    for m in range(6):
        for n in range(6):
            lhs = np.einsum("k,kij->ij", f[m, n], adj)
            rhs = i_bracket(adj[m], adj[n])
            denom = max(1.0, np.linalg.norm(adj[m]) * np.linalg.norm(adj[n]))
            assert np.linalg.norm(lhs - rhs) <= 1e-9 * denom


def test_adjoint_orthogonality(catalog_algebras):
    for algebra in catalog_algebras:
        adj = np.asarray(algebra.adjoint.matrices)
        gram = np.einsum("mij,nji->mn", adj, adj).real
        n_adj = algebra.adjoint.norm_adj
        assert n_adj > 0
        assert np.abs(gram - n_adj * np.eye(algebra.dim)).max() <= 1e-9 * n_adj


# ---------------------------------------------------------------------------
# build_cartan_weyl
# ---------------------------------------------------------------------------

def test_su2_raising_is_sigma_plus(su2_half):
    sigma_plus = (SIGMA_X + 1j * SIGMA_Y) / 2.0
    assert np.allclose(su2_half.cartan_weyl.raising_ops[0], sigma_plus, atol=1e-14)
    assert su2_half.cartan_weyl.rank_R == 1
    assert su2_half.cartan_weyl.num_roots_L == 1


def test_su3_rank_and_roots(su3):
    assert su3.cartan_weyl.rank_R == 2
    assert su3.cartan_weyl.num_roots_L == 3


def test_so6_rank_and_roots(so6):
    assert so6.cartan_weyl.rank_R == 3
    assert so6.cartan_weyl.num_roots_L == 6
    assert so6.rep_dim == 8


def test_csa_not_abelian_rejected():
    mats = gell_mann()
    # l3 at 0 and l1 at 2 do not commute; declaring both as CSA must fail.
    basis = orthonormalize_basis([mats[2], mats[7], mats[0], mats[3], mats[5],
                                  mats[1], mats[4], mats[6]])
    with pytest.raises(CsaNotAbelian):
        build_cartan_weyl(basis, csa_indices=[0, 2],
                          root_pairs=[(1, 5), (3, 6), (4, 7)])


def test_root_pair_not_eigenvector():
    mats = gell_mann()
    # Mislabel: swap one x-partner with a partner of a different root.
    basis = orthonormalize_basis([mats[2], mats[7], mats[0], mats[3], mats[5],
                                  mats[4], mats[1], mats[6]])
    with pytest.raises(RootPairNotEigenvector):
        build_cartan_weyl(basis, csa_indices=[0, 1],
                          root_pairs=[(2, 5), (3, 6), (4, 7)])


# ---------------------------------------------------------------------------
# compute_root_triples
# ---------------------------------------------------------------------------

def test_su2_triple_frozen_values(su2_half):
    t = su2_half.cartan_weyl.root_triples[0]
    # Oracle: Z = [s+, s-] = s_z, [Z, s+] = 2 s+ from 2x2 commutators.
    assert np.allclose(t.mu, [1.0], atol=1e-12)
    assert t.eta == pytest.approx(2.0, abs=1e-12)
    assert np.allclose(t.sz, SIGMA_Z / 2.0, atol=1e-12)


def test_spin1_triple_matches_spin_half(su2_one):
    # Same abstract algebra in a 3-dim rep: mu and eta are rep-independent.
    t = su2_one.cartan_weyl.root_triples[0]
    assert np.allclose(t.mu, [1.0], atol=1e-10)
    assert t.eta == pytest.approx(2.0, abs=1e-10)


def test_so4_roots_supported_on_both_csa(so4):
    # Oracle: expand Z_l = [E+, E-] over H_r by trace projection.
    for t in so4.cartan_weyl.root_triples:
        assert np.abs(t.mu).min() > 0.5


def test_recompute_matches_stored(so6):
    triples = compute_root_triples(so6.basis, so6.cartan_weyl)
    for fresh, stored in zip(triples, so6.cartan_weyl.root_triples):
        assert np.allclose(fresh.mu, stored.mu, atol=1e-12)
        assert fresh.eta == pytest.approx(stored.eta, abs=1e-12)


def test_su2_relations_all_catalog_roots(catalog_algebras):
    for algebra in catalog_algebras:
        for t in algebra.cartan_weyl.root_triples:
            s_plus = (t.sx + 1j * t.sy) / np.sqrt(2.0)
            s_minus = (t.sx - 1j * t.sy) / np.sqrt(2.0)
            assert np.abs(commutator(s_plus, s_minus) - t.sz).max() < 1e-10
            assert np.abs(commutator(t.sz, s_plus) - s_plus).max() < 1e-10
            assert np.abs(commutator(t.sz, s_minus) + s_minus).max() < 1e-10
            assert t.eta > 0


# ---------------------------------------------------------------------------
# validate_algebra
# ---------------------------------------------------------------------------

def test_valid_su2_report_clean(su2_half):
    report = validate_algebra(su2_half.basis, su2_half.cartan_weyl, su2_half.adjoint)
    assert report.ok, str(report)


def test_scaled_element_fails_orthogonality(su2_half):
    mats = np.array(su2_half.basis.basis)
    mats[0] = 1.01 * mats[0]
    broken = AlgebraBasis(dim_M=3, rep_dim=2, basis=mats, normalization_N=2.0,
                          structure_constants=su2_half.basis.structure_constants)
    report = validate_algebra(broken)
    entry = next(e for e in report.entries if "orthogonality" in e.name)
    assert not entry.passed
    # Tr((1.01 s_z)^2) - 2 = 0.0402 ~ 0.02 * N
    assert entry.residual == pytest.approx(0.02 * 2.0, rel=0.02)


def test_abelian_pair_fails_killing():
    mats = np.array([SIGMA_Z, np.eye(2, dtype=complex)])
    broken = AlgebraBasis(dim_M=2, rep_dim=2, basis=mats, normalization_N=2.0,
                          structure_constants=np.zeros((2, 2, 2)))
    report = validate_algebra(broken)
    assert not report.ok
    assert any("Killing" in e.name and not e.passed for e in report.entries)


def test_validation_reports_all_catalog(catalog_algebras):
    for algebra in catalog_algebras:
        report = validate_algebra(algebra.basis, algebra.cartan_weyl, algebra.adjoint)
        assert report.ok, f"{algebra.name}:\n{report}"


def test_validate_never_raises_on_unclosed_basis(su2_half):
    # A basis whose brackets leave its span must come back as a failed
    # report, not an exception, even when the adjoint has to be rebuilt.
    mats = np.array([SIGMA_Z, SIGMA_X])  # [s_z, s_x] ~ s_y, outside the span
    broken = AlgebraBasis(dim_M=2, rep_dim=2, basis=mats, normalization_N=2.0,
                          structure_constants=np.zeros((2, 2, 2)))
    report = validate_algebra(broken, su2_half.cartan_weyl)
    assert not report.ok
    assert any("close" in e.name and not e.passed for e in report.entries)


# ---------------------------------------------------------------------------
# Module invariants
# ---------------------------------------------------------------------------

def test_orthogonality_all_pairs(catalog_algebras):
    for algebra in catalog_algebras:
        mats = np.asarray(algebra.basis.basis)
        gram = np.einsum("mij,nji->mn", mats, mats).real
        target = algebra.norm * np.eye(algebra.dim)
        assert np.abs(gram - target).max() < 1e-10 * algebra.norm


def test_conjugation_consistency_oracle(catalog_algebras):
    # Coefficients of exp-conjugation agree between defining and adjoint reps.
    rng = np.random.default_rng(7)
    for algebra in catalog_algebras:
        mats = np.asarray(algebra.basis.basis)
        adj = np.asarray(algebra.adjoint.matrices)
        cw = algebra.cartan_weyl
        for _ in range(5):
            coeffs = rng.standard_normal(algebra.dim)
            l = int(rng.integers(cw.num_roots_L))
            alpha = complex(rng.normal(scale=0.3), rng.normal(scale=0.3))
            u = expi_hermitian(alpha * cw.raising_ops[l] + np.conj(alpha) * cw.lowering_ops[l])
            x = np.einsum("m,mij->ij", coeffs, mats)
            c_def = np.einsum("ij,mji->m", u.conj().T @ x @ u, mats).real / algebra.norm

            ua = expi_hermitian(alpha * algebra.adjoint.raising_images[l]
                                + np.conj(alpha) * algebra.adjoint.lowering_images[l])
            xa = np.einsum("m,mij->ij", coeffs, adj)
            c_adj = np.einsum("ij,mji->m", ua.conj().T @ xa @ ua, adj).real \
                / algebra.adjoint.norm_adj
            assert np.abs(c_def - c_adj).max() < 1e-9
