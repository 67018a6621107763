import numpy as np
import pytest

from conftest import boost, is_lorentz, random_lorentz, random_strict_witness_tensor, rotation
from sloccgeo.errors import (
    BoundaryClassError,
    ComplexSpectrumError,
    DegenerateClassError,
    NotAStateError,
    NotOrthochronousError,
    NotProperLorentzError,
    NotUnitDeterminantError,
)
from sloccgeo.lorentz import (
    LocalFilter,
    LorentzSV,
    apply_filter_state,
    apply_filter_witness,
    canonical_form,
    filter_success_probability,
    lorentz_from_sl2c,
    lorentz_singular_values,
    lorentz_singular_values_many,
    lorentz_svd,
    minkowski_adjoint,
    sl2c_from_lorentz,
    slocc_coord,
    tetrahedral_orbit,
)
from sloccgeo.pauli import (
    ETA,
    bell_projector,
    from_hermitian,
    maximally_mixed,
    singlet_projector,
    to_hermitian,
    werner_state,
)
from sloccgeo.sampling import random_local_filter, random_product_state, random_sl2c, random_su2


class TestMinkowskiAdjoint:
    def test_diagonal_fixed(self):
        om = np.diag([1.0, 2.0, -3.0, 0.5])
        assert np.allclose(minkowski_adjoint(om), om)

    def test_single_cross_entry_flips(self):
        om = np.zeros((4, 4))
        om[0, 1] = 2.5
        adj = minkowski_adjoint(om)
        assert adj[1, 0] == -2.5
        assert np.count_nonzero(adj) == 1

    def test_involution(self, rng):
        for _ in range(100):
            om = rng.standard_normal((4, 4))
            assert np.allclose(minkowski_adjoint(minkowski_adjoint(om)), om)


class TestLorentzSingularValues:
    def test_diagonal_negative_det(self):
        sv = lorentz_singular_values(np.diag([1.0, 0.5, 0.3, -0.2]))
        assert np.allclose(sv, (1.0, 0.5, 0.3, -0.2), atol=1e-12)

    def test_diagonal_positive_det(self):
        sv = lorentz_singular_values(np.diag([1.0, 0.5, 0.3, 0.2]))
        assert np.allclose(sv, (1.0, 0.5, 0.3, 0.2), atol=1e-12)

    def test_singlet(self):
        sv = lorentz_singular_values(from_hermitian(singlet_projector()))
        assert np.allclose(sv, (0.25, 0.25, 0.25, -0.25), atol=1e-12)

    def test_invariance_under_explicit_lorentz_pairs(self, rng):
        for _ in range(100):
            om = random_strict_witness_tensor(rng)
            sv = lorentz_singular_values(om)
            L1 = random_lorentz(rng)
            L2 = random_lorentz(rng)
            sv2 = lorentz_singular_values(L1 @ om @ L2.T)
            assert np.allclose(sv, sv2, atol=1e-8)

    def test_complex_spectrum_detected(self):
        om = np.eye(4)
        om[0, 1] = 1.0  # shear in the (t,x) block: complex omega* omega spectrum
        with pytest.raises(ComplexSpectrumError):
            lorentz_singular_values(om)

    def test_ordering_and_sign_convention(self, rng):
        for _ in range(200):
            om = random_strict_witness_tensor(rng)
            w0, w1, w2, w3 = lorentz_singular_values(om)
            assert w0 >= w1 >= w2 >= abs(w3) - 1e-12
            det = np.linalg.det(om)
            if abs(det) > 1e-10:
                assert np.sign(w3) == np.sign(det)

    def test_batch_matches_single(self, rng):
        oms = np.stack([random_strict_witness_tensor(rng) for _ in range(50)])
        sv, bad = lorentz_singular_values_many(oms)
        assert not bad.any()
        for k in range(50):
            assert np.allclose(sv[k], lorentz_singular_values(oms[k]), atol=1e-12)

    def test_eigenvalue_residuals(self, rng):
        # the squared singular values are eigenvalues of omega* omega to
        # within 1e-8 |omega|^2
        for _ in range(200):
            om = random_strict_witness_tensor(rng)
            sv = np.array(lorentz_singular_values(om))
            N = ETA @ om.T @ ETA @ om
            lam = np.sort(np.linalg.eigvals(N).real)[::-1]
            scale = np.sum(om * om)
            assert np.max(np.abs(np.sort(sv * sv)[::-1] - lam)) < 1e-8 * max(1.0, scale)


class TestSloccCoord:
    def test_plain(self):
        c = slocc_coord(LorentzSV(1.0, 0.5, 0.3, -0.2))
        assert np.allclose(c, [0.5, 0.3, -0.2])

    def test_maximally_mixed_center(self):
        sv = lorentz_singular_values(from_hermitian(maximally_mixed()))
        assert np.allclose(slocc_coord(sv), [0, 0, 0], atol=1e-12)

    def test_singlet_vertex(self):
        sv = lorentz_singular_values(from_hermitian(singlet_projector()))
        assert np.allclose(slocc_coord(sv), [1, 1, -1], atol=1e-10)

    def test_degenerate(self):
        with pytest.raises(DegenerateClassError):
            slocc_coord(LorentzSV(0.0, 0.0, 0.0, 0.0))


class TestTetrahedralOrbit:
    def test_origin_fixed_point(self):
        assert tetrahedral_orbit((0.0, 0.0, 0.0)) == {(0.0, 0.0, 0.0)}

    def test_vertex_orbit_is_tetrahedron(self):
        orbit = tetrahedral_orbit((1.0, 1.0, -1.0))
        assert orbit == {(1.0, 1.0, -1.0), (1.0, -1.0, 1.0), (-1.0, 1.0, 1.0), (-1.0, -1.0, -1.0)}

    def test_orbit_sizes_divide_24(self, rng):
        for _ in range(20):
            c = rng.standard_normal(3)
            assert 24 % len(tetrahedral_orbit(c)) == 0

    def test_group_action(self, rng):
        c = rng.standard_normal(3)
        orbit = tetrahedral_orbit(c)
        for member in orbit:
            assert tetrahedral_orbit(member) == orbit


class TestFilters:
    def test_unit_determinant_enforced(self):
        with pytest.raises(NotUnitDeterminantError):
            LocalFilter(2 * np.eye(2), np.eye(2))

    def test_identity_filter(self, rng):
        f = LocalFilter(np.eye(2), np.eye(2))
        rho = random_product_state(rng)
        assert np.allclose(apply_filter_state(rho, f), rho)
        assert np.allclose(apply_filter_witness(rho, f), rho)

    def test_unitary_preserves_trace(self, rng):
        for _ in range(20):
            f = LocalFilter(random_su2(rng), random_su2(rng))
            rho = random_product_state(rng)
            out = apply_filter_state(rho, f)
            assert abs(np.trace(out).real - np.trace(rho).real) < 1e-12

    def test_inertia_preserved(self, rng):
        # Sylvester: congruence preserves the eigenvalue sign pattern
        for _ in range(100):
            A = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
            W = A + A.conj().T
            f = random_local_filter(rng)
            before = np.sign(np.linalg.eigvalsh(W))
            after = np.sign(np.linalg.eigvalsh(apply_filter_state(W, f)))
            assert np.array_equal(before, after)

    def test_pairing_invariance(self, rng):
        for _ in range(100):
            A = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
            W = A + A.conj().T
            rho = random_product_state(rng)
            f = random_local_filter(rng)
            lhs = np.trace(apply_filter_state(rho, f) @ apply_filter_witness(W, f))
            rhs = np.trace(rho @ W)
            assert abs((lhs - rhs).real) < 1e-10 * max(1.0, abs(rhs))

    def test_witness_property_preserved(self, rng):
        # Tr(W^M rho_s) >= 0 for witnesses W and any filter
        for _ in range(20):
            W = to_hermitian(random_strict_witness_tensor(rng, max_rapidity=0.5))
            f = random_local_filter(rng)
            WM = apply_filter_witness(W, f)
            for _ in range(50):
                rho_s = random_product_state(rng)
                assert np.trace(WM @ rho_s).real >= -1e-10


class TestFilterSuccessProbability:
    def test_unitary_succeeds_surely(self, rng):
        for _ in range(20):
            f = LocalFilter(random_su2(rng), random_su2(rng))
            rho = random_product_state(rng)
            assert abs(filter_success_probability(rho, f) - 1.0) < 1e-12

    def test_diagonal_closed_form(self):
        # rho = I/4, A = diag(s, 1/s), B = I:
        # Tr(rho A^dag A x I) / |A x I|^2 = (s^2 + s^-2)/2 / s^2
        for s in (1.5, 2.0, 5.0):
            f = LocalFilter(np.diag([s, 1 / s]), np.eye(2))
            got = filter_success_probability(maximally_mixed(), f)
            assert abs(got - (s * s + s ** -2) / (2 * s * s)) < 1e-12

    def test_strictly_positive_for_invertible(self, rng):
        for _ in range(50):
            f = random_local_filter(rng)
            rho = werner_state(rng.uniform(0, 1))
            p = filter_success_probability(rho, f)
            assert 0.0 < p <= 1.0 + 1e-12

    def test_rejects_non_state(self, rng):
        f = LocalFilter(np.eye(2), np.eye(2))
        with pytest.raises(NotAStateError):
            filter_success_probability(2 * np.eye(4), f)


class TestLorentzFromSl2c:
    def test_identity(self):
        assert np.allclose(lorentz_from_sl2c(np.eye(2)), np.eye(4), atol=1e-14)

    def test_z_boost(self):
        t = 1.0
        A = np.diag([np.exp(t / 2), np.exp(-t / 2)])
        L = lorentz_from_sl2c(A)
        expected = boost(2, t)
        assert np.allclose(L, expected, atol=1e-12)

    def test_su2_gives_rotation(self, rng):
        for _ in range(20):
            L = lorentz_from_sl2c(random_su2(rng))
            assert abs(L[0, 0] - 1.0) < 1e-12
            assert np.allclose(L[0, 1:], 0, atol=1e-12)
            assert np.allclose(L[1:, 0], 0, atol=1e-12)
            R = L[1:, 1:]
            assert np.allclose(R @ R.T, np.eye(3), atol=1e-12)

    def test_homomorphism(self, rng):
        for _ in range(100):
            A1 = random_sl2c(rng)
            A2 = random_sl2c(rng)
            lhs = lorentz_from_sl2c(A1 @ A2)
            rhs = lorentz_from_sl2c(A1) @ lorentz_from_sl2c(A2)
            assert np.max(np.abs(lhs - rhs)) < 1e-10

    def test_output_is_proper_orthochronous(self, rng):
        for _ in range(50):
            L = lorentz_from_sl2c(random_sl2c(rng))
            assert is_lorentz(L, atol=1e-9)

    def test_rejects_bad_determinant(self):
        with pytest.raises(NotUnitDeterminantError):
            lorentz_from_sl2c(2 * np.eye(2))


class TestSl2cFromLorentz:
    def test_identity_canonicalized(self):
        assert np.allclose(sl2c_from_lorentz(np.eye(4)), np.eye(2), atol=1e-12)

    def test_z_boost_inverse(self):
        t = 0.7
        A = sl2c_from_lorentz(boost(2, t))
        assert np.allclose(A, np.diag([np.exp(t / 2), np.exp(-t / 2)]), atol=1e-10)

    def test_round_trip_up_to_sign(self, rng):
        for _ in range(100):
            A = random_sl2c(rng)
            B = sl2c_from_lorentz(lorentz_from_sl2c(A))
            assert min(np.max(np.abs(B - A)), np.max(np.abs(B + A))) < 1e-8

    def test_rejects_improper(self):
        with pytest.raises(NotProperLorentzError):
            sl2c_from_lorentz(np.diag([1.0, 1.0, 1.0, -1.0]))

    def test_rejects_time_reversal(self):
        with pytest.raises(NotOrthochronousError):
            sl2c_from_lorentz(np.diag([-1.0, 1.0, 1.0, -1.0]))


class TestLorentzSvd:
    def test_already_diagonal(self):
        om = np.diag([1.0, 0.5, 0.3, -0.2])
        LA, sv, LB = lorentz_svd(om)
        assert np.allclose(LA, np.eye(4), atol=1e-9)
        assert np.allclose(LB, np.eye(4), atol=1e-9)
        assert np.allclose(sv, (1.0, 0.5, 0.3, -0.2), atol=1e-12)

    def test_synthesize_then_decompose(self, rng):
        for _ in range(50):
            d = np.array([1.0, 0.5, 0.3, -0.2])
            L1 = random_lorentz(rng)
            L2 = random_lorentz(rng)
            om = L1 @ np.diag(d) @ L2.T
            LA, sv, LB = lorentz_svd(om)
            assert np.allclose(sv, d, atol=1e-9)
            assert is_lorentz(LA, atol=1e-8)
            assert is_lorentz(LB, atol=1e-8)
            assert np.max(np.abs(LA @ om @ LB.T - np.diag(sv))) < 1e-7 * np.linalg.norm(om)

    def test_filtered_werner_degenerate_spatial(self, rng):
        rho = werner_state(0.5)
        for _ in range(10):
            f = random_local_filter(rng)
            om = from_hermitian(apply_filter_state(rho, f))
            LA, sv, LB = lorentz_svd(om)
            resid = np.max(np.abs(LA @ om @ LB.T - np.diag(sv)))
            assert resid < 1e-7 * max(1.0, np.linalg.norm(om))
            assert np.allclose(4 * np.array(sv), [1.0, 0.5, 0.5, -0.5], atol=1e-8)

    def test_zero_singular_value_completion(self, rng):
        for _ in range(10):
            d = np.diag([1.0, 0.5, 0.3, 0.0])
            om = random_lorentz(rng) @ d @ random_lorentz(rng).T
            LA, sv, LB = lorentz_svd(om)
            assert np.max(np.abs(LA @ om @ LB.T - np.diag(sv))) < 1e-7
            assert is_lorentz(LA, atol=1e-7)

    def test_boundary_with_diagonal_form_decomposes(self):
        # non-strict class that still has the diagonal canonical form
        om = np.diag([1.0, 1.0, 0.5, 0.2])
        LA, sv, LB = lorentz_svd(om)
        assert np.allclose(sv, (1.0, 1.0, 0.5, 0.2), atol=1e-10)
        assert np.max(np.abs(LA @ om @ LB.T - np.diag(sv))) < 1e-8

    def test_bell_class_boundary_decomposes(self, rng):
        om0 = from_hermitian(singlet_projector())
        for _ in range(5):
            f = random_local_filter(rng, max_cond=5.0)
            om = lorentz_from_sl2c(f.A) @ om0 @ lorentz_from_sl2c(f.B).T
            LA, sv, LB = lorentz_svd(om)
            assert np.allclose(4 * np.array(sv), [1, 1, 1, -1], atol=1e-8)
            assert np.max(np.abs(LA @ om @ LB.T - np.diag(sv))) < 1e-7

    def test_boundary_without_diagonal_form_rejected(self):
        # rank-one light-like class (pure product state |00><00|)
        q = np.array([1.0, 0.0, 0.0, 1.0]) / 2
        om = np.outer(q, q)
        with pytest.raises(BoundaryClassError):
            lorentz_svd(om)

    def test_quasi_distillable_class_rejected(self):
        # 0.5 |psi-><psi-| + 0.5 |00><00|: omega* omega is a Jordan block
        # on a light-like direction; detected, never decomposed
        q = np.array([1.0, 0.0, 0.0, 1.0]) / 2
        om = 0.5 * from_hermitian(singlet_projector()) + 0.5 * np.outer(q, q)
        sv = lorentz_singular_values(om)  # spectrum itself is fine
        assert np.allclose(np.abs(sv), 0.125, atol=1e-9)
        with pytest.raises(BoundaryClassError):
            lorentz_svd(om)

    def test_antiwitness_rejected(self):
        with pytest.raises(BoundaryClassError):
            lorentz_svd(-np.diag([1.0, 0.5, 0.3, 0.2]))

    def test_deterministic(self, rng):
        om = random_strict_witness_tensor(rng)
        LA1, sv1, LB1 = lorentz_svd(om)
        LA2, sv2, LB2 = lorentz_svd(om.copy())
        assert np.array_equal(LA1, LA2)
        assert np.array_equal(LB1, LB2)
        assert sv1 == sv2


class TestCanonicalForm:
    def test_time_only(self):
        assert np.allclose(canonical_form((1.0, 0, 0, 0)), np.eye(4))

    def test_bell_class_vertex(self):
        # diag(1,1,1,-1)/4 is the |psi+> projector: same SLOCC class as the
        # singlet, eigenvalues {1,0,0,0}
        W = canonical_form(np.array([1.0, 1.0, 1.0, -1.0]) / 4)
        assert np.allclose(np.linalg.eigvalsh(W), [0, 0, 0, 1], atol=1e-12)
        assert np.allclose(W, bell_projector("psi+"), atol=1e-12)
        sv = lorentz_singular_values(from_hermitian(W))
        assert np.allclose(sv, lorentz_singular_values(from_hermitian(singlet_projector())), atol=1e-12)

    def test_cube_corner_not_a_state(self):
        # diag(1,1,1,1)/4: eigenvalue formula gives {1/2,1/2,1/2,-1/2}
        W = canonical_form(np.array([1.0, 1.0, 1.0, 1.0]) / 4)
        assert np.allclose(np.linalg.eigvalsh(W), [-0.5, 0.5, 0.5, 0.5], atol=1e-12)


class TestSloccInvariants:
    def test_singular_value_invariance_bulk(self, rng):
        oms = np.stack([random_strict_witness_tensor(rng, 0.6) for _ in range(1000)])
        sv, bad = lorentz_singular_values_many(oms)
        assert not bad.any()
        filtered = np.empty_like(oms)
        for k in range(oms.shape[0]):
            f = random_local_filter(rng, max_cond=6.0)
            LA = lorentz_from_sl2c(f.A)
            LB = lorentz_from_sl2c(f.B)
            filtered[k] = LA @ oms[k] @ LB.T
        sv2, bad2 = lorentz_singular_values_many(filtered)
        assert not bad2.any()
        assert np.max(np.abs(sv - sv2) / np.maximum(1.0, sv[:, :1])) < 1e-8

    def test_det_invariance(self, rng):
        for _ in range(100):
            om = random_strict_witness_tensor(rng)
            L1, L2 = random_lorentz(rng), random_lorentz(rng)
            assert abs(np.linalg.det(L1 @ om @ L2.T) - np.linalg.det(om)) < 1e-9

    def test_contragredience(self, rng):
        for _ in range(100):
            om = rng.standard_normal((4, 4))
            L1, L2 = random_lorentz(rng), random_lorentz(rng)
            omM = L1 @ om @ L2.T
            lhs = minkowski_adjoint(omM)
            rhs = np.linalg.inv(L2.T) @ minkowski_adjoint(om) @ np.linalg.inv(L1)
            assert np.max(np.abs(lhs - rhs)) < 1e-9

    def test_spectrum_similarity(self, rng):
        for _ in range(100):
            om = rng.standard_normal((4, 4))
            L1, L2 = random_lorentz(rng), random_lorentz(rng)
            omM = L1 @ om @ L2.T
            e1 = np.sort_complex(np.linalg.eigvals(minkowski_adjoint(om) @ om))
            e2 = np.sort_complex(np.linalg.eigvals(minkowski_adjoint(omM) @ omM))
            assert np.max(np.abs(e1 - e2)) < 1e-8 * max(1.0, np.abs(e1).max())

    def test_witness_spectrum_nonnegative(self, rng):
        oms = np.stack([random_strict_witness_tensor(rng) for _ in range(1000)])
        mats = np.einsum("ab,zca,cd,zde->zbe", ETA, oms, ETA, oms)
        lam = np.linalg.eigvals(mats)
        assert np.max(np.abs(lam.imag)) < 1e-9 * np.abs(lam).max()
        assert lam.real.min() > -1e-9 * np.abs(lam).max()
