import json

import numpy as np
import pytest

from sloccgeo.errors import NotHermitianError, NotInLightConeError
from sloccgeo.pauli import (
    SIGMA,
    bell_projector,
    from_hermitian,
    from_hermitian_many,
    maximally_mixed,
    operator_from_json,
    operator_to_json,
    partial_transpose,
    partial_transpose_many,
    product_state,
    singlet_projector,
    spatial_block,
    to_hermitian,
    werner_state,
)


def exact_singlet_tensor():
    """Independent oracle: exact Pauli expansion of |psi-><psi-| via sympy."""
    import sympy as sp

    ket = sp.Matrix([0, 1, -1, 0]) / sp.sqrt(2)
    rho = ket * ket.T
    sig = [
        sp.Matrix([[1, 0], [0, 1]]),
        sp.Matrix([[0, 1], [1, 0]]),
        sp.Matrix([[0, -sp.I], [sp.I, 0]]),
        sp.Matrix([[1, 0], [0, -1]]),
    ]
    out = np.empty((4, 4))
    for mu in range(4):
        for nu in range(4):
            kron = sp.Matrix(np.array(sp.kronecker_product(sig[mu], sig[nu])))
            val = sp.Rational(1, 4) * (rho * kron).trace()
            val = sp.simplify(val)
            assert sp.im(val) == 0
            out[mu, nu] = float(val)
    return out


class TestFromHermitian:
    def test_identity(self):
        om = from_hermitian(np.eye(4))
        expected = np.zeros((4, 4))
        expected[0, 0] = 1.0
        assert np.allclose(om, expected, atol=1e-14)

    def test_sigma3_sigma3(self):
        om = from_hermitian(np.kron(SIGMA[3], SIGMA[3]))
        expected = np.zeros((4, 4))
        expected[3, 3] = 1.0
        assert np.allclose(om, expected, atol=1e-14)

    def test_singlet_matches_symbolic_expansion(self):
        om = from_hermitian(singlet_projector())
        assert np.allclose(om, exact_singlet_tensor(), atol=1e-14)
        assert np.allclose(om, np.diag([1, -1, -1, -1]) / 4, atol=1e-14)

    def test_rejects_non_hermitian(self):
        W = np.eye(4, dtype=complex)
        W[0, 1] = 1e-6
        with pytest.raises(NotHermitianError):
            from_hermitian(W)

    def test_output_is_real_for_random_hermitian(self, rng):
        for _ in range(50):
            A = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
            W = A + A.conj().T
            om = from_hermitian(W)
            assert om.dtype == np.float64
            assert np.allclose(to_hermitian(om), W, atol=1e-12)


class TestToHermitian:
    def test_time_component(self):
        assert np.allclose(to_hermitian(np.diag([1.0, 0, 0, 0])), np.eye(4))

    def test_singlet(self):
        got = to_hermitian(np.diag([1, -1, -1, -1]) / 4)
        assert np.allclose(got, singlet_projector(), atol=1e-14)

    def test_zero(self):
        assert np.allclose(to_hermitian(np.zeros((4, 4))), np.zeros((4, 4)))

    def test_round_trip_random_tensors(self, rng):
        oms = rng.standard_normal((1000, 4, 4))
        Ws = np.einsum("zmn,mnab->zab", oms, np.einsum("mab,ncd->mnacbd", SIGMA, SIGMA).reshape(4, 4, 4, 4))
        back = from_hermitian_many(Ws)
        assert np.max(np.abs(back - oms)) < 1e-12

    def test_trace_is_four_omega00(self, rng):
        for _ in range(100):
            om = rng.standard_normal((4, 4))
            assert abs(np.trace(to_hermitian(om)).real - 4 * om[0, 0]) < 1e-12


class TestPartialTranspose:
    def test_diagonal_product_states_unchanged(self):
        rho = np.kron(np.diag([0.7, 0.3]), np.diag([0.2, 0.8]))
        assert np.allclose(partial_transpose(rho), rho)

    def test_singlet_eigenvalues(self):
        # tetrahedron eigenvalue formula on the reflected coordinates
        # (1,-1,1,-1)/4: {1 - e1 + e2 + e1 e2}/4 -> {1/2, 1/2, 1/2, -1/2}
        expected = sorted(
            (1 + e1 * (-1) + e2 * 1 - e1 * e2 * (-1)) / 4
            for e1 in (1, -1)
            for e2 in (1, -1)
        )
        got = np.linalg.eigvalsh(partial_transpose(singlet_projector()))
        assert np.allclose(got, expected, atol=1e-12)
        assert np.allclose(got, [-0.5, 0.5, 0.5, 0.5], atol=1e-12)

    def test_involution(self, rng):
        for _ in range(100):
            A = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
            W = A + A.conj().T
            assert np.allclose(partial_transpose(partial_transpose(W)), W)

    def test_acts_as_nu2_column_flip(self, rng):
        for _ in range(100):
            A = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
            W = A + A.conj().T
            om = from_hermitian(W)
            om_pt = from_hermitian(partial_transpose(W))
            flipped = om.copy()
            flipped[:, 2] = -flipped[:, 2]
            assert np.allclose(om_pt, flipped, atol=1e-12)

    def test_batch_matches_single(self, rng):
        Ws = rng.standard_normal((20, 4, 4)) + 1j * rng.standard_normal((20, 4, 4))
        Ws = Ws + np.conj(np.transpose(Ws, (0, 2, 1)))
        batch = partial_transpose_many(Ws)
        for k in range(20):
            assert np.allclose(batch[k], partial_transpose(Ws[k]))


class TestProductState:
    def test_maximally_mixed(self):
        q = np.array([0.5, 0, 0, 0])
        assert np.allclose(product_state(q, q), np.eye(4) / 4)

    def test_projector_00(self):
        q = np.array([1, 0, 0, 1.0]) / 2
        rho = product_state(q, q)
        expected = np.zeros((4, 4))
        expected[0, 0] = 1.0
        assert np.allclose(rho, expected)

    def test_pairing_identity(self, rng):
        # Tr(W rho_a x rho_b) = 4 q_a^T omega q_b
        for _ in range(100):
            na = rng.standard_normal(3)
            nb = rng.standard_normal(3)
            qa = np.concatenate([[np.linalg.norm(na) + rng.uniform(0, 1)], na])
            qb = np.concatenate([[np.linalg.norm(nb) + rng.uniform(0, 1)], nb])
            A = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
            W = A + A.conj().T
            om = from_hermitian(W)
            lhs = np.trace(W @ product_state(qa, qb)).real
            assert abs(lhs - 4 * qa @ om @ qb) < 1e-10

    def test_rejects_spacelike(self):
        with pytest.raises(NotInLightConeError):
            product_state(np.array([0.1, 1, 0, 0]), np.array([1.0, 0, 0, 0]))
        with pytest.raises(NotInLightConeError):
            product_state(np.array([-1.0, 0, 0, 0]), np.array([1.0, 0, 0, 0]))

    def test_positive_semidefinite(self, rng):
        for _ in range(20):
            n = rng.standard_normal(3)
            n /= np.linalg.norm(n)
            q = 0.5 * np.concatenate([[1.0], rng.uniform(0, 1) * n])
            rho = product_state(q, q)
            assert np.linalg.eigvalsh(rho)[0] > -1e-12


class TestSpatialBlock:
    def test_diagonal(self):
        assert np.allclose(
            spatial_block(np.diag([1.0, 2.0, 3.0, 4.0])), np.diag([2.0, 3.0, 4.0])
        )

    def test_cross_terms_dropped(self):
        om = np.zeros((4, 4))
        om[0, 1] = 5.0
        assert np.allclose(spatial_block(om), np.zeros((3, 3)))

    def test_singlet(self):
        om = from_hermitian(singlet_projector())
        assert np.allclose(spatial_block(om), -np.eye(3) / 4, atol=1e-14)


class TestStates:
    def test_bell_projectors_are_rank_one(self):
        for k in ("phi+", "phi-", "psi+", "psi-"):
            P = bell_projector(k)
            assert np.allclose(P @ P, P, atol=1e-14)
            assert abs(np.trace(P) - 1) < 1e-14

    def test_werner_interpolates(self):
        assert np.allclose(werner_state(0.0), maximally_mixed())
        assert np.allclose(werner_state(1.0), singlet_projector())


class TestOperatorJson:
    def test_round_trip(self, rng):
        A = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        W = A + A.conj().T
        W2 = operator_from_json(json.loads(json.dumps(operator_to_json(W))))
        assert np.allclose(W, W2, atol=1e-15)

    def test_pauli_form(self):
        W = operator_from_json({"pauli": (np.diag([1, -1, -1, -1]) / 4).tolist()})
        assert np.allclose(W, singlet_projector(), atol=1e-14)

    def test_exactly_one_form(self):
        with pytest.raises(ValueError):
            operator_from_json({"re": np.eye(4).tolist()})
        with pytest.raises(ValueError):
            operator_from_json(
                {"re": np.eye(4).tolist(), "im": np.zeros((4, 4)).tolist(), "pauli": np.eye(4).tolist()}
            )
        with pytest.raises(ValueError):
            operator_from_json([1, 2, 3])
