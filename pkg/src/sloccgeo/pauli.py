"""Pauli-tensor representation of two-qubit operators.

A 4x4 Hermitian operator W is written as W = omega_{mu nu} sigma^mu (x) sigma^nu
with mu, nu in {0,1,2,3}, sigma^0 the identity and sigma^1..3 the Pauli
matrices; omega is the real 4x4 coefficient tensor.  Tr(sigma^mu sigma^nu) =
2 delta^{mu nu} fixes the normalization omega = Tr(W sigma^mu (x) sigma^nu)/4.
The first tensor factor is Alice's, the second Bob's.
"""

from __future__ import annotations

import numpy as np

from .errors import NotHermitianError, NotInLightConeError

HERMITIAN_ATOL = 1e-12
TRACE_IMAG_ATOL = 1e-10
LIGHTCONE_ATOL = 1e-10

SIGMA0 = np.eye(2, dtype=complex)
SIGMA1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA3 = np.array([[1, 0], [0, -1]], dtype=complex)
SIGMA = np.stack([SIGMA0, SIGMA1, SIGMA2, SIGMA3])

# KRON[mu, nu] = sigma^mu (x) sigma^nu, the 16 basis operators
KRON = np.einsum("mab,ncd->mnacbd", SIGMA, SIGMA).reshape(4, 4, 4, 4)

ETA = np.diag([1.0, -1.0, -1.0, -1.0])


def check_hermitian(W, atol=HERMITIAN_ATOL):
    """Raise NotHermitianError unless W is a 4x4 Hermitian matrix."""
    W = np.asarray(W, dtype=complex)
    if W.shape != (4, 4):
        raise NotHermitianError(f"expected a 4x4 matrix, got shape {W.shape}")
    resid = np.max(np.abs(W - W.conj().T))
    if resid > atol:
        raise NotHermitianError(f"symmetry residual {resid:.3e} exceeds {atol:.1e}")
    return W


def from_hermitian(W):
    """Pauli tensor of a Hermitian operator: omega[mu,nu] = Tr(W sigma^mu(x)sigma^nu)/4.

    Raises NotHermitianError if the symmetry check fails or the traces carry
    an imaginary residue above 1e-10.
    """
    W = check_hermitian(W)
    traces = 0.25 * np.einsum("ab,mnba->mn", W, KRON)
    imag = np.max(np.abs(traces.imag))
    if imag > TRACE_IMAG_ATOL:
        raise NotHermitianError(f"imaginary trace residue {imag:.3e}")
    return np.ascontiguousarray(traces.real)


def from_hermitian_many(Ws):
    """Batch Pauli tensors for a stack of Hermitian operators (n, 4, 4)."""
    Ws = np.asarray(Ws, dtype=complex)
    resid = np.max(np.abs(Ws - np.conj(np.transpose(Ws, (0, 2, 1)))))
    if resid > HERMITIAN_ATOL:
        raise NotHermitianError(f"symmetry residual {resid:.3e}")
    return np.ascontiguousarray(
        0.25 * np.einsum("zab,mnba->zmn", Ws, KRON).real
    )


def partial_transpose_many(Ws):
    """Batch partial transpose on the second factor for a stack (n, 4, 4)."""
    Ws = np.asarray(Ws, dtype=complex)
    T = Ws.reshape(-1, 2, 2, 2, 2)
    return np.ascontiguousarray(T.transpose(0, 1, 4, 3, 2).reshape(-1, 4, 4))


def to_hermitian(omega):
    """Hermitian operator sum_{mu,nu} omega[mu,nu] sigma^mu (x) sigma^nu."""
    omega = np.asarray(omega, dtype=float)
    if omega.shape != (4, 4):
        raise ValueError(f"expected a 4x4 real tensor, got shape {omega.shape}")
    return np.einsum("mn,mnab->ab", omega, KRON)


def partial_transpose(W):
    """Transpose on the second (Bob's) tensor factor.

    In Pauli coordinates this flips the sign of the nu=2 column, since
    sigma^2 is the only antisymmetric basis element.
    """
    W = np.asarray(W, dtype=complex)
    T = W.reshape(2, 2, 2, 2)          # [a1, b1, a2, b2]
    return np.ascontiguousarray(T.transpose(0, 3, 2, 1).reshape(4, 4))


def check_forward_lightcone(q, atol=LIGHTCONE_ATOL):
    """Raise NotInLightConeError unless q0 >= 0 and q0^2 >= |vec q|^2."""
    q = np.asarray(q, dtype=float)
    if q.shape != (4,):
        raise NotInLightConeError(f"expected a 4-vector, got shape {q.shape}")
    minkowski = q[0] * q[0] - q[1:] @ q[1:]
    if q[0] < -atol or minkowski < -atol:
        raise NotInLightConeError(
            f"q0={q[0]:.6g}, q.q={minkowski:.6g} outside the closed forward cone"
        )
    return q


def single_qubit_operator(q):
    """q_mu sigma^mu for a real 4-vector q."""
    q = np.asarray(q, dtype=float)
    return np.einsum("m,mab->ab", q, SIGMA)


def product_state(q_a, q_b):
    """(q_a . sigma) (x) (q_b . sigma) for forward light-cone 4-vectors.

    The trace pairing with any operator W is Tr(W rho_a (x) rho_b) =
    4 q_a^T omega q_b.
    """
    q_a = check_forward_lightcone(q_a)
    q_b = check_forward_lightcone(q_b)
    return np.kron(single_qubit_operator(q_a), single_qubit_operator(q_b))


def spatial_block(omega):
    """The 3x3 submatrix omega[i,j], i,j in {1,2,3}."""
    omega = np.asarray(omega, dtype=float)
    return np.ascontiguousarray(omega[1:, 1:])


# ---------- elementary states ----------

_BELL_KETS = {
    "phi+": np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2),
    "phi-": np.array([1, 0, 0, -1], dtype=complex) / np.sqrt(2),
    "psi+": np.array([0, 1, 1, 0], dtype=complex) / np.sqrt(2),
    "psi-": np.array([0, 1, -1, 0], dtype=complex) / np.sqrt(2),
}


def bell_projector(which="psi-"):
    """Projector onto one of the four Bell states ('phi+','phi-','psi+','psi-')."""
    ket = _BELL_KETS[which]
    return np.outer(ket, ket.conj())


def singlet_projector():
    return bell_projector("psi-")


def maximally_mixed():
    return np.eye(4, dtype=complex) / 4.0


def werner_state(p):
    """p |psi-><psi-| + (1-p) I/4."""
    return p * singlet_projector() + (1.0 - p) * maximally_mixed()


# ---------- operator JSON format ----------


def operator_from_json(obj):
    """Parse {"re": 4x4, "im": 4x4} or {"pauli": 4x4 real} into a 4x4 complex matrix.

    Exactly one of the two forms must be present.
    """
    if not isinstance(obj, dict):
        raise ValueError("operator JSON must be an object")
    keys = set(obj.keys())
    if keys == {"re", "im"}:
        re = np.asarray(obj["re"], dtype=float)
        im = np.asarray(obj["im"], dtype=float)
        if re.shape != (4, 4) or im.shape != (4, 4):
            raise ValueError("'re' and 'im' must both be 4x4 arrays")
        return re + 1j * im
    if keys == {"pauli"}:
        omega = np.asarray(obj["pauli"], dtype=float)
        if omega.shape != (4, 4):
            raise ValueError("'pauli' must be a 4x4 real array")
        return to_hermitian(omega)
    raise ValueError('operator JSON must contain exactly the keys {"re","im"} or {"pauli"}')


def operator_to_json(W):
    """Serialize a 4x4 complex matrix as {"re": ..., "im": ...} (plain lists)."""
    W = np.asarray(W, dtype=complex)
    return {"re": W.real.tolist(), "im": W.imag.tolist()}
