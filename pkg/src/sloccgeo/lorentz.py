"""Minkowski-adjoint machinery for the SLOCC action on two-qubit operators.

The local filtering group SL(2,C) x SL(2,C) acts on the Pauli tensor as
omega -> Lambda_A omega Lambda_B^T with Lambda in the proper orthochronous
Lorentz group.  The spectrum of omega* omega, with omega* = eta omega^T eta
the Minkowski adjoint, is invariant; its square roots are the Lorentz
singular values.  They are ordered w0 >= w1 >= w2 >= |w3| with sign(w3) =
sign(det omega), and the normalized triple (w1,w2,w3)/w0 is the point
representing the operator's equivalence class in the 3-D picture.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import _kernels
from .errors import (
    BoundaryClassError,
    ComplexSpectrumError,
    DegenerateClassError,
    NotAStateError,
    NotOrthochronousError,
    NotProperLorentzError,
    NotUnitDeterminantError,
)
from .pauli import ETA, SIGMA, check_hermitian, to_hermitian

DET_ATOL = 1e-10
LORENTZ_ATOL = 1e-10
COMPLEX_SPECTRUM_RTOL = 1e-8
NEGATIVE_EIGENVALUE_RTOL = 1e-9
DEGENERATE_W0_ATOL = 1e-12
SVD_RESIDUAL_RTOL = 1e-7
EIGENVALUE_GROUP_ATOL = 1e-8


class LorentzSV(NamedTuple):
    """Ordered signed Lorentz singular values."""

    w0: float
    w1: float
    w2: float
    w3: float


@dataclass(frozen=True)
class LocalFilter:
    """Pair (A, B) of unit-determinant 2x2 matrices acting as A (x) B."""

    A: np.ndarray
    B: np.ndarray

    def __post_init__(self):
        for name, m in (("A", self.A), ("B", self.B)):
            m = np.asarray(m, dtype=complex)
            if m.shape != (2, 2):
                raise NotUnitDeterminantError(f"{name} must be 2x2")
            d = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
            if abs(d - 1.0) > DET_ATOL:
                raise NotUnitDeterminantError(f"det {name} = {d:.12g} is not 1")
            object.__setattr__(self, name, m)

    @property
    def matrix(self):
        """The 4x4 operator A (x) B."""
        return np.kron(self.A, self.B)


IDENTITY_FILTER = LocalFilter(np.eye(2, dtype=complex), np.eye(2, dtype=complex))


def minkowski_adjoint(omega):
    """eta omega^T eta with eta = diag(1,-1,-1,-1)."""
    omega = np.asarray(omega, dtype=float)
    return ETA @ omega.T @ ETA


def lorentz_singular_values(omega):
    """Signed, ordered square roots of the spectrum of omega* omega.

    Raises ComplexSpectrumError when the spectrum is genuinely complex or
    negative beyond numerical noise (the operator is then outside the class
    the decomposition covers);  eigenvalues in [-1e-9*|omega|^2, 0) are
    clamped to zero.
    """
    omega = np.asarray(omega, dtype=float)
    sv, bad = lorentz_singular_values_many(omega[None, :, :])
    if bad[0]:
        raise ComplexSpectrumError("omega* omega spectrum is not real nonnegative")
    return LorentzSV(*sv[0])


def lorentz_singular_values_many(omegas):
    """Batch Lorentz singular values.

    Returns (sv, bad) where sv has shape (n, 4) ordered/signed per the
    convention and bad marks rows with complex or genuinely negative
    spectra (their sv rows are NaN).
    """
    omegas = np.ascontiguousarray(omegas, dtype=float)
    mats = np.einsum("ab,nca,cd,nde->nbe", ETA, omegas, ETA, omegas)
    mats = np.ascontiguousarray(mats)
    re, im, ok = _kernels.eigvals4_batch(mats)
    scale = np.maximum(np.einsum("nab,nab->n", omegas, omegas), 1e-300)
    bad = ~ok
    bad |= np.max(np.abs(im), axis=1) > COMPLEX_SPECTRUM_RTOL * scale
    bad |= np.min(re, axis=1) < -NEGATIVE_EIGENVALUE_RTOL * scale
    lam = np.clip(re, 0.0, None)
    sv = np.sqrt(np.sort(lam, axis=1)[:, ::-1])
    dets = np.linalg.det(omegas)
    sv[:, 3] = np.where(dets < 0.0, -sv[:, 3], sv[:, 3])
    sv[bad] = np.nan
    return sv, bad


def slocc_coord(sv):
    """Class coordinates (w1, w2, w3)/w0; w0 must not vanish."""
    w0, w1, w2, w3 = sv
    if w0 <= DEGENERATE_W0_ATOL:
        raise DegenerateClassError(f"w0 = {w0:.3e} vanishes; no coordinate vector")
    return np.array([w1 / w0, w2 / w0, w3 / w0])


_PERMS = ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0))
_EVEN_SIGNS = ((1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1))


def tetrahedral_orbit(c):
    """The images of a coordinate triple under the 24 tetrahedral operations.

    Permutations of the entries composed with sign flips of pairs; returns
    the deduplicated set (its size divides 24).
    """
    x, y, z = float(c[0]), float(c[1]), float(c[2])
    v = (x, y, z)
    orbit = set()
    for p in _PERMS:
        for s in _EVEN_SIGNS:
            orbit.add((s[0] * v[p[0]], s[1] * v[p[1]], s[2] * v[p[2]]))
    return orbit


def orbit_array(c):
    """tetrahedral_orbit as an (m, 3) array in deterministic order."""
    return np.array(sorted(tetrahedral_orbit(c)))


# ---------- SLOCC action ----------


def apply_filter_state(rho, f: LocalFilter):
    """rho -> (A (x) B) rho (A (x) B)^dagger."""
    rho = np.asarray(rho, dtype=complex)
    M = f.matrix
    return M @ rho @ M.conj().T


def _inv2(m):
    # unit determinant 2x2 inverse
    return np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]], dtype=complex)


def apply_filter_witness(W, f: LocalFilter):
    """Contragredient action W -> (M^dagger)^-1 W M^-1, M = A (x) B.

    Leaves the trace pairing with states invariant: Tr(rho^M W^M) = Tr(rho W).
    """
    W = np.asarray(W, dtype=complex)
    Minv = np.kron(_inv2(f.A), _inv2(f.B))
    return Minv.conj().T @ W @ Minv


def check_state(rho, trace_atol=1e-10, psd_rtol=1e-10):
    """Raise NotAStateError unless rho is Hermitian, PSD and trace one."""
    try:
        rho = check_hermitian(rho, atol=1e-10)
    except Exception as exc:
        raise NotAStateError(str(exc)) from exc
    tr = float(np.real(np.trace(rho)))
    if abs(tr - 1.0) > trace_atol:
        raise NotAStateError(f"trace {tr:.12g} is not 1")
    lo = float(np.linalg.eigvalsh(rho)[0])
    if lo < -psd_rtol * max(1.0, abs(tr)):
        raise NotAStateError(f"negative eigenvalue {lo:.3e}")
    return rho


def filter_success_probability(rho, f: LocalFilter):
    """Probability that the filtering POVM element M^dagger M / |M|^2 fires.

    |M| is the spectral norm of M = A (x) B, which makes the element a valid
    POVM effect; unitary filters succeed with probability one.
    """
    rho = check_state(rho)
    MdM = np.kron(f.A.conj().T @ f.A, f.B.conj().T @ f.B)
    norm2 = (np.linalg.norm(f.A, 2) * np.linalg.norm(f.B, 2)) ** 2
    return float(np.real(np.trace(rho @ MdM))) / norm2


# ---------- SL(2,C) <-> SO+(1,3) ----------


def lorentz_from_sl2c(A):
    """The Lorentz matrix induced by A in SL(2,C) via q.sigma -> A q.sigma A^dagger.

    Lambda[nu, mu] = Re Tr(sigma^nu A sigma^mu A^dagger) / 2; the map is a
    group homomorphism onto SO+(1,3).
    """
    A = np.asarray(A, dtype=complex)
    d = A[0, 0] * A[1, 1] - A[0, 1] * A[1, 0]
    if abs(d - 1.0) > DET_ATOL:
        raise NotUnitDeterminantError(f"det = {d:.12g} is not 1")
    X = np.einsum("ab,mbc,dc->mad", A, SIGMA, A.conj())
    return 0.5 * np.real(np.einsum("nab,mba->nm", SIGMA, X))


def check_lorentz(L, atol=LORENTZ_ATOL):
    """Raise unless L is proper orthochronous Lorentz within tolerance."""
    L = np.asarray(L, dtype=float)
    if L.shape != (4, 4):
        raise NotProperLorentzError(f"expected 4x4, got {L.shape}")
    resid = np.max(np.abs(L @ ETA @ L.T - ETA))
    if resid > atol:
        raise NotProperLorentzError(f"L eta L^T residual {resid:.3e}")
    det = float(np.linalg.det(L))
    if abs(det - 1.0) > atol:
        raise NotProperLorentzError(f"det = {det:.12g} is not 1")
    if L[0, 0] <= 0.0:
        raise NotOrthochronousError(f"L[0,0] = {L[0, 0]:.6g} <= 0")
    return L


def sl2c_from_lorentz(L):
    """A unit-determinant 2x2 matrix mapping to L under lorentz_from_sl2c.

    The output is fixed up to overall sign; the sign is canonicalized so the
    entry of largest modulus has nonnegative real part (nonnegative
    imaginary part when the real part vanishes).

    Construction: the induced map X -> (L q).sigma on 2x2 matrices has the
    form X -> M X M^dagger, whose Choi matrix is the rank-one projector on
    vec(M); M is read off its principal eigenvector.
    """
    L = check_lorentz(L)
    Y = np.einsum("nm,nab->mab", L, SIGMA)
    K = 0.5 * np.einsum("mdc,mab->acbd", SIGMA, Y).reshape(4, 4)
    K = 0.5 * (K + K.conj().T)
    lam, vec = np.linalg.eigh(K)
    if lam[-1] <= 0.0 or abs(lam[:-1]).max() > 1e-8 * lam[-1]:
        raise NotProperLorentzError("induced map is not rank-one; no SL(2,C) preimage")
    M = (np.sqrt(lam[-1]) * vec[:, -1]).reshape(2, 2)
    d = M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]
    if abs(d) < 1e-12:
        raise NotProperLorentzError("degenerate preimage")
    M = M / np.sqrt(d)
    z = M.flat[int(np.argmax(np.abs(M)))]
    if z.real < 0.0 or (z.real == 0.0 and z.imag < 0.0):
        M = -M
    if np.max(np.abs(lorentz_from_sl2c(M) - L)) > 1e-8:
        raise NotProperLorentzError("preimage residual exceeds 1e-8")
    return M


# ---------- canonical form ----------


def _eta_dot(u, v):
    return u[0] * v[0] - u[1:] @ v[1:]


def _canonical_sign(v):
    return -v if v[int(np.argmax(np.abs(v)))] < 0.0 else v


def lorentz_svd(omega):
    """Pair of Lorentz transformations bringing omega to diagonal form.

    Returns (Lambda_A, sv, Lambda_B) with Lambda_A omega Lambda_B^T =
    diag(sv) within 1e-7 |omega|.  Strict classes (w0 exceeding the largest
    spatial value) always decompose; for boundary classes the construction
    is attempted with a time-like-seeded frame and verified against the
    residual, raising BoundaryClassError when the diagonal form is not
    attainable (such classes have more complicated canonical forms and are
    only detected, never decomposed).

    Lambda_B rows are the eigenvectors of omega* omega normalized to a
    Minkowski-orthonormal frame (time-like first, forward, unit spatial
    norms, deterministic signs; degenerate eigenspaces are re-orthogonalized
    from coordinate-axis seeds in index order); Lambda_A is recovered from
    the columns of omega Lambda_B^T, which are automatically eigenvectors
    of omega eta omega^T eta with the matching eigenvalue pairing.
    """
    omega = np.asarray(omega, dtype=float)
    sv = lorentz_singular_values(omega)
    norm = float(np.linalg.norm(omega))
    N = ETA @ omega.T @ ETA @ omega
    lam = np.linalg.eigvals(N)
    if np.max(np.abs(lam.imag)) > COMPLEX_SPECTRUM_RTOL * max(1.0, norm * norm):
        raise ComplexSpectrumError("omega* omega spectrum is not real")
    lam = np.sort(lam.real)[::-1]

    # group nearby eigenvalues; spectral projector of each group via
    # Lagrange interpolation on the grouped spectrum (exact for
    # diagonalizable N, and all arithmetic stays real)
    group_tol = EIGENVALUE_GROUP_ATOL * max(1.0, float(np.abs(lam).max()))
    groups = []
    i = 0
    while i < 4:
        j = i
        while j + 1 < 4 and abs(lam[j + 1] - lam[i]) <= group_tol:
            j += 1
        groups.append((float(np.mean(lam[i : j + 1])), j - i + 1))
        i = j + 1

    rows = []
    eye = np.eye(4)
    for g, (mu, k) in enumerate(groups):
        proj = np.eye(4)
        for h, (mu_h, _) in enumerate(groups):
            if h != g:
                proj = proj @ (N - mu_h * eye) / (mu - mu_h)
        cands = [proj @ eye[:, ax] for ax in range(4)]
        taken = 0
        if g == 0:
            # the leading eigenspace must carry the time-like frame vector
            v0 = cands[0]
            s0 = _eta_dot(v0, v0)
            if np.linalg.norm(v0) < 1e-8 or s0 <= 1e-10 * (v0 @ v0):
                raise BoundaryClassError(
                    "no time-like direction in the leading eigenspace"
                )
            v0 = v0 / np.sqrt(s0)
            if v0[0] < 0.0:
                v0 = -v0
            rows.append(v0)
            taken += 1
        for w in cands:
            if taken == k:
                break
            u = w.copy()
            for prev in rows:
                u = u - (_eta_dot(prev, u) / _eta_dot(prev, prev)) * prev
            nrm = np.linalg.norm(u)
            if nrm < 1e-6:
                continue
            s = _eta_dot(u, u)
            if s >= -1e-10 * nrm * nrm:
                continue
            u = _canonical_sign(u / np.sqrt(-s))
            rows.append(u)
            taken += 1
        if taken != k:
            raise BoundaryClassError("could not orthonormalize a degenerate eigenspace")

    LB = np.array(rows)
    if np.linalg.det(LB) < 0.0:
        LB[3] = -LB[3]

    # Lambda_A from the columns of K = omega Lambda_B^T, scaled by the
    # target singular values; vanishing columns completed to a frame
    K = omega @ LB.T
    d = np.array(sv)
    cols = np.zeros((4, 4))
    missing = []
    col_tol = 1e-7 * max(1.0, norm)
    for a in range(4):
        if abs(d[a]) > col_tol and np.linalg.norm(K[:, a]) > col_tol:
            cols[:, a] = K[:, a] / d[a]
        else:
            missing.append(a)
    if 0 in missing or cols[0, 0] <= 0.0:
        raise BoundaryClassError("operator does not map the forward cone forward")
    if missing:
        defined = [a for a in range(4) if a not in missing]
        rowsys = np.array([ETA @ cols[:, a] for a in defined])
        _, _, vt = np.linalg.svd(rowsys)
        null = vt[len(defined):]
        for pos, a in enumerate(missing):
            u = null[pos].copy()
            for b in range(4):
                if b in missing and missing.index(b) >= pos:
                    continue
                prev = cols[:, b]
                u = u - (_eta_dot(prev, u) / _eta_dot(prev, prev)) * prev
            s = _eta_dot(u, u)
            if s >= 0.0:
                raise BoundaryClassError("frame completion failed")
            cols[:, a] = _canonical_sign(u / np.sqrt(-s))
        if np.linalg.det(cols) < 0.0:
            cols[:, missing[-1]] = -cols[:, missing[-1]]
    LA = np.linalg.inv(cols)

    # both factors must be proper orthochronous Lorentz: for defective
    # boundary classes (no diagonal canonical form) the column construction
    # inverts exactly but leaves the Minkowski frame, which is the actual
    # detection signal
    for L in (LA, LB):
        if (
            np.max(np.abs(L @ ETA @ L.T - ETA)) > 1e-8
            or abs(np.linalg.det(L) - 1.0) > 1e-8
            or L[0, 0] <= 0.0
        ):
            raise BoundaryClassError(
                "class admits no diagonal canonical form (frame is not Lorentz)"
            )
    resid = np.max(np.abs(LA @ omega @ LB.T - np.diag(d)))
    if resid > SVD_RESIDUAL_RTOL * max(norm, 1e-30):
        raise BoundaryClassError(f"decomposition residual {resid:.3e}")
    return LA, sv, LB


def canonical_form(sv):
    """The Hermitian operator with diagonal Pauli tensor sv."""
    w = np.asarray(tuple(sv), dtype=float)
    return to_hermitian(np.diag(w))
