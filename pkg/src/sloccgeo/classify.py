"""Membership predicates for the three nested cones and their duality.

Separable states, states, and potential entanglement witnesses form nested
convex cones; their equivalence classes are the octahedron |x|+|y|+|z| <= 1,
the tetrahedron (four half-spaces from the canonical-form eigenvalues), and
the unit cube.  The closed-form pairing
4(w0 w0' - w1 w1' - w2 w2' + w3 w3') is the infimum of Tr(W^N W'^M) over all
filter pairs and carries the witness/state duality to three dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import (
    ComplexSpectrumError,
    DegenerateClassError,
    NotAStateError,
    SloccGeoError,
)
from .lorentz import (
    LorentzSV,
    lorentz_singular_values,
    lorentz_svd,
    slocc_coord,
    tetrahedral_orbit,
)
from .pauli import check_hermitian, from_hermitian, partial_transpose

STATE_PSD_RTOL = 1e-10
WITNESS_PAIRING_ATOL = 1e-9
MEMBERSHIP_ATOL = 1e-9
DETECTION_ATOL = 1e-9


class Membership(NamedTuple):
    member: bool
    margin: float


@dataclass
class Classification:
    is_state: bool
    is_separable: bool
    is_potential_witness: bool
    coords: np.ndarray | None
    eigenvalues: np.ndarray
    coords_error: str | None = None


def _trace_scale(W):
    return max(1.0, abs(float(np.real(np.trace(W)))))


def is_state(W):
    """True iff W is Hermitian positive semidefinite (up to trace-scaled noise)."""
    W = check_hermitian(W)
    lo = float(np.linalg.eigvalsh(W)[0])
    return lo >= -STATE_PSD_RTOL * _trace_scale(W)


def is_ppt(rho):
    """Positivity of the partial transpose; requires a state input."""
    rho = check_hermitian(rho)
    if not is_state(rho):
        raise NotAStateError("is_ppt requires a positive semidefinite input")
    pt = partial_transpose(rho)
    lo = float(np.linalg.eigvalsh(pt)[0])
    return lo >= -STATE_PSD_RTOL * _trace_scale(rho)


# ---------- potential witnesses ----------

def _witness_starts():
    # 20 deterministic unit vectors for the alternating minimization
    starts = []
    for i in range(3):
        for s in (1.0, -1.0):
            v = np.zeros(3)
            v[i] = s
            starts.append(v)
    for sx in (1.0, -1.0):
        for sy in (1.0, -1.0):
            for sz in (1.0, -1.0):
                starts.append(np.array([sx, sy, sz]) / np.sqrt(3.0))
    starts.append(np.array([1.0, 1.0, 0.0]) / np.sqrt(2.0))
    starts.append(np.array([-1.0, 1.0, 0.0]) / np.sqrt(2.0))
    starts.append(np.array([0.0, 1.0, 1.0]) / np.sqrt(2.0))
    starts.append(np.array([0.0, -1.0, 1.0]) / np.sqrt(2.0))
    starts.append(np.array([1.0, 0.0, 1.0]) / np.sqrt(2.0))
    starts.append(np.array([1.0, 0.0, -1.0]) / np.sqrt(2.0))
    return starts


_STARTS = _witness_starts()


def min_product_pairing(omega, n_random=1000, seed=0xBE11):
    """min over product states of the pairing q_a^T omega q_b, q = (1, u), |u| = 1.

    The pairing equals Tr(W rho_a (x) rho_b) for normalized product states.
    Alternating minimization (each side's optimum is a normalized linear
    image of the other) from 20 deterministic starts plus seeded random
    probes.
    """
    omega = np.asarray(omega, dtype=float)
    c = omega[0, 1:]       # couples u_b on the left argument
    r = omega[1:, 0]
    S = omega[1:, 1:]

    def pairing(ua, ub):
        return omega[0, 0] + r @ ua + c @ ub + ua @ S @ ub

    def alternate(ub):
        ua = np.zeros(3)
        val = np.inf
        for _ in range(100):
            g = r + S @ ub
            n = np.linalg.norm(g)
            ua = -g / n if n > 0 else ua
            g = c + S.T @ ua
            n = np.linalg.norm(g)
            ub = -g / n if n > 0 else ub
            new = pairing(ua, ub)
            if new > val - 1e-15:
                val = min(val, new)
                break
            val = new
        return val

    best = min(alternate(ub.copy()) for ub in _STARTS)
    rng = np.random.default_rng(seed)
    for _ in range(n_random):
        ua = rng.standard_normal(3)
        ua /= np.linalg.norm(ua)
        ub = rng.standard_normal(3)
        ub /= np.linalg.norm(ub)
        best = min(best, pairing(ua, ub))
    return best


def is_potential_witness(W):
    """True iff Tr(W rho_s) >= -1e-9 for every separable (product) state.

    A successful strict Lorentz decomposition certifies the answer (the
    canonical diagonal maps the forward light-cone into itself); otherwise
    the bilinear form is minimized over product states directly.
    """
    W = check_hermitian(W)
    omega = from_hermitian(W)
    try:
        lorentz_svd(omega)
        return True
    except SloccGeoError:
        pass
    return min_product_pairing(omega) >= -WITNESS_PAIRING_ATOL


# ---------- polytope memberships ----------


def octahedron_membership(c):
    """Separable-class test: margin = 1 - (|x|+|y|+|z|)."""
    x, y, z = c
    margin = 1.0 - (abs(x) + abs(y) + abs(z))
    return Membership(margin >= -MEMBERSHIP_ATOL, margin)


def tetrahedron_membership(c):
    """State-class test via the canonical-form eigenvalue half-spaces."""
    x, y, z = c
    margin = min(
        1.0 + e1 * x + e2 * y - e1 * e2 * z for e1 in (1.0, -1.0) for e2 in (1.0, -1.0)
    )
    return Membership(margin >= -MEMBERSHIP_ATOL, margin)


def cube_membership(c):
    """Potential-witness-class test: margin = 1 - max|c_i|."""
    x, y, z = c
    margin = 1.0 - max(abs(x), abs(y), abs(z))
    return Membership(margin >= -MEMBERSHIP_ATOL, margin)


def canonical_eigenvalues(w):
    """Eigenvalues {w0 + e1 w1 + e2 w2 - e1 e2 w3} of the diagonal canonical form."""
    w0, w1, w2, w3 = w
    return np.sort(
        [w0 + e1 * w1 + e2 * w2 - e1 * e2 * w3 for e1 in (1, -1) for e2 in (1, -1)]
    )


# ---------- duality ----------


def duality_pairing(sv: LorentzSV, sv2: LorentzSV):
    """inf over filter pairs of Tr(W^N W'^M) for ordered singular values."""
    return 4.0 * (
        sv[0] * sv2[0] - sv[1] * sv2[1] - sv[2] * sv2[2] + sv[3] * sv2[3]
    )


def orbit_min_pairing(sv: LorentzSV, sv2: LorentzSV):
    """Equivalent orbit form: 4 min over the 24 representatives of sum w_a w'_a."""
    base = np.array(sv2[1:])
    best = min(
        sv[1] * v[0] + sv[2] * v[1] + sv[3] * v[2]
        for v in tetrahedral_orbit(base)
    )
    return 4.0 * (sv[0] * sv2[0] + best)


def dual_plane_detection(witness_c, rho_c):
    """True iff the witness class incriminates the state class as entangled.

    Checks min over the 24 representatives of 1 + w.r < -1e-9 (the
    supporting-plane form of the closed-form pairing).
    """
    rho = np.asarray(rho_c, dtype=float)
    best = min(
        v[0] * rho[0] + v[1] * rho[1] + v[2] * rho[2]
        for v in tetrahedral_orbit(np.asarray(witness_c, dtype=float))
    )
    return 1.0 + best < -DETECTION_ATOL


# ---------- aggregate ----------


def classify(W) -> Classification:
    """All three cone predicates plus coordinates and spectrum."""
    W = check_hermitian(W)
    eigenvalues = np.linalg.eigvalsh(W)
    state = bool(eigenvalues[0] >= -STATE_PSD_RTOL * _trace_scale(W))
    separable = state and is_ppt(W)
    witness = is_potential_witness(W) or state
    coords = None
    err = None
    try:
        coords = slocc_coord(lorentz_singular_values(from_hermitian(W)))
    except DegenerateClassError as exc:
        err = f"degenerate: {exc}"
    except ComplexSpectrumError as exc:
        err = f"complex spectrum: {exc}"
    return Classification(
        is_state=state,
        is_separable=separable,
        is_potential_witness=witness,
        coords=coords,
        eigenvalues=eigenvalues,
        coords_error=err,
    )
