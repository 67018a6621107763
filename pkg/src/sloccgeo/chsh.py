"""CHSH witnesses, their circle geometry, and optimal violation.

The witness family is W_B = (2 +/- B)/2 with B the two-setting correlation
operator; its Pauli tensor has omega00 = 1 and a rank-two spatial block
whose singular values lie on the unit circle
2 w_{1,2}^2 = 1 +/- sqrt(1 - sin^2(alpha) sin^2(beta)).  A normalized state
pairs as Tr(rho W_B) = 1 + sum_ij T_ij (omega_B)_ij with T the correlation
matrix, so the best witness gives 1 - sqrt(t1^2 + t2^2) for the two largest
singular values of T; classes inside the three unit cylinders (and nothing
filtered out of them) can never violate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import NotAStateError, NotOutsideCylindersError, NotUnitVectorError
from .lorentz import (
    LocalFilter,
    apply_filter_state,
    check_state,
    lorentz_singular_values,
    lorentz_svd,
    sl2c_from_lorentz,
    slocc_coord,
)
from .pauli import SIGMA, from_hermitian, spatial_block

UNIT_NORM_ATOL = 1e-12
CYLINDER_ATOL = 1e-9
FILTER_MARGIN_ATOL = 1e-6

_AXES = "xyz"


def _unit(v, name):
    v = np.asarray(v, dtype=float)
    if v.shape != (3,):
        raise NotUnitVectorError(f"{name} must be a 3-vector")
    if abs(np.linalg.norm(v) - 1.0) > UNIT_NORM_ATOL:
        raise NotUnitVectorError(f"{name} has norm {np.linalg.norm(v):.12g}")
    return v


@dataclass(frozen=True)
class ChshDirections:
    """Measurement directions (a, a') for Alice and (b, b') for Bob."""

    a: np.ndarray
    a_prime: np.ndarray
    b: np.ndarray
    b_prime: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "a", _unit(self.a, "a"))
        object.__setattr__(self, "a_prime", _unit(self.a_prime, "a_prime"))
        object.__setattr__(self, "b", _unit(self.b, "b"))
        object.__setattr__(self, "b_prime", _unit(self.b_prime, "b_prime"))

    def angles(self):
        """(alpha, beta) with cos(alpha) = a.a', cos(beta) = b.b'."""
        ca = float(np.clip(self.a @ self.a_prime, -1.0, 1.0))
        cb = float(np.clip(self.b @ self.b_prime, -1.0, 1.0))
        return np.arccos(ca), np.arccos(cb)


@dataclass
class CylinderReport:
    """Result of the three-cylinder membership test."""

    margin: float
    member: bool
    violating_axis: int | None
    coords: np.ndarray


def _dot_sigma(v):
    return v[0] * SIGMA[1] + v[1] * SIGMA[2] + v[2] * SIGMA[3]


def chsh_operator(d: ChshDirections):
    """a.sigma (x) (b+b').sigma + a'.sigma (x) (b-b').sigma."""
    return np.kron(_dot_sigma(d.a), _dot_sigma(d.b + d.b_prime)) + np.kron(
        _dot_sigma(d.a_prime), _dot_sigma(d.b - d.b_prime)
    )


def chsh_witness(d: ChshDirections, sign=1):
    """(2 + sign * B)/2; the minus sign is the plus witness with b, b' flipped."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return np.eye(4, dtype=complex) + 0.5 * sign * chsh_operator(d)


def chsh_circle_values(alpha, beta):
    """Spatial singular values of the witness: on the unit circle, w1 >= w2 >= 0."""
    disc = np.sqrt(max(0.0, 1.0 - np.sin(alpha) ** 2 * np.sin(beta) ** 2))
    w1 = np.sqrt(0.5 * (1.0 + disc))
    w2 = np.sqrt(max(0.0, 0.5 * (1.0 - disc)))
    return w1, w2


def directions_from_angles(alpha, beta):
    """A representative direction quadruple in the xy-plane realizing (alpha, beta)."""
    a = np.array([1.0, 0.0, 0.0])
    ap = np.array([np.cos(alpha), np.sin(alpha), 0.0])
    b = np.array([np.cos(beta / 2.0), np.sin(beta / 2.0), 0.0])
    bp = np.array([np.cos(beta / 2.0), -np.sin(beta / 2.0), 0.0])
    return ChshDirections(a, ap, b, bp)


def correlation_matrix(rho):
    """T_ij = Tr(rho sigma_i (x) sigma_j) for a normalized state."""
    return 4.0 * spatial_block(from_hermitian(rho))


def horodecki_optimum(rho):
    """Closed-form minimum of Tr(rho W_B) over all CHSH witnesses.

    Returns (value, plane) with value = 1 - sqrt(t1^2 + t2^2) for the two
    largest singular values of the correlation matrix T; the state violates
    some CHSH inequality iff the value is negative.  The time-space cross
    components of rho do not enter.  The plane id names the coordinate pair
    carrying the two largest singular directions ("xy", "yz" or "xz").
    """
    rho = check_state(rho)
    T = correlation_matrix(rho)
    _, s, vt = np.linalg.svd(T)
    value = 1.0 - float(np.hypot(s[0], s[1]))
    # attach each singular value to the axis its right-singular vector leans on
    axes = [-1, -1, -1]
    used = set()
    for k in range(3):
        for ax in np.argsort(-np.abs(vt[k])):
            if int(ax) not in used:
                axes[k] = int(ax)
                used.add(int(ax))
                break
    plane = "".join(sorted(_AXES[axes[0]] + _AXES[axes[1]]))
    return value, plane


def cylinder_membership(c):
    """Membership in the intersection of the three unit cylinders.

    margin = 1 - sqrt(max pairwise coordinate square sum); classes inside
    (margin >= -1e-9) satisfy every CHSH inequality, as does everything
    filtered from them.
    """
    c = np.asarray(c, dtype=float)
    x, y, z = c
    pair = np.array([y * y + z * z, x * x + z * z, x * x + y * y])  # cylinder axes x,y,z
    worst = int(np.argmax(pair))
    margin = 1.0 - float(np.sqrt(pair[worst]))
    member = margin >= -CYLINDER_ATOL
    return CylinderReport(
        margin=margin,
        member=member,
        violating_axis=None if member else worst,
        coords=c,
    )


def slocc_chsh_satisfies(rho):
    """Cylinder test of the state's SLOCC class (Lorentz SVs, then membership)."""
    rho = check_state(rho)
    sv = lorentz_singular_values(from_hermitian(rho))
    return cylinder_membership(slocc_coord(sv))


class ViolationPlan(NamedTuple):
    """A filter and measurement directions certifying a CHSH violation."""

    filter: LocalFilter
    directions: ChshDirections
    value: float
    filtered_state: np.ndarray


def _sgn(x):
    return -1.0 if x < 0.0 else 1.0


def filter_to_violation(rho):
    """Construct a local filter and directions that break a CHSH inequality.

    Applies the canonical-form filter (from the Lorentz decomposition
    realized as SL(2,C) operations), then the saturating directions in the
    plane of the two largest coordinates; the achieved pairing equals
    1 - sqrt(max pair sum) and is strictly negative.  Raises
    NotOutsideCylindersError for classes inside the cylinders and
    BoundaryClassError for non-strict classes.
    """
    rho = np.asarray(rho, dtype=complex)
    tr = float(np.real(np.trace(rho)))
    if tr <= 1e-12:
        raise NotAStateError("nonpositive trace")
    rho_n = check_state(rho / tr)
    omega = from_hermitian(rho_n)
    LA, sv, LB = lorentz_svd(omega)
    coords = slocc_coord(sv)
    report = cylinder_membership(coords)
    if report.margin >= -FILTER_MARGIN_ATOL:
        raise NotOutsideCylindersError(
            f"cylinder margin {report.margin:.3e} is not below -1e-6"
        )
    f = LocalFilter(sl2c_from_lorentz(LA), sl2c_from_lorentz(LB))
    filtered = apply_filter_state(rho_n, f)
    filtered = filtered / np.real(np.trace(filtered))

    axis = report.violating_axis
    i, j = [k for k in range(3) if k != axis]
    ti, tj = coords[i], coords[j]
    chi = np.arctan2(abs(tj), abs(ti))
    ei = np.eye(3)[i]
    ej = np.eye(3)[j]
    d = ChshDirections(
        a=-_sgn(ti) * ei,
        a_prime=-_sgn(tj) * ej,
        b=np.cos(chi) * ei + np.sin(chi) * ej,
        b_prime=np.cos(chi) * ei - np.sin(chi) * ej,
    )
    value = float(np.real(np.trace(filtered @ chsh_witness(d))))
    return ViolationPlan(filter=f, directions=d, value=value, filtered_state=filtered)


# ---------- direct numeric minimization (cross-check oracle) ----------

_INVGOLD = (np.sqrt(5.0) - 1.0) / 2.0


def _golden_min(fun, lo, hi, iters=40):
    a, b = lo, hi
    c = b - _INVGOLD * (b - a)
    d = a + _INVGOLD * (b - a)
    fc, fd = fun(c), fun(d)
    for _ in range(iters):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INVGOLD * (b - a)
            fc = fun(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVGOLD * (b - a)
            fd = fun(d)
    return (a + b) / 2.0


def chsh_minimum_numeric(rho, n_grid=16, max_sweeps=200):
    """Deterministic direct minimization of Tr(rho W_B) over the 8 direction angles.

    Cyclic coordinate descent: per spherical angle, a coarse 16-point grid
    scan followed by golden-section refinement.  The pairing is linear in
    each direction vector, so every line scan reduces to dots with a fixed
    gradient vector.  The plus-sign witness family already covers the minus
    sign (flipping b, b' negates the correlation operator).  Returns
    (value, directions).
    """
    rho = check_state(rho)
    T = correlation_matrix(rho)

    angles = np.array(
        [np.pi / 2, 0.0, np.pi / 2, np.pi / 3, np.pi / 2, np.pi / 6, np.pi / 2, 2.0]
    )

    def vec(theta, phi):
        s = np.sin(theta)
        return np.array([s * np.cos(phi), s * np.sin(phi), np.cos(theta)])

    vecs = [vec(angles[2 * m], angles[2 * m + 1]) for m in range(4)]

    def total():
        return 1.0 + 0.5 * (
            vecs[0] @ T @ (vecs[2] + vecs[3]) + vecs[1] @ T @ (vecs[2] - vecs[3])
        )

    def linear_part(m):
        # pairing = offset + v_m . grad for the vector being scanned
        if m == 0:
            grad = 0.5 * T @ (vecs[2] + vecs[3])
            offset = 1.0 + 0.5 * vecs[1] @ T @ (vecs[2] - vecs[3])
        elif m == 1:
            grad = 0.5 * T @ (vecs[2] - vecs[3])
            offset = 1.0 + 0.5 * vecs[0] @ T @ (vecs[2] + vecs[3])
        elif m == 2:
            grad = 0.5 * T.T @ (vecs[0] + vecs[1])
            offset = 1.0 + 0.5 * (vecs[0] - vecs[1]) @ T @ vecs[3]
        else:
            grad = 0.5 * T.T @ (vecs[0] - vecs[1])
            offset = 1.0 + 0.5 * (vecs[0] + vecs[1]) @ T @ vecs[2]
        return grad, offset

    best = total()
    grid = np.linspace(0.0, 2.0 * np.pi, n_grid, endpoint=False)
    span = 2.0 * np.pi / n_grid
    for _ in range(max_sweeps):
        prev = best
        for k in range(8):
            m, is_theta = divmod(k, 2)
            theta, phi = angles[2 * m], angles[2 * m + 1]
            grad, offset = linear_part(m)

            if is_theta == 0:  # scan theta, phi fixed
                cp, sp = np.cos(phi), np.sin(phi)

                def vk(x):
                    s = np.sin(x)
                    return np.array([s * cp, s * sp, np.cos(x)])

                V = np.stack(
                    [np.sin(grid) * cp, np.sin(grid) * sp, np.cos(grid)], axis=1
                )
            else:  # scan phi, theta fixed
                st, ct = np.sin(theta), np.cos(theta)

                def vk(x):
                    return np.array([st * np.cos(x), st * np.sin(x), ct])

                V = np.stack(
                    [st * np.cos(grid), st * np.sin(grid), np.full(n_grid, ct)], axis=1
                )

            def fk(x):
                return offset + vk(x) @ grad

            orig = angles[k]
            vals = V @ grad + offset
            gbest = int(np.argmin(vals))
            center = grid[gbest] if vals[gbest] < best else orig
            x = _golden_min(fk, center - span, center + span)
            fx = fk(x)
            if fx <= min(vals[gbest], best):
                angles[k] = x
                best = fx
            elif vals[gbest] < best:
                angles[k] = grid[gbest]
                best = vals[gbest]
            vecs[m] = vec(angles[2 * m], angles[2 * m + 1])
        if prev - best < 1e-14:
            break
    d = ChshDirections(vecs[0], vecs[1], vecs[2], vecs[3])
    return best, d
