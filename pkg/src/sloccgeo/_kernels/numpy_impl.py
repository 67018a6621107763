"""Pure-numpy kernel implementations (vectorized fallback path)."""

import numpy as np

from . import rng as _rng

HULL_STEP0 = 0.1
HULL_STEP_MIN = 1e-8
HULL_MAX_ITER = 160


def eigvals4_batch(mats):
    """Eigenvalues of a stack of real 4x4 matrices via LAPACK."""
    lam = np.linalg.eigvals(mats)
    ok = np.ones(mats.shape[0], dtype=bool)
    return np.ascontiguousarray(lam.real), np.ascontiguousarray(lam.imag), ok


def sample_direction_sets(seed, ids):
    """Six unit sphere directions per id, one splitmix64 stream per id."""
    ids = np.asarray(ids, dtype=np.uint64)
    states = _rng.stream_states(seed, ids)
    out = np.empty((ids.shape[0], 6, 3))
    for v in range(6):
        states, out[:, v, :] = _rng.next_unit3_batch(states)
    return out


def _circle_hull_support(u):
    """Support function of the convex hull of the three unit circles."""
    return np.sqrt(np.clip(1.0 - np.min(u * u, axis=-1), 0.0, None))


def _tangent_basis(u):
    """Deterministic orthonormal tangent pair at each unit vector (n,3)."""
    n = u.shape[0]
    k = np.argmin(np.abs(u), axis=1)
    e = np.zeros((n, 3))
    e[np.arange(n), k] = 1.0
    t1 = e - np.einsum("ij,ij->i", e, u)[:, None] * u
    t1 /= np.linalg.norm(t1, axis=1)[:, None]
    t2 = np.cross(u, t1)
    return t1, t2

def _refine(coords, u0, g0):
    """Spherical pattern search (8-direction tangent stencil, step halving)."""
    n = coords.shape[0]
    u = u0.copy()
    g = g0.copy()
    rsq = 1.0 / np.sqrt(2.0)
    step = np.full(n, HULL_STEP0)
    for _ in range(HULL_MAX_ITER):
        if np.all(step < HULL_STEP_MIN):
            break
        t1, t2 = _tangent_basis(u)
        improved = np.zeros(n, dtype=bool)
        for d in (
            t1,
            -t1,
            t2,
            -t2,
            (t1 + t2) * rsq,
            (t1 - t2) * rsq,
            (-t1 + t2) * rsq,
            (-t1 - t2) * rsq,
        ):
            v = u + step[:, None] * d
            v /= np.linalg.norm(v, axis=1)[:, None]
            gv = _circle_hull_support(v) - np.einsum("ij,ij->i", coords, v)
            take = gv < g
            u[take] = v[take]
            g[take] = gv[take]
            improved |= take
        step[~improved] *= 0.5
    return g


def _analytic_start(coords, k):
    """Minimizer of sqrt(1-u_k^2) - c.u ignoring the region constraint.

    A pole of axis k when the transverse part of c is short, otherwise the
    stationary point with the transverse part aligned to c.
    """
    n = coords.shape[0]
    ck = coords[:, k]
    cp = np.sqrt(np.maximum(np.sum(coords * coords, axis=1) - ck * ck, 0.0))
    u = np.zeros((n, 3))
    pole = cp <= 1.0 + 1e-15
    u[pole, k] = np.where(ck[pole] >= 0.0, 1.0, -1.0)
    out = ~pole
    if np.any(out):
        d = np.hypot(cp[out] - 1.0, ck[out])
        r = (cp[out] - 1.0) / d
        u[out] = coords[out] * (r / cp[out])[:, None]
        u[out, k] = ck[out] / d
    return u


_SMAX = 1.0 / np.sqrt(3.0)


def _boundary_value(s, gamma, delta):
    # f along the region boundary |u_i| = |u_j| = s, |u_k| = sqrt(1-2s^2)
    return (
        np.sqrt(1.0 - s * s)
        - gamma * s
        - delta * np.sqrt(np.clip(1.0 - 2.0 * s * s, 0.0, None))
    )


def _boundary_min(gamma, delta):
    """Vectorized 1-D minimum over s in [0, 3^-1/2] by iterated grid zoom."""
    n = gamma.shape[0]
    lo = np.zeros(n)
    hi = np.full(n, _SMAX)
    best = np.minimum(
        _boundary_value(lo, gamma, delta), _boundary_value(hi, gamma, delta)
    )
    ticks = np.linspace(0.0, 1.0, 33)
    for _ in range(6):
        S = lo[:, None] + (hi - lo)[:, None] * ticks[None, :]
        vals = _boundary_value(S, gamma[:, None], delta[:, None])
        b = np.argmin(vals, axis=1)
        best = np.minimum(best, vals[np.arange(n), b])
        idx = np.clip(b, 1, 31)
        width = hi - lo
        new_lo = lo + width * ticks[idx - 1]
        new_hi = lo + width * ticks[idx + 1]
        lo, hi = new_lo, new_hi
    return best


def _enumeration_margins(coords):
    """Candidate enumeration: the dominant corner, the interior stationary
    point of each face function, and the three dominant boundary curves.

    Along a boundary the objective decreases in both sign-aggregated
    coefficients, so only the fully aligned sign choice can host the
    minimum.
    """
    ab = np.abs(coords)
    best = np.sqrt(2.0 / 3.0) - np.sum(ab, axis=1) / np.sqrt(3.0)
    for k in range(3):
        u = _analytic_start(coords, k)
        best = np.minimum(
            best, _circle_hull_support(u) - np.einsum("ij,ij->i", coords, u)
        )
    for k in range(3):
        i, j = [ax for ax in range(3) if ax != k]
        gamma = ab[:, i] + ab[:, j]
        delta = ab[:, k]
        best = np.minimum(best, _boundary_min(gamma, delta))
    return best


def hull_margins(coords, grid):
    """min_u [support(u) - c.u] for each coordinate row.

    Coarse minimum over the geodesic grid per support region (the argmin
    axis of |u|) refined by a deterministic spherical pattern search,
    combined with the analytic candidate enumeration; the deepest result
    wins.
    """
    coords = np.asarray(coords, dtype=float)
    n = coords.shape[0]
    if n == 0:
        return np.empty(0)
    h_grid = _circle_hull_support(grid)
    region = np.argmin(grid * grid, axis=1)
    out = _enumeration_margins(coords)
    chunk = 8192
    for k in range(3):
        sel = region == k
        sub = grid[sel]
        hsub = h_grid[sel]
        u = np.empty((n, 3))
        g = np.empty(n)
        for s in range(0, n, chunk):
            e = min(n, s + chunk)
            vals = hsub[None, :] - coords[s:e] @ sub.T
            best = np.argmin(vals, axis=1)
            u[s:e] = sub[best]
            g[s:e] = vals[np.arange(e - s), best]
        out = np.minimum(out, _refine(coords, u, g))
    return out
