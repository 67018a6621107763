"""Numba kernel implementations (hot path).

The eigensolver source is shared with eig4.py and compiled here; the rng and
hull-refinement loops mirror the numpy fallback exactly (same constants,
same update order) so both backends agree to rounding.
"""

import numba
import numpy as np

from . import eig4 as _eig4

_U = np.uint64

_balance = numba.njit(cache=True)(_eig4.balance)
_hessenberg = numba.njit(cache=True)(_eig4.hessenberg)
_hqr = numba.njit(cache=True)(_eig4.hqr)


@numba.njit(cache=True)
def _eigvals4(a, wr, wi):
    h = a.copy()
    _balance(h)
    _hessenberg(h)
    return _hqr(h, wr, wi)


@numba.njit(cache=True, parallel=True)
def _eigvals4_batch(mats, re, im, ok):
    for k in numba.prange(mats.shape[0]):
        ok[k] = _eigvals4(mats[k], re[k], im[k])


def eigvals4_batch(mats):
    mats = np.ascontiguousarray(mats, dtype=np.float64)
    n = mats.shape[0]
    re = np.empty((n, 4))
    im = np.empty((n, 4))
    ok = np.empty(n, dtype=np.bool_)
    _eigvals4_batch(mats, re, im, ok)
    return re, im, ok


# ---------- splitmix64 streams (see rng.py for the reference source) ----------

_GAMMA = _U(0x9E3779B97F4A7C15)
_MIX1 = _U(0xBF58476D1CE4E5B9)
_MIX2 = _U(0x94D049BB133111EB)
_TWO_M53 = 2.0 ** -53


@numba.njit(cache=True)
def _mix64(z):
    z = (z ^ (z >> _U(30))) * _MIX1
    z = (z ^ (z >> _U(27))) * _MIX2
    return z ^ (z >> _U(31))


@numba.njit(cache=True)
def _stream_state(seed, index):
    return _mix64(seed + _GAMMA * (index + _U(1)))


@numba.njit(cache=True)
def _next_double(state):
    state = state + _GAMMA
    z = _mix64(state)
    return state, np.float64(z >> _U(11)) * _TWO_M53


@numba.njit(cache=True)
def _next_unit3(state):
    for _ in range(1000):
        state, u1 = _next_double(state)
        state, u2 = _next_double(state)
        state, u3 = _next_double(state)
        x = 2.0 * u1 - 1.0
        y = 2.0 * u2 - 1.0
        z = 2.0 * u3 - 1.0
        s = x * x + y * y + z * z
        if 1e-12 < s <= 1.0:
            r = np.sqrt(s)
            return state, x / r, y / r, z / r
    return state, 1.0, 0.0, 0.0


@numba.njit(cache=True, parallel=True)
def _sample_direction_sets(seed, ids, out):
    for k in numba.prange(ids.shape[0]):
        st = _stream_state(seed, ids[k])
        for v in range(6):
            st, x, y, z = _next_unit3(st)
            out[k, v, 0] = x
            out[k, v, 1] = y
            out[k, v, 2] = z


def sample_direction_sets(seed, ids):
    ids = np.ascontiguousarray(ids, dtype=np.uint64)
    out = np.empty((ids.shape[0], 6, 3))
    _sample_direction_sets(_U(seed), ids, out)
    return out


# ---------- hull margins ----------

_HULL_STEP0 = 0.1
_HULL_STEP_MIN = 1e-8
_HULL_MAX_ITER = 160


@numba.njit(cache=True)
def _support(ux, uy, uz):
    m = ux * ux
    if uy * uy < m:
        m = uy * uy
    if uz * uz < m:
        m = uz * uz
    r = 1.0 - m
    if r < 0.0:
        r = 0.0
    return np.sqrt(r)


@numba.njit(cache=True)
def _refine_one(cx, cy, cz, ux, uy, uz, gbest):
    step = _HULL_STEP0
    for _ in range(_HULL_MAX_ITER):
        if step < _HULL_STEP_MIN:
            break
        # deterministic tangent basis: axis of smallest |u| component
        ax = 0
        amin = abs(ux)
        if abs(uy) < amin:
            ax = 1
            amin = abs(uy)
        if abs(uz) < amin:
            ax = 2
        ex = 1.0 if ax == 0 else 0.0
        ey = 1.0 if ax == 1 else 0.0
        ez = 1.0 if ax == 2 else 0.0
        d = ex * ux + ey * uy + ez * uz
        t1x, t1y, t1z = ex - d * ux, ey - d * uy, ez - d * uz
        n1 = np.sqrt(t1x * t1x + t1y * t1y + t1z * t1z)
        t1x, t1y, t1z = t1x / n1, t1y / n1, t1z / n1
        t2x = uy * t1z - uz * t1y
        t2y = uz * t1x - ux * t1z
        t2z = ux * t1y - uy * t1x
        improved = False
        rsq = 0.7071067811865475
        for c in range(8):
            if c == 0:
                dx, dy, dz = t1x, t1y, t1z
            elif c == 1:
                dx, dy, dz = -t1x, -t1y, -t1z
            elif c == 2:
                dx, dy, dz = t2x, t2y, t2z
            elif c == 3:
                dx, dy, dz = -t2x, -t2y, -t2z
            elif c == 4:
                dx, dy, dz = (t1x + t2x) * rsq, (t1y + t2y) * rsq, (t1z + t2z) * rsq
            elif c == 5:
                dx, dy, dz = (t1x - t2x) * rsq, (t1y - t2y) * rsq, (t1z - t2z) * rsq
            elif c == 6:
                dx, dy, dz = (-t1x + t2x) * rsq, (-t1y + t2y) * rsq, (-t1z + t2z) * rsq
            else:
                dx, dy, dz = (-t1x - t2x) * rsq, (-t1y - t2y) * rsq, (-t1z - t2z) * rsq
            vx = ux + step * dx
            vy = uy + step * dy
            vz = uz + step * dz
            nv = np.sqrt(vx * vx + vy * vy + vz * vz)
            vx, vy, vz = vx / nv, vy / nv, vz / nv
            g = _support(vx, vy, vz) - (cx * vx + cy * vy + cz * vz)
            if g < gbest:
                gbest = g
                ux, uy, uz = vx, vy, vz
                improved = True
        if not improved:
            step *= 0.5
    return gbest


_SMAX = 0.5773502691896258


@numba.njit(cache=True)
def _boundary_value(s, gamma, delta):
    r = 1.0 - 2.0 * s * s
    if r < 0.0:
        r = 0.0
    return np.sqrt(1.0 - s * s) - gamma * s - delta * np.sqrt(r)


@numba.njit(cache=True)
def _boundary_min(gamma, delta):
    lo = 0.0
    hi = _SMAX
    best = _boundary_value(lo, gamma, delta)
    v = _boundary_value(hi, gamma, delta)
    if v < best:
        best = v
    for _ in range(6):
        width = hi - lo
        bi = 0
        bv = 1e300
        for t in range(33):
            s = lo + width * (t / 32.0)
            v = _boundary_value(s, gamma, delta)
            if v < bv:
                bv = v
                bi = t
        if bv < best:
            best = bv
        if bi < 1:
            bi = 1
        if bi > 31:
            bi = 31
        new_lo = lo + width * ((bi - 1) / 32.0)
        new_hi = lo + width * ((bi + 1) / 32.0)
        lo = new_lo
        hi = new_hi
    return best


@numba.njit(cache=True)
def _enum_margin_one(cx, cy, cz):
    acx = abs(cx)
    acy = abs(cy)
    acz = abs(cz)
    best = np.sqrt(2.0 / 3.0) - (acx + acy + acz) / np.sqrt(3.0)
    v = _boundary_min(acy + acz, acx)
    if v < best:
        best = v
    v = _boundary_min(acx + acz, acy)
    if v < best:
        best = v
    v = _boundary_min(acx + acy, acz)
    if v < best:
        best = v
    return best


@numba.njit(cache=True)
def _hull_margin_one(cx, cy, cz, grid, h_grid, region):
    # best grid point per support region (argmin axis of |u|)
    g0 = 1e300
    g1 = 1e300
    g2 = 1e300
    i0 = 0
    i1 = 0
    i2 = 0
    for j in range(grid.shape[0]):
        g = h_grid[j] - (cx * grid[j, 0] + cy * grid[j, 1] + cz * grid[j, 2])
        r = region[j]
        if r == 0:
            if g < g0:
                g0 = g
                i0 = j
        elif r == 1:
            if g < g1:
                g1 = g
                i1 = j
        else:
            if g < g2:
                g2 = g
                i2 = j
    best = _refine_one(cx, cy, cz, grid[i0, 0], grid[i0, 1], grid[i0, 2], g0)
    b = _refine_one(cx, cy, cz, grid[i1, 0], grid[i1, 1], grid[i1, 2], g1)
    if b < best:
        best = b
    b = _refine_one(cx, cy, cz, grid[i2, 0], grid[i2, 1], grid[i2, 2], g2)
    if b < best:
        best = b
    # analytic per-axis candidates (pole or aligned stationary point)
    cc = cx * cx + cy * cy + cz * cz
    for k in range(3):
        ck = cx if k == 0 else (cy if k == 1 else cz)
        cp2 = cc - ck * ck
        cp = np.sqrt(cp2) if cp2 > 0.0 else 0.0
        if cp <= 1.0 + 1e-15:
            ux = 0.0
            uy = 0.0
            uz = 0.0
            s = 1.0 if ck >= 0.0 else -1.0
            if k == 0:
                ux = s
            elif k == 1:
                uy = s
            else:
                uz = s
        else:
            d = np.sqrt((cp - 1.0) * (cp - 1.0) + ck * ck)
            r = (cp - 1.0) / (d * cp)
            ux = cx * r
            uy = cy * r
            uz = cz * r
            if k == 0:
                ux = ck / d
            elif k == 1:
                uy = ck / d
            else:
                uz = ck / d
        g = _support(ux, uy, uz) - (cx * ux + cy * uy + cz * uz)
        b = _refine_one(cx, cy, cz, ux, uy, uz, g)
        if b < best:
            best = b
    b = _enum_margin_one(cx, cy, cz)
    if b < best:
        best = b
    return best


@numba.njit(cache=True, parallel=True)
def _hull_margins(coords, grid, h_grid, region, out):
    for k in numba.prange(coords.shape[0]):
        out[k] = _hull_margin_one(
            coords[k, 0], coords[k, 1], coords[k, 2], grid, h_grid, region
        )


def hull_margins(coords, grid):
    coords = np.ascontiguousarray(coords, dtype=np.float64)
    grid = np.ascontiguousarray(grid, dtype=np.float64)
    h_grid = np.sqrt(np.clip(1.0 - np.min(grid * grid, axis=1), 0.0, None))
    region = np.argmin(grid * grid, axis=1).astype(np.int64)
    out = np.empty(coords.shape[0])
    _hull_margins(coords, grid, h_grid, region, out)
    return out
