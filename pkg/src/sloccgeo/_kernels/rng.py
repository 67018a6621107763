"""Counter-seeded splitmix64 streams.

Every scan record derives its own stream from (seed, index), so results do
not depend on worker count or scheduling.  Unit sphere directions are drawn
by rejection from the cube (only +,*,/,sqrt on IEEE doubles), which makes
the streams reproducible bit-for-bit across the scalar, numba, and
vectorized numpy implementations.
"""

import numpy as np

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB
TWO_M53 = 2.0 ** -53


def mix64(z):
    z = z & MASK64
    z = ((z ^ (z >> 30)) * MIX1) & MASK64
    z = ((z ^ (z >> 27)) * MIX2) & MASK64
    return z ^ (z >> 31)


def stream_state(seed, index):
    """Initial state of stream `index` under `seed`."""
    return mix64((seed & MASK64) + GAMMA * ((index & MASK64) + 1))


def next_u64(state):
    """Advance one step: returns (new_state, output)."""
    state = (state + GAMMA) & MASK64
    return state, mix64(state)


def next_double(state):
    """Uniform double in [0, 1)."""
    state, z = next_u64(state)
    return state, (z >> 11) * TWO_M53


def next_unit3(state):
    """Uniform direction on the unit 2-sphere (cube rejection)."""
    for _ in range(1000):
        state, u1 = next_double(state)
        state, u2 = next_double(state)
        state, u3 = next_double(state)
        x = 2.0 * u1 - 1.0
        y = 2.0 * u2 - 1.0
        z = 2.0 * u3 - 1.0
        s = x * x + y * y + z * z
        if 1e-12 < s <= 1.0:
            r = np.sqrt(s)
            return state, x / r, y / r, z / r
    return state, 1.0, 0.0, 0.0


# ---------- vectorized counterparts (numpy fallback path) ----------

_U = np.uint64


def stream_states(seed, indices):
    """Vectorized stream_state for an array of indices."""
    idx = np.asarray(indices, dtype=np.uint64)
    z = _U(seed & MASK64) + _U(GAMMA) * (idx + _U(1))
    return _mix64_arr(z)


def _mix64_arr(z):
    z = (z ^ (z >> _U(30))) * _U(MIX1)
    z = (z ^ (z >> _U(27))) * _U(MIX2)
    return z ^ (z >> _U(31))


def next_doubles(states):
    """Vectorized next_double: returns (new_states, doubles)."""
    states = states + _U(GAMMA)
    z = _mix64_arr(states)
    return states, (z >> _U(11)).astype(np.float64) * TWO_M53


def next_unit3_batch(states):
    """Vectorized next_unit3 over an array of stream states.

    Each stream consumes exactly the draws its own rejection loop needs, so
    the result matches the scalar path stream-for-stream.
    """
    n = states.shape[0]
    out = np.empty((n, 3))
    active = np.ones(n, dtype=bool)
    states = states.copy()
    for _ in range(1000):
        idx = np.nonzero(active)[0]
        if idx.size == 0:
            break
        s = states[idx]
        s, u1 = next_doubles(s)
        s, u2 = next_doubles(s)
        s, u3 = next_doubles(s)
        states[idx] = s
        v = np.stack([2.0 * u1 - 1.0, 2.0 * u2 - 1.0, 2.0 * u3 - 1.0], axis=1)
        # same evaluation order as the scalar path, for bitwise agreement
        r2 = v[:, 0] * v[:, 0] + v[:, 1] * v[:, 1] + v[:, 2] * v[:, 2]
        ok = (r2 > 1e-12) & (r2 <= 1.0)
        good = idx[ok]
        out[good] = v[ok] / np.sqrt(r2[ok])[:, None]
        active[good] = False
    out[active] = (1.0, 0.0, 0.0)
    return states, out
