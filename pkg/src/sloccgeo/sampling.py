"""Deterministic random ensembles used by the Monte-Carlo suites.

States are mixtures of up to four Haar-random pure states with
Dirichlet(1,1,1,1) weights; the default seed is 0x5EED.
"""

from __future__ import annotations

import numpy as np

from .lorentz import LocalFilter
from .pauli import single_qubit_operator

DEFAULT_SEED = 0x5EED


def rng_from(seed=DEFAULT_SEED):
    return np.random.default_rng(seed)


def haar_pure_state(rng, dim=4):
    """Projector onto a Haar-random pure state."""
    psi = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    psi /= np.linalg.norm(psi)
    return np.outer(psi, psi.conj())


def random_mixed_state(rng, k=4):
    """Mixture of k Haar pure states with Dirichlet(1,..,1) weights."""
    w = rng.dirichlet(np.ones(k))
    rho = np.zeros((4, 4), dtype=complex)
    for i in range(k):
        rho += w[i] * haar_pure_state(rng)
    return rho


def random_mixed_states(n, seed=DEFAULT_SEED, k=4):
    """Stack of n random mixed states, shape (n, 4, 4)."""
    rng = rng_from(seed)
    out = np.empty((n, 4, 4), dtype=complex)
    for i in range(n):
        out[i] = random_mixed_state(rng, k)
    return out


def random_unit_vector(rng):
    v = rng.standard_normal(3)
    return v / np.linalg.norm(v)


def random_product_state(rng):
    """Normalized product state rho_a (x) rho_b of two random pure qubits."""
    ops = []
    for _ in range(2):
        n = random_unit_vector(rng)
        q = 0.5 * np.array([1.0, n[0], n[1], n[2]])
        ops.append(single_qubit_operator(q))
    return np.kron(ops[0], ops[1])


def random_su2(rng):
    """Haar-ish random SU(2) element."""
    a = rng.standard_normal(4)
    a /= np.linalg.norm(a)
    return np.array(
        [[a[0] + 1j * a[3], a[2] + 1j * a[1]], [-a[2] + 1j * a[1], a[0] - 1j * a[3]]]
    )


def random_sl2c(rng, max_cond=10.0):
    """Random SL(2,C) element with bounded condition number.

    The bound keeps the induced Lorentz boosts moderate so invariance checks
    stay within the stated tolerances.
    """
    while True:
        m = (rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))) / np.sqrt(2)
        d = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
        if abs(d) < 0.1:
            continue
        m = m / np.sqrt(d)
        s = np.linalg.svd(m, compute_uv=False)
        if s[0] / s[-1] <= max_cond:
            return m


def random_local_filter(rng, max_cond=10.0):
    return LocalFilter(random_sl2c(rng, max_cond), random_sl2c(rng, max_cond))
