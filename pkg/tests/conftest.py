import numpy as np
import pytest

from sloccgeo.pauli import ETA


@pytest.fixture
def rng():
    return np.random.default_rng(0x5EED)


# Lorentz factories built directly from the defining matrices, independent of
# the SL(2,C) correspondence in the library.

def boost(axis, t):
    L = np.eye(4)
    L[0, 0] = np.cosh(t)
    L[axis + 1, axis + 1] = np.cosh(t)
    L[0, axis + 1] = np.sinh(t)
    L[axis + 1, 0] = np.sinh(t)
    return L


def rotation(axis, angle):
    i, j = [k for k in range(3) if k != axis]
    L = np.eye(4)
    L[i + 1, i + 1] = np.cos(angle)
    L[j + 1, j + 1] = np.cos(angle)
    L[i + 1, j + 1] = -np.sin(angle)
    L[j + 1, i + 1] = np.sin(angle)
    return L


def random_lorentz(rng, max_rapidity=1.0):
    """Random proper orthochronous Lorentz matrix (rot . boost . rot)."""
    L = rotation(int(rng.integers(3)), rng.uniform(0, 2 * np.pi))
    L = L @ boost(int(rng.integers(3)), rng.uniform(-max_rapidity, max_rapidity))
    L = L @ rotation(int(rng.integers(3)), rng.uniform(0, 2 * np.pi))
    return L


def is_lorentz(L, atol=1e-10):
    return (
        np.allclose(L @ ETA @ L.T, ETA, atol=atol)
        and abs(np.linalg.det(L) - 1.0) < atol
        and L[0, 0] > 0
    )


def random_strict_witness_tensor(rng, max_rapidity=0.8):
    """omega = L1 diag(1, w1, w2, w3) L2^T with 1 > w1 >= w2 >= |w3|."""
    w1, w2 = np.sort(rng.uniform(0.0, 0.95, 2))[::-1]
    w3 = rng.uniform(-w2, w2)
    d = np.diag([1.0, w1, w2, w3])
    return random_lorentz(rng, max_rapidity) @ d @ random_lorentz(rng, max_rapidity).T
