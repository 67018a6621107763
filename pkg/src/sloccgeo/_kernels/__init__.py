"""Kernel backend dispatch.

Hot numeric loops (4x4 eigenvalues, direction sampling, hull margins) have a
numba-jitted implementation and a pure-numpy vectorized fallback.  The
backend is chosen by the SLOCCGEO_BACKEND environment variable ("numba" or
"numpy"); default is numba when importable, numpy otherwise.
"""

import os

import numpy as np

from .geodesic import icosphere

_VALID = ("numba", "numpy")
_backend = None
_impls = {}
_grid = None


def _default_backend():
    env = os.environ.get("SLOCCGEO_BACKEND", "").strip().lower()
    if env:
        if env not in _VALID:
            raise ValueError(f"SLOCCGEO_BACKEND must be one of {_VALID}, got {env!r}")
        return env
    try:
        import numba  # noqa: F401

        return "numba"
    except ImportError:
        return "numpy"


def _load(name):
    if name not in _impls:
        if name == "numba":
            from . import numba_impl

            _impls[name] = numba_impl
        else:
            from . import numpy_impl

            _impls[name] = numpy_impl
    return _impls[name]


def get_backend():
    global _backend
    if _backend is None:
        _backend = _default_backend()
    return _backend


def set_backend(name):
    """Select the kernel backend ('numba' or 'numpy')."""
    global _backend
    if name not in _VALID:
        raise ValueError(f"backend must be one of {_VALID}, got {name!r}")
    _load(name)
    _backend = name


def direction_grid():
    """The shared 2562-vertex geodesic grid for hull support evaluation."""
    global _grid
    if _grid is None:
        _grid = icosphere(4)
    return _grid


def eigvals4_batch(mats):
    """Eigenvalues of a stack of real 4x4 matrices: (re, im, converged)."""
    return _load(get_backend()).eigvals4_batch(np.ascontiguousarray(mats, dtype=float))


def eigvals4(mat):
    """Eigenvalues of one real 4x4 matrix: (re, im, converged)."""
    re, im, ok = eigvals4_batch(mat[None, :, :])
    return re[0], im[0], bool(ok[0])


def sample_direction_sets(seed, ids):
    """Six unit directions per record id, deterministic per (seed, id)."""
    return _load(get_backend()).sample_direction_sets(seed, ids)


def hull_margins(coords):
    """Support-function margin of each coordinate row against the circle hull."""
    return _load(get_backend()).hull_margins(coords, direction_grid())
