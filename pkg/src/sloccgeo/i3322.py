"""Three-setting Bell witness family and its singular-value scan.

The witness for three dichotomic von Neumann measurements per side
factorizes in Pauli coordinates as omega = A W0 B^T, where A and B carry
the measurement directions as spatial columns and W0 is a fixed integer
matrix.  Its Lorentz singular values are the square roots of the
eigenvalues of (B^T eta B) W0^T (A^T eta A) W0, which depend only on the
six angle cosines.  The scan samples direction sets, maps each witness to
its class coordinates, and measures containment in the convex hull of the
three CHSH circles via the hull's closed-form support function.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import _kernels
from .errors import ComplexSpectrumError, NotUnitVectorError
from .lorentz import LorentzSV
from .pauli import to_hermitian

COMPLEX_RTOL = 1e-8
NEGATIVE_RTOL = 1e-9
DEGENERATE_W0_ATOL = 1e-12
HULL_ATOL = 1e-6
INPLANE_BAND = 1e-3

_W0 = np.array(
    [
        [4.0, -1.0, -1.0, 0.0],
        [1.0, -1.0, -1.0, -1.0],
        [1.0, -1.0, -1.0, 1.0],
        [0.0, -1.0, 1.0, 0.0],
    ]
)
_DET_W0 = float(np.linalg.det(_W0))


def w0_matrix():
    """The fixed 4x4 integer core of the witness factorization."""
    return _W0.copy()


def _unit(v, name):
    v = np.asarray(v, dtype=float)
    if v.shape != (3,) or abs(np.linalg.norm(v) - 1.0) > 1e-12:
        raise NotUnitVectorError(f"{name} must be a unit 3-vector")
    return v


@dataclass(frozen=True)
class TripleDirections:
    """Three measurement directions per side."""

    a1: np.ndarray
    a2: np.ndarray
    a3: np.ndarray
    b1: np.ndarray
    b2: np.ndarray
    b3: np.ndarray

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "b1", "b2", "b3"):
            object.__setattr__(self, name, _unit(getattr(self, name), name))

    def direction_matrix(self, side):
        """4x4 matrix with 1 in the corner and the side's directions as columns."""
        vs = (self.a1, self.a2, self.a3) if side == "A" else (self.b1, self.b2, self.b3)
        m = np.zeros((4, 4))
        m[0, 0] = 1.0
        for k, v in enumerate(vs):
            m[1:, k + 1] = v
        return m

    def cosines(self):
        """(ca12, ca13, ca23, cb12, cb13, cb23)."""
        return np.array(
            [
                self.a1 @ self.a2,
                self.a1 @ self.a3,
                self.a2 @ self.a3,
                self.b1 @ self.b2,
                self.b1 @ self.b3,
                self.b2 @ self.b3,
            ]
        )


def pauli_tensor_3322(t: TripleDirections):
    """omega = A W0 B^T."""
    return t.direction_matrix("A") @ _W0 @ t.direction_matrix("B").T


def w3322_witness(t: TripleDirections):
    """The Hermitian witness; trace 16, nonnegative on every product state."""
    return to_hermitian(pauli_tensor_3322(t))


def gram_eta(t: TripleDirections, side):
    """Closed form of M^T eta M for a direction matrix: 1 in the corner,
    -1 on the spatial diagonal, -cos(angle) off-diagonal."""
    c12, c13, c23 = {
        "A": (t.a1 @ t.a2, t.a1 @ t.a3, t.a2 @ t.a3),
        "B": (t.b1 @ t.b2, t.b1 @ t.b3, t.b2 @ t.b3),
    }[side]
    return np.array(
        [
            [1.0, 0.0, 0.0, 0.0],
            [0.0, -1.0, -c12, -c13],
            [0.0, -c12, -1.0, -c23],
            [0.0, -c13, -c23, -1.0],
        ]
    )


def _grams_from_dirs(dirs):
    """Batch A^T eta A for direction stacks of shape (n, 3, 3) (rows = vectors)."""
    n = dirs.shape[0]
    C = np.einsum("nik,njk->nij", dirs, dirs)
    g = np.zeros((n, 4, 4))
    g[:, 0, 0] = 1.0
    g[:, 1:, 1:] = -C
    return g


def _signed_sorted_sv(re, im, ok, scales, dets):
    """Order, clamp and sign a batch of squared singular values."""
    bad = ~ok
    bad |= np.max(np.abs(im), axis=1) > COMPLEX_RTOL * scales
    bad |= np.min(re, axis=1) < -NEGATIVE_RTOL * scales
    sv = np.sqrt(np.sort(np.clip(re, 0.0, None), axis=1)[:, ::-1])
    sv[:, 3] = np.where(dets < 0.0, -sv[:, 3], sv[:, 3])
    sv[bad] = np.nan
    return sv, bad


def _sv_batch(a_dirs, b_dirs):
    """Lorentz singular values for batches of direction triples.

    a_dirs, b_dirs: (n, 3, 3) with rows a1, a2, a3 / b1, b2, b3.
    Returns (sv, bad).
    """
    ga = _grams_from_dirs(a_dirs)
    gb = _grams_from_dirs(b_dirs)
    mats = np.einsum("nab,bc,ncd,de->nae", gb, _W0.T, ga, _W0)
    re, im, ok = _kernels.eigvals4_batch(np.ascontiguousarray(mats))
    scales = np.maximum(1.0, np.sqrt(np.einsum("nab,nab->n", mats, mats)))
    det3 = np.linalg.det(np.transpose(a_dirs, (0, 2, 1)))
    det3b = np.linalg.det(np.transpose(b_dirs, (0, 2, 1)))
    dets = det3 * _DET_W0 * det3b
    return _signed_sorted_sv(re, im, ok, scales, dets)


def i3322_singular_values(t: TripleDirections):
    """Lorentz singular values from the Gram-matrix product.

    Eigenvalues of (B^T eta B) W0^T (A^T eta A) W0, clamped, ordered and
    signed with det(A W0 B^T); agrees with the generic omega* omega route.
    """
    a = np.stack([t.a1, t.a2, t.a3])[None]
    b = np.stack([t.b1, t.b2, t.b3])[None]
    sv, bad = _sv_batch(a, b)
    if bad[0]:
        raise ComplexSpectrumError(
            f"complex Gram-product spectrum for cosines {tuple(t.cosines())}"
        )
    return LorentzSV(*sv[0])


def hull_membership(c):
    """Margin of a coordinate triple against the three-circle hull.

    min over unit directions u of [sqrt(1 - min u_i^2) - c.u], where the
    square root is the closed-form support function of the hull; evaluated
    on a 2562-vertex geodesic grid with deterministic local refinement.
    Membership means margin >= -1e-6.
    """
    c = np.asarray(c, dtype=float)
    return float(_kernels.hull_margins(c[None, :])[0])


# ---------- the scan ----------


@dataclass
class ScanRecord:
    id: int
    cosines: np.ndarray
    sv: LorentzSV
    coords: np.ndarray
    hull_margin: float


@dataclass
class ScanResult:
    """Accepted records (arrays aligned by row) plus the run summary."""

    ids: np.ndarray
    cosines: np.ndarray
    sv: np.ndarray
    coords: np.ndarray
    hull_margin: np.ndarray
    summary: dict

    def records(self) -> Iterator[ScanRecord]:
        for k in range(self.ids.shape[0]):
            yield ScanRecord(
                id=int(self.ids[k]),
                cosines=self.cosines[k],
                sv=LorentzSV(*self.sv[k]),
                coords=self.coords[k],
                hull_margin=float(self.hull_margin[k]),
            )


def _finish_scan(n, ids, dirs):
    a_dirs = dirs[:, 0:3, :]
    b_dirs = dirs[:, 3:6, :]
    cosines = np.stack(
        [
            np.einsum("nk,nk->n", a_dirs[:, 0], a_dirs[:, 1]),
            np.einsum("nk,nk->n", a_dirs[:, 0], a_dirs[:, 2]),
            np.einsum("nk,nk->n", a_dirs[:, 1], a_dirs[:, 2]),
            np.einsum("nk,nk->n", b_dirs[:, 0], b_dirs[:, 1]),
            np.einsum("nk,nk->n", b_dirs[:, 0], b_dirs[:, 2]),
            np.einsum("nk,nk->n", b_dirs[:, 1], b_dirs[:, 2]),
        ],
        axis=1,
    )
    sv, bad = _sv_batch(a_dirs, b_dirs)
    degenerate = (~bad) & (sv[:, 0] <= DEGENERATE_W0_ATOL)
    keep = ~(bad | degenerate)
    sv_k = sv[keep]
    coords = sv_k[:, 1:] / sv_k[:, 0:1]
    margins = _kernels.hull_margins(coords)
    inplane = np.abs(coords[:, 2]) < INPLANE_BAND
    if np.any(inplane):
        inplane_max_radius = float(
            np.max(np.hypot(coords[inplane, 0], coords[inplane, 1]))
        )
    else:
        inplane_max_radius = 0.0
    summary = {
        "n": int(n),
        "min_margin": float(np.min(margins)) if margins.size else None,
        "skipped_complex": int(np.count_nonzero(bad)),
        "skipped_degenerate": int(np.count_nonzero(degenerate)),
        "inplane_max_radius": inplane_max_radius,
    }
    return ScanResult(
        ids=ids[keep],
        cosines=cosines[keep],
        sv=sv_k,
        coords=coords,
        hull_margin=margins,
        summary=summary,
    )


def scan(n, seed=0):
    """Randomized witness scan: n direction sets, uniform on the sphere.

    Every record derives its own splitmix64 stream from (seed, id), so the
    output is reproducible and independent of chunking or thread count.
    Configurations with complex or degenerate spectra are skipped and
    counted in the summary, never fatal.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    ids = np.arange(n, dtype=np.uint64)
    dirs = _kernels.sample_direction_sets(seed, ids)
    return _finish_scan(n, ids.astype(np.int64), dirs)


def scan_planar_grid(g):
    """Deterministic coplanar slice: all six directions in the xy-plane.

    Angles run over a uniform g-point grid each (g**6 records); coplanar
    direction matrices are singular, so w3 = 0 and every class lands in the
    z = 0 plane of the picture.
    """
    if g < 1:
        raise ValueError("g must be >= 1")
    angles = 2.0 * np.pi * np.arange(g) / g
    n = g ** 6
    idx = np.arange(n)
    dirs = np.empty((n, 6, 3))
    for v in range(6):
        a = angles[(idx // g ** (5 - v)) % g]
        dirs[:, v, 0] = np.cos(a)
        dirs[:, v, 1] = np.sin(a)
        dirs[:, v, 2] = 0.0
    return _finish_scan(n, idx, dirs)
