"""SLOCC geometry of two qubits.

Pauli-tensor representation of 4x4 Hermitian operators, Lorentz singular
values and canonical forms under local filtering, classification into
states / separable states / potential entanglement witnesses (cube,
tetrahedron, octahedron), CHSH witness optimization, and a three-setting
Bell-witness scan against the convex hull of the CHSH circles.
"""

from . import _kernels, chsh, classify, i3322, lorentz, pauli, sampling
from ._kernels import get_backend, set_backend
from .errors import (
    BoundaryClassError,
    ComplexSpectrumError,
    DegenerateClassError,
    NotAStateError,
    NotHermitianError,
    NotInLightConeError,
    NotOrthochronousError,
    NotOutsideCylindersError,
    NotProperLorentzError,
    NotUnitDeterminantError,
    NotUnitVectorError,
    SloccGeoError,
)
from .lorentz import (
    LocalFilter,
    LorentzSV,
    apply_filter_state,
    apply_filter_witness,
    canonical_form,
    filter_success_probability,
    lorentz_from_sl2c,
    lorentz_singular_values,
    lorentz_svd,
    minkowski_adjoint,
    sl2c_from_lorentz,
    slocc_coord,
    tetrahedral_orbit,
)
from .pauli import (
    from_hermitian,
    partial_transpose,
    product_state,
    spatial_block,
    to_hermitian,
)

__version__ = "0.1.0"
