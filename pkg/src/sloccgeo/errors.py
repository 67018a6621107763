"""Domain errors raised by the library."""


class SloccGeoError(Exception):
    """Base class for all library errors."""


class NotHermitianError(SloccGeoError):
    """Operator fails the Hermitian symmetry check."""


class NotInLightConeError(SloccGeoError):
    """Four-vector lies outside the closed forward light-cone."""


class ComplexSpectrumError(SloccGeoError):
    """omega*omega has a genuinely complex (or negative) spectrum; the
    operator is outside the class covered by the Lorentz singular-value
    decomposition."""


class DegenerateClassError(SloccGeoError):
    """Leading Lorentz singular value vanishes; no coordinate vector."""


class BoundaryClassError(SloccGeoError):
    """Non-strict class: the decomposition into a pair of Lorentz
    transformations is not attempted."""


class NotAStateError(SloccGeoError):
    """Operator is not a (normalized) positive semidefinite state."""


class NotUnitDeterminantError(SloccGeoError):
    """2x2 matrix determinant is not 1 within tolerance."""


class NotOrthochronousError(SloccGeoError):
    """Lorentz matrix reverses time orientation."""


class NotProperLorentzError(SloccGeoError):
    """Matrix is not a proper Lorentz transformation."""


class NotUnitVectorError(SloccGeoError):
    """Measurement direction is not a unit 3-vector."""


class NotOutsideCylindersError(SloccGeoError):
    """State class lies inside the three-cylinder set; no violating filter
    exists."""
