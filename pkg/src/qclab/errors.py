"""Exception types shared across the package."""


class QclabError(Exception):
    """Base class for all package errors."""


class ParameterError(QclabError):
    """A state-family parameter is outside its allowed range."""


class NonHermitianError(QclabError):
    """Matrix is not Hermitian within tolerance."""


class TraceError(QclabError):
    """Density matrix trace deviates from 1 beyond tolerance."""


class NotPositiveError(QclabError):
    """Density matrix has an eigenvalue below -1e-10."""


class DimensionError(QclabError):
    """Operator/basis dimensions do not match the state."""


class ImaginaryResidueError(QclabError):
    """A probability or expectation came out with |imag| above tolerance."""


class InversionDomainError(QclabError):
    """A measured correlator value is outside the attainable range."""


class NonMonotoneError(QclabError):
    """A forward map assumed monotone failed the monotonicity check."""
