"""Negativity and statistical correlators for two-qudit mixed states."""

from ._backend import BACKEND
from .linalg import (
    DensityMatrix,
    hermitian_eigenvalues,
    kron,
    negativity_numeric,
    partial_transpose,
    validate_density,
)
from .states import (
    CnaBell,
    NoiseOnly,
    NoisyBell,
    OPH,
    PureSchmidt,
    Werner,
    build_state,
    closed_form_negativity,
    family_from_dict,
    family_to_dict,
)

__all__ = [
    "BACKEND",
    "DensityMatrix",
    "hermitian_eigenvalues",
    "kron",
    "negativity_numeric",
    "partial_transpose",
    "validate_density",
    "CnaBell",
    "NoiseOnly",
    "NoisyBell",
    "OPH",
    "PureSchmidt",
    "Werner",
    "build_state",
    "closed_form_negativity",
    "family_from_dict",
    "family_to_dict",
]
