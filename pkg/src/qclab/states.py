"""Parametric two-qudit state families and their closed-form Negativities.

Each family is a frozen dataclass; ``build_state`` produces a validated
DensityMatrix and ``closed_form_negativity`` evaluates the exact formula,
which serves as the oracle for the numeric partial-transpose route.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError
from .linalg import DensityMatrix, validate_density

ISOTROPIC = "isotropic"
COLORED_A = "colored_a"
COLORED_B = "colored_b"
_NOISE_KINDS = (ISOTROPIC, COLORED_A, COLORED_B)


def _check_unit(name, value):
    if not 0.0 <= value <= 1.0:
        raise ParameterError(f"{name} = {value!r} outside [0, 1]")


@dataclass(frozen=True)
class NoiseOnly:
    kind: str
    d: int

    def __post_init__(self):
        if self.kind not in _NOISE_KINDS:
            raise ParameterError(f"unknown noise kind {self.kind!r}")
        if self.d < 2:
            raise ParameterError(f"d = {self.d} must be >= 2")


@dataclass(frozen=True)
class NoisyBell:
    """Bell state mixed with isotropic, correlated and anticorrelated noise.

    Weight a on the Bell state; the noise part splits b : (1-b) between
    isotropic and colored, and the colored part c : (1-c) between correlated
    (A) and anticorrelated (B).
    """

    d: int
    a: float
    b: float
    c: float

    def __post_init__(self):
        if self.d < 2:
            raise ParameterError(f"d = {self.d} must be >= 2")
        _check_unit("a", self.a)
        _check_unit("b", self.b)
        _check_unit("c", self.c)


@dataclass(frozen=True)
class Werner:
    """Weight a on the symmetric projector; entangled for a < 1/2."""

    d: int
    a: float

    def __post_init__(self):
        if self.d < 2:
            raise ParameterError(f"d = {self.d} must be >= 2")
        _check_unit("a", self.a)


@dataclass(frozen=True)
class OPH:
    """One-parameter Horodecki two-qutrit state, 2 <= a <= 5."""

    a: float

    def __post_init__(self):
        if not 2.0 <= self.a <= 5.0:
            raise ParameterError(f"a = {self.a!r} outside [2, 5]")


@dataclass(frozen=True)
class PureSchmidt:
    """Pure state with given Schmidt coefficients, in the computational basis."""

    lambdas: tuple

    def __post_init__(self):
        lam = tuple(float(x) for x in self.lambdas)
        object.__setattr__(self, "lambdas", lam)
        if len(lam) < 2:
            raise ParameterError("need at least 2 Schmidt coefficients")
        if any(x < 0.0 for x in lam):
            raise ParameterError("Schmidt coefficients must be >= 0")
        if abs(sum(lam) - 1.0) > 1e-12:
            raise ParameterError(f"Schmidt coefficients sum to {sum(lam)!r}, not 1")

    @property
    def d(self):
        return len(self.lambdas)


@dataclass(frozen=True)
class CnaBell:
    """Bell state mixed with pure correlated (colored-A) noise, weight p on Bell."""

    d: int
    p: float

    def __post_init__(self):
        if self.d < 2:
            raise ParameterError(f"d = {self.d} must be >= 2")
        _check_unit("p", self.p)


def _bell_projector(d):
    psi = np.zeros(d * d, dtype=np.complex128)
    for i in range(d):
        psi[i * d + i] = 1.0 / math.sqrt(d)
    return np.outer(psi, psi.conj())


def _noise_matrix(kind, d):
    if kind == ISOTROPIC:
        return np.eye(d * d, dtype=np.complex128) / (d * d)
    m = np.zeros((d * d, d * d), dtype=np.complex128)
    if kind == COLORED_A:
        for i in range(d):
            m[i * d + i, i * d + i] = 1.0 / d
    else:  # anticorrelated
        for i in range(d):
            for j in range(d):
                if i != j:
                    m[i * d + j, i * d + j] = 1.0 / (d * (d - 1))
    return m


def _sigma_cycle(shift):
    # Equal mixture of |i, i+shift mod 3> projectors (the sigma_+/- states).
    m = np.zeros((9, 9), dtype=np.complex128)
    for i in range(3):
        j = (i + shift) % 3
        m[i * 3 + j, i * 3 + j] = 1.0 / 3.0
    return m


def build_state(family) -> DensityMatrix:
    """Construct the density matrix of a state family, validated."""
    if isinstance(family, NoiseOnly):
        d = family.d
        m = _noise_matrix(family.kind, d)
    elif isinstance(family, NoisyBell):
        d = family.d
        a, b, c = family.a, family.b, family.c
        m = (
            a * _bell_projector(d)
            + (1 - a) * b * _noise_matrix(ISOTROPIC, d)
            + (1 - a) * (1 - b) * c * _noise_matrix(COLORED_A, d)
            + (1 - a) * (1 - b) * (1 - c) * _noise_matrix(COLORED_B, d)
        )
    elif isinstance(family, Werner):
        d = family.d
        p_flip = np.zeros((d * d, d * d), dtype=np.complex128)
        for i in range(d):
            for j in range(d):
                p_flip[i * d + j, j * d + i] = 1.0
        eye = np.eye(d * d, dtype=np.complex128)
        p_sym = 0.5 * (eye + p_flip)
        p_as = 0.5 * (eye - p_flip)
        a = family.a
        m = a * 2.0 / (d * (d + 1)) * p_sym + (1 - a) * 2.0 / (d * (d - 1)) * p_as
    elif isinstance(family, OPH):
        d = 3
        m = (
            2.0 / 7.0 * _bell_projector(3)
            + family.a / 7.0 * _sigma_cycle(1)
            + (5.0 - family.a) / 7.0 * _sigma_cycle(2)
        )
    elif isinstance(family, PureSchmidt):
        d = family.d
        psi = np.zeros(d * d, dtype=np.complex128)
        for i, lam in enumerate(family.lambdas):
            psi[i * d + i] = math.sqrt(lam)
        m = np.outer(psi, psi.conj())
    elif isinstance(family, CnaBell):
        d = family.d
        m = family.p * _bell_projector(d) + (1 - family.p) * _noise_matrix(
            COLORED_A, d
        )
    else:
        raise ParameterError(f"unknown state family {family!r}")
    return validate_density(m, d, d)


def closed_form_negativity(family) -> float:
    """Exact Negativity of the family, clamped to 0 where applicable."""
    if isinstance(family, NoiseOnly):
        return 0.0
    if isinstance(family, NoisyBell):
        d, a, b, c = family.d, family.a, family.b, family.c
        raw = (-d + a * d * d + b - a * b + d * (1 - a) * (1 - b) * c) / (2.0 * d)
        return max(0.0, raw)
    if isinstance(family, Werner):
        return max(0.0, (1.0 - 2.0 * family.a) / family.d)
    if isinstance(family, OPH):
        a = family.a
        if a <= 4.0:
            return 0.0
        return (2.0 * math.sqrt(41.0 - 20.0 * a + 4.0 * a * a) - 10.0) / 28.0
    if isinstance(family, PureSchmidt):
        lam = family.lambdas
        s = sum(math.sqrt(x) for x in lam)
        # sum_{i != j} sqrt(l_i l_j) = (sum sqrt(l_i))^2 - 1
        return 0.5 * (s * s - 1.0)
    if isinstance(family, CnaBell):
        return family.p * (family.d - 1) / 2.0
    raise ParameterError(f"unknown state family {family!r}")


_TAGS = {
    "noise_only": NoiseOnly,
    "noisy_bell": NoisyBell,
    "werner": Werner,
    "oph": OPH,
    "pure_schmidt": PureSchmidt,
    "cna_bell": CnaBell,
}


def family_to_dict(family) -> dict:
    """JSON-ready descriptor, e.g. {"family": "werner", "d": 3, "a": 0.5}."""
    if isinstance(family, NoiseOnly):
        return {"family": "noise_only", "kind": family.kind, "d": family.d}
    if isinstance(family, NoisyBell):
        return {
            "family": "noisy_bell",
            "d": family.d,
            "a": family.a,
            "b": family.b,
            "c": family.c,
        }
    if isinstance(family, Werner):
        return {"family": "werner", "d": family.d, "a": family.a}
    if isinstance(family, OPH):
        return {"family": "oph", "a": family.a}
    if isinstance(family, PureSchmidt):
        return {"family": "pure_schmidt", "lambdas": list(family.lambdas)}
    if isinstance(family, CnaBell):
        return {"family": "cna_bell", "d": family.d, "p": family.p}
    raise ParameterError(f"unknown state family {family!r}")


def family_from_dict(obj: dict):
    """Inverse of family_to_dict; raises ParameterError on bad input."""
    if not isinstance(obj, dict) or "family" not in obj:
        raise ParameterError("state descriptor must be an object with a 'family' key")
    tag = obj["family"]
    if tag not in _TAGS:
        raise ParameterError(f"unknown family tag {tag!r}")
    kwargs = {k: v for k, v in obj.items() if k != "family"}
    if tag == "pure_schmidt" and "lambdas" in kwargs:
        kwargs["lambdas"] = tuple(kwargs["lambdas"])
    try:
        return _TAGS[tag](**kwargs)
    except TypeError as exc:
        raise ParameterError(f"bad fields for family {tag!r}: {exc}") from exc
