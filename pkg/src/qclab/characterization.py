"""Invert correlators to Negativity per family; separability bound checks.

The forward maps (correlator as a function of the family parameters) come
from the analytic Z-basis probability tables, so inversion works on a 1-d
parameter by bisection.  Every bisection first samples the map on a 64-point
grid and refuses to run if it is not strictly monotone.
"""

import math
import os
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import correlators, measurement, states
from .errors import InversionDomainError, NonMonotoneError, ParameterError

SEPARABLE = "separable"
BOUND_ENTANGLED = "bound_entangled"
NPT_ENTANGLED = "npt_entangled"

MP, MI, PCC = "mp", "mi", "pcc"
_KINDS = (MP, MI, PCC)

RANGE_SLACK = 1e-9
REGION_TOL = 1e-9
VIOLATION_TOL = 1e-12
# MI values below this are indistinguishable from 0 given ~1e-16 probability
# dust; near its zero the MI map is quadratically flat, so inverting raw dust
# would amplify it to ~1e-8 in the parameter.
MI_DUST_FLOOR = 1e-13


def _tol():
    return float(os.environ.get("QCLAB_TOL", "1e-10"))


@dataclass(frozen=True)
class CharacterizationResult:
    negativity: float
    aux_param: Optional[float]
    region: Optional[str]
    ambiguity: bool
    method: str
    candidates: tuple = ()


@dataclass(frozen=True)
class BoundVerdict:
    lhs: float
    threshold: float
    violated: bool
    bound_kind: str


# ---------------------------------------------------------------------------
# Forward maps (analytic probability tables)


def _uniform_values(d):
    return np.arange(d, dtype=float)


def noisy_bell_z_table(d, a, n_signed):
    """Z (x) Z table of the noisy Bell family in terms of (a, unclamped N)."""
    diag = (1.0 - a * (d - 1) + 2.0 * n_signed) / d
    off = a / d - 2.0 * n_signed / (d * (d - 1))
    p = np.full((d, d), max(off, 0.0))
    np.fill_diagonal(p, max(diag, 0.0))
    return measurement.JointDistribution(p, _uniform_values(d), _uniform_values(d))


def noisy_bell_x_table(d, a):
    """X (x) X table: a delta_ij / d + (1 - a) / d^2."""
    p = np.full((d, d), (1.0 - a) / (d * d))
    np.fill_diagonal(p, a / d + (1.0 - a) / (d * d))
    return measurement.JointDistribution(p, _uniform_values(d), _uniform_values(d))


def werner_z_table(d, a):
    """Z (x) Z table of the Werner family (same in X by U x U invariance)."""
    n_signed = (1.0 - 2.0 * a) / d
    diag = (1.0 - d * n_signed) / (d * (d + 1))
    off = (1.0 + n_signed) / (d * d - 1.0)
    p = np.full((d, d), max(off, 0.0))
    np.fill_diagonal(p, max(diag, 0.0))
    return measurement.JointDistribution(p, _uniform_values(d), _uniform_values(d))


def oph_shifted_table(a, k=1):
    """Z (x) shiftZ(k) table of the OPH state, p(i,j) = <i,j+k|rho|i,j+k>."""
    p = np.empty((3, 3))
    for i in range(3):
        for j in range(3):
            col = (j + k) % 3
            if col == i:
                p[i, j] = 2.0 / 21.0
            elif col == (i + 1) % 3:
                p[i, j] = a / 21.0
            else:
                p[i, j] = (5.0 - a) / 21.0
    return measurement.JointDistribution(p, _uniform_values(3), _uniform_values(3))


def _corr(jd, kind):
    if kind == MP:
        return correlators.mutual_predictability(jd)
    if kind == MI:
        return correlators.mutual_information(jd)
    if kind == PCC:
        val = correlators.pcc_distribution(jd)
        if val is None:
            raise InversionDomainError("PCC undefined (zero marginal variance)")
        return val
    raise ParameterError(f"unknown correlator kind {kind!r}")


# ---------------------------------------------------------------------------
# Guarded bisection


def _bisect_monotone(f, lo, hi, target, label, samples=64):
    """Invert a strictly monotone scalar map by bisection.

    Samples the map first; non-monotone maps raise instead of silently
    returning a wrong branch.  Targets within RANGE_SLACK of the attainable
    range are clamped; anything farther out raises InversionDomainError.
    """
    tol = _tol()
    if hi - lo <= tol:
        return 0.5 * (lo + hi)
    grid = np.linspace(lo, hi, samples)
    vals = np.array([f(x) for x in grid])
    diffs = np.diff(vals)
    if np.all(diffs > 0):
        increasing = True
    elif np.all(diffs < 0):
        increasing = False
    else:
        raise NonMonotoneError(f"forward map for {label} is not strictly monotone")
    vmin, vmax = (vals[0], vals[-1]) if increasing else (vals[-1], vals[0])
    if target < vmin - RANGE_SLACK or target > vmax + RANGE_SLACK:
        raise InversionDomainError(
            f"{label}: value {target!r} outside attainable range "
            f"[{vmin:.6g}, {vmax:.6g}]"
        )
    target = min(max(target, vmin), vmax)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if (f(mid) < target) == increasing:
            lo = mid
        else:
            hi = mid
        if hi - lo < tol:
            break
    return 0.5 * (lo + hi)


# ---------------------------------------------------------------------------
# Inversions


def invert_noisy_bell(corr_x, corr_z, kind, d) -> CharacterizationResult:
    """Two-step recovery: a from the X-basis correlator, then N from Z.

    MP is closed-form; MI and PCC bisect the forward maps.  The MI Z-branch
    is restricted to the correlated side of the uniform point, where the map
    is monotone; states on the anticorrelated side are separable anyway.
    """
    if kind not in _KINDS:
        raise ParameterError(f"unknown correlator kind {kind!r}")
    method = f"noisy_bell/{kind}/X-then-Z"
    if kind == MP:
        a = (d * corr_x - 1.0) / (d - 1.0)
        if not -RANGE_SLACK <= a <= 1.0 + RANGE_SLACK:
            raise InversionDomainError(f"P_X = {corr_x!r} implies a = {a!r}")
        a = min(max(a, 0.0), 1.0)
        n_signed = (corr_z - 1.0 + a * (d - 1.0)) / 2.0
        lo, hi = (a * d - 1.0) / 2.0, a * (d - 1.0) / 2.0
        if n_signed < lo - RANGE_SLACK or n_signed > hi + RANGE_SLACK:
            raise InversionDomainError(f"P_Z = {corr_z!r} outside attainable range")
    else:
        if kind == MI:
            if corr_x < MI_DUST_FLOOR:
                corr_x = 0.0
            if corr_z < MI_DUST_FLOOR:
                corr_z = 0.0
        a = _bisect_monotone(
            lambda x: _corr(noisy_bell_x_table(d, x), kind),
            0.0,
            1.0,
            corr_x,
            f"noisy_bell {kind} X-step",
        )
        lo, hi = (a * d - 1.0) / 2.0, a * (d - 1.0) / 2.0
        if kind == MI:
            # uniform-table point: below it the Z map folds back
            lo = max(lo, (a * d - 1.0) * (d - 1.0) / (2.0 * d))
        n_signed = _bisect_monotone(
            lambda n: _corr(noisy_bell_z_table(d, a, n), kind),
            lo,
            hi,
            corr_z,
            f"noisy_bell {kind} Z-step",
        )
    return CharacterizationResult(
        negativity=max(0.0, n_signed),
        aux_param=a,
        region=None,
        ambiguity=False,
        method=method,
    )


_werner_mi_cache = {}


def _werner_mi_profile(d):
    """(interior minimiser a*, I_Z at a=1) for the Werner MI map, cached per d."""
    if d not in _werner_mi_cache:
        from scipy.optimize import minimize_scalar

        res = minimize_scalar(
            lambda a: correlators.mutual_information(werner_z_table(d, a)),
            bounds=(0.0, 1.0),
            method="bounded",
            options={"xatol": 1e-12},
        )
        _werner_mi_cache[d] = (float(res.x), correlators.mutual_information(werner_z_table(d, 1.0)))
    return _werner_mi_cache[d]


def werner_mi_ambiguous_band(d):
    """MI values with two preimages in a: the interval (I(a*), I(a=1)]."""
    a_star, i_right = _werner_mi_profile(d)
    return correlators.mutual_information(werner_z_table(d, a_star)), i_right


def invert_werner(corr_z, kind, d) -> CharacterizationResult:
    """Recover the Werner Negativity from one Z-basis correlator.

    MP is closed-form, PCC is a global bisection; MI returns both candidate
    parameters with the ambiguity flag when the value lies in the band where
    the map is two-to-one.
    """
    if kind not in _KINDS:
        raise ParameterError(f"unknown correlator kind {kind!r}")
    method = f"werner/{kind}/Z"
    if kind == MP:
        if not -RANGE_SLACK <= corr_z <= 2.0 / (d + 1.0) + RANGE_SLACK:
            raise InversionDomainError(f"P_Z = {corr_z!r} outside [0, 2/(d+1)]")
        a = (d + 1.0) * corr_z / 2.0
        return CharacterizationResult(
            negativity=max(0.0, (1.0 - 2.0 * a) / d),
            aux_param=min(max(a, 0.0), 1.0),
            region=None,
            ambiguity=False,
            method=method,
        )
    if kind == PCC:
        a = _bisect_monotone(
            lambda x: _corr(werner_z_table(d, x), PCC), 0.0, 1.0, corr_z, method
        )
        return CharacterizationResult(
            negativity=max(0.0, (1.0 - 2.0 * a) / d),
            aux_param=a,
            region=None,
            ambiguity=False,
            method=method,
        )
    # MI
    a_star, i_right = _werner_mi_profile(d)
    i_min = correlators.mutual_information(werner_z_table(d, a_star))
    i_left = correlators.mutual_information(werner_z_table(d, 0.0))
    if corr_z < i_min - RANGE_SLACK or corr_z > i_left + RANGE_SLACK:
        raise InversionDomainError(f"I_Z = {corr_z!r} outside attainable range")
    a1 = _bisect_monotone(
        lambda x: correlators.mutual_information(werner_z_table(d, x)),
        0.0,
        a_star,
        corr_z,
        method + " (left branch)",
    )
    if corr_z <= i_min + RANGE_SLACK:
        # at the fold point both preimages coincide at a*
        return CharacterizationResult(
            negativity=max(0.0, (1.0 - 2.0 * a1) / d),
            aux_param=a1,
            region=None,
            ambiguity=False,
            method=method,
        )
    if corr_z > i_right + RANGE_SLACK:
        return CharacterizationResult(
            negativity=max(0.0, (1.0 - 2.0 * a1) / d),
            aux_param=a1,
            region=None,
            ambiguity=False,
            method=method,
        )
    a2 = _bisect_monotone(
        lambda x: correlators.mutual_information(werner_z_table(d, x)),
        a_star,
        1.0,
        corr_z,
        method + " (right branch)",
    )
    cands = ((a1, max(0.0, (1.0 - 2.0 * a1) / d)), (a2, max(0.0, (1.0 - 2.0 * a2) / d)))
    return CharacterizationResult(
        negativity=cands[0][1],
        aux_param=a1,
        region=None,
        ambiguity=True,
        method=method,
        candidates=cands,
    )


def classify_oph(a) -> str:
    """Region of the one-parameter Horodecki state, boundary toward the lower
    region within REGION_TOL."""
    if a <= 3.0 + REGION_TOL:
        return SEPARABLE
    if a <= 4.0 + REGION_TOL:
        return BOUND_ENTANGLED
    return NPT_ENTANGLED


def oph_from_correlator(value, kind, k=1) -> CharacterizationResult:
    """Recover the OPH parameter from a shift-relabelled correlator, classify
    the region, and report the Negativity in the NPT band.

    MI is symmetric about a = 2.5, so its inversion runs on [2.5, 5]; the
    mirror preimage lies in the same (separable) region.
    """
    if kind not in _KINDS:
        raise ParameterError(f"unknown correlator kind {kind!r}")
    k = k % 3
    if k == 0:
        raise InversionDomainError(
            "k = 0 mod 3 gives the constant MP 2/7; use a nonzero shift"
        )
    method = f"oph/{kind}/shift{k}"
    if kind == MP:
        a = 7.0 * value if k == 1 else 5.0 - 7.0 * value
        if not 2.0 - RANGE_SLACK <= a <= 5.0 + RANGE_SLACK:
            raise InversionDomainError(f"MP = {value!r} implies a = {a!r}")
        a = min(max(a, 2.0), 5.0)
    elif kind == MI:
        a = _bisect_monotone(
            lambda x: _corr(oph_shifted_table(x, k), MI), 2.5, 5.0, value, method
        )
    else:
        a = _bisect_monotone(
            lambda x: _corr(oph_shifted_table(x, k), PCC), 2.0, 5.0, value, method
        )
    region = classify_oph(a)
    neg = states.closed_form_negativity(states.OPH(min(max(a, 2.0), 5.0)))
    if region != NPT_ENTANGLED:
        neg = 0.0
    return CharacterizationResult(
        negativity=neg, aux_param=a, region=region, ambiguity=False, method=method
    )


# ---------------------------------------------------------------------------
# Separability bounds


def bound_spengler(mps, d) -> BoundVerdict:
    """Sum of MPs over m MUBs against 1 + (m - 1)/d."""
    lhs = float(sum(mps))
    threshold = 1.0 + (len(mps) - 1.0) / d
    return BoundVerdict(lhs, threshold, lhs > threshold + VIOLATION_TOL, "spengler_mp")


def bound_maccone_mi(i_ab, i_cd, d) -> BoundVerdict:
    """I_AB + I_CD against log2 d."""
    lhs = float(i_ab + i_cd)
    threshold = math.log2(d)
    return BoundVerdict(lhs, threshold, lhs > threshold + VIOLATION_TOL, "maccone_mi")


def bound_maccone_pcc(p_ab, p_cd) -> BoundVerdict:
    """|PCC_AB| + |PCC_CD| against 1."""
    lhs = abs(p_ab) + abs(p_cd)
    return BoundVerdict(lhs, 1.0, lhs > 1.0 + VIOLATION_TOL, "maccone_pcc")


def state_dependent_threshold(family_kind, kind, d, aux=None) -> float:
    """Correlator value at the N = 0 boundary of a family's forward relation."""
    if kind not in _KINDS:
        raise ParameterError(f"unknown correlator kind {kind!r}")
    if family_kind == "werner":
        return _corr(werner_z_table(d, 0.5), kind)
    if family_kind == "noisy_bell":
        if aux is None:
            raise ParameterError("noisy_bell threshold needs the noise weight a")
        return _corr(noisy_bell_z_table(d, aux, 0.0), kind)
    if family_kind == "oph":
        return _corr(oph_shifted_table(4.0, k=1), kind)
    raise ParameterError(f"no state-dependent threshold for {family_kind!r}")


def conjecture_residual(family) -> float:
    """PCC_Z + PCC_W - 1 - 2N/(d-1) via operator expectations (target 0)."""
    if isinstance(family, states.PureSchmidt):
        if sum(1 for x in family.lambdas if x > 0.0) < 2:
            raise ParameterError("Schmidt rank must be >= 2 for a defined PCC_Z")
        d = family.d
    elif isinstance(family, states.CnaBell):
        d = family.d
    else:
        raise ParameterError("conjecture applies to PureSchmidt and CnaBell only")
    rho = states.build_state(family)
    z = measurement.make_observable(d, "Z")
    w = measurement.make_observable(d, "W")
    pcc_z = correlators.pcc_observables(rho, z, z)
    pcc_w = correlators.pcc_observables(rho, w, w)
    if pcc_z is None or pcc_w is None:
        raise InversionDomainError("PCC undefined (zero variance)")
    n = states.closed_form_negativity(family)
    return pcc_z + pcc_w - 1.0 - 2.0 * n / (d - 1.0)
