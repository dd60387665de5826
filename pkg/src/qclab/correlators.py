"""Statistical correlators over joint outcome distributions.

Mutual predictability (optionally shift-relabelled), mutual information in
bits, and the Pearson correlation coefficient both from a distribution's
outcome values and from operator expectations (needed for the degenerate W
observable).
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import measurement
from .errors import DimensionError

ZERO_JOINT = 1e-15
VARIANCE_FLOOR = 1e-14


@dataclass(frozen=True)
class CorrelatorReport:
    mp: float
    mi: float
    pcc: Optional[float]
    basis_a: str
    basis_b: str


def mutual_predictability(jd, k=0) -> float:
    """Sum of p(i, i+k mod d) over the diagonal shifted by k."""
    if jd.dim_a != jd.dim_b:
        raise DimensionError("mutual predictability needs a square distribution")
    d = jd.dim_a
    return float(sum(jd.p[i, (i + k) % d] for i in range(d)))


def mutual_information(jd) -> float:
    """Shannon mutual information in bits; 0 log 0 = 0."""
    total = 0.0
    pa, pb = jd.marginal_a, jd.marginal_b
    for i in range(jd.dim_a):
        for j in range(jd.dim_b):
            pij = jd.p[i, j]
            if pij > ZERO_JOINT:
                total += pij * math.log2(pij / (pa[i] * pb[j]))
    return max(0.0, total)


def pcc_distribution(jd) -> Optional[float]:
    """Pearson correlation of the attached outcome values, or None if a
    marginal has (numerically) zero variance."""
    xa, xb = jd.values_a, jd.values_b
    pa, pb = jd.marginal_a, jd.marginal_b
    mean_a = float(pa @ xa)
    mean_b = float(pb @ xb)
    var_a = float(pa @ (xa * xa)) - mean_a * mean_a
    var_b = float(pb @ (xb * xb)) - mean_b * mean_b
    if var_a < VARIANCE_FLOOR or var_b < VARIANCE_FLOOR:
        return None
    cov = float(xa @ jd.p @ xb) - mean_a * mean_b
    return cov / math.sqrt(var_a * var_b)


def pcc_observables(rho, op_a, op_b) -> Optional[float]:
    """Pearson correlation from five operator expectations.

    The route to use for degenerate observables like W, where an outcome
    table would misrepresent the spectrum.
    """
    ea = measurement.expectation(rho, op_a, None)
    eb = measurement.expectation(rho, None, op_b)
    eab = measurement.expectation(rho, op_a, op_b)
    sq_a = measurement.Observable(op_a.d, op_a.matrix @ op_a.matrix, op_a.label + "^2")
    sq_b = measurement.Observable(op_b.d, op_b.matrix @ op_b.matrix, op_b.label + "^2")
    var_a = measurement.expectation(rho, sq_a, None) - ea * ea
    var_b = measurement.expectation(rho, None, sq_b) - eb * eb
    if var_a < VARIANCE_FLOOR or var_b < VARIANCE_FLOOR:
        return None
    return (eab - ea * eb) / math.sqrt(var_a * var_b)


def report(rho, basis_a, basis_b, k=0) -> CorrelatorReport:
    """All three correlators for one pair of bases."""
    jd = measurement.joint_distribution(rho, basis_a, basis_b)
    return CorrelatorReport(
        mp=mutual_predictability(jd, k=k),
        mi=mutual_information(jd),
        pcc=pcc_distribution(jd),
        basis_a=basis_a.label,
        basis_b=basis_b.label,
    )
