"""Figure-reproduction data sets.

Each figure id maps to a fixed recipe (family, bases, columns) and renders to
a deterministic CSV: 12 significant digits, '.' decimal separator, '\\n' line
endings, rows ordered by the sweep parameter.
"""

import math

import numpy as np

from . import correlators
from .characterization import (
    classify_oph,
    noisy_bell_x_table,
    noisy_bell_z_table,
    oph_shifted_table,
    werner_z_table,
    BOUND_ENTANGLED,
    NPT_ENTANGLED,
)
from .errors import ParameterError
from .states import OPH, closed_form_negativity

NOISY_D = 3
NOISY_A_SET = (0.2, 0.4, 0.6, 0.8, 1.0)

_REGION_SHORT = {BOUND_ENTANGLED: "bound", NPT_ENTANGLED: "npt"}


def _fmt(x):
    if x is None:
        return ""
    if isinstance(x, str):
        return x
    return format(float(x), ".12g")


def _corr(jd, kind):
    if kind == "mp":
        return correlators.mutual_predictability(jd)
    if kind == "mi":
        return correlators.mutual_information(jd)
    return correlators.pcc_distribution(jd)


def _noisy_bell_panels(kind, steps):
    d = NOISY_D
    rows = [("x", a, _corr(noisy_bell_x_table(d, a), kind), None)
            for a in np.linspace(0.0, 1.0, steps)]
    for a in NOISY_A_SET:
        lo, hi = (a * d - 1.0) / 2.0, a * (d - 1.0) / 2.0
        for n in np.linspace(lo, hi, steps):
            rows.append(("z", a, _corr(noisy_bell_z_table(d, a, n), kind), max(0.0, n)))
    return ("panel", "a", kind, "negativity"), rows


def _werner_sweep(kind, steps):
    d = NOISY_D
    rows = []
    for a in np.linspace(0.0, 1.0, steps):
        rows.append((a, _corr(werner_z_table(d, a), kind), max(0.0, (1 - 2 * a) / d)))
    return ("a", kind, "negativity"), rows


def _oph_sweep(kind, steps):
    rows = []
    for a in np.linspace(2.0, 5.0, steps):
        region = _REGION_SHORT.get(classify_oph(a), "separable")
        rows.append((a, _corr(oph_shifted_table(a, k=1), kind), region,
                     closed_form_negativity(OPH(a))))
    return ("a", kind, "region", "negativity"), rows


def _oph_npt_sweep(kind, steps):
    rows = []
    for a in np.linspace(4.0, 5.0, steps):
        rows.append((a, _corr(oph_shifted_table(a, k=1), kind),
                     closed_form_negativity(OPH(a))))
    return ("a", kind, "negativity"), rows


def _bound_value(kind, d):
    if kind == "mp":
        return 1.0 + 1.0 / d
    if kind == "mi":
        return math.log2(d)
    return 1.0


def _bounds_noisy(kind, steps):
    d = NOISY_D
    thr = _bound_value(kind, d)
    rows = []
    for a in NOISY_A_SET:
        cx = _corr(noisy_bell_x_table(d, a), kind)
        lo, hi = (a * d - 1.0) / 2.0, a * (d - 1.0) / 2.0
        for n in np.linspace(lo, hi, steps):
            cz = _corr(noisy_bell_z_table(d, a, n), kind)
            lhs = abs(cz) + abs(cx) if kind == "pcc" else cz + cx
            rows.append((a, lhs, max(0.0, n), thr))
    return ("a", "lhs", "negativity", "threshold"), rows


def _bounds_werner(kind, steps):
    d = NOISY_D
    thr = _bound_value(kind, d)
    rows = []
    # X-basis table equals the Z-basis table by U (x) U invariance
    for a in np.linspace(0.0, 1.0, steps):
        c = _corr(werner_z_table(d, a), kind)
        lhs = 2.0 * abs(c) if kind == "pcc" else 2.0 * c
        rows.append((a, lhs, max(0.0, (1 - 2 * a) / d), thr))
    return ("a", "lhs", "negativity", "threshold"), rows


FIGURES = {}
for _kind in ("mp", "mi", "pcc"):
    FIGURES[f"fig-{_kind}-noisy-bell"] = (_noisy_bell_panels, _kind)
    FIGURES[f"fig-{_kind}-werner"] = (_werner_sweep, _kind)
    FIGURES[f"fig-oph-{_kind}"] = (_oph_sweep, _kind)
    FIGURES[f"fig-oph-{_kind}-neg"] = (_oph_npt_sweep, _kind)
    FIGURES[f"fig-bounds-noisy-{_kind}"] = (_bounds_noisy, _kind)
    FIGURES[f"fig-bounds-werner-{_kind}"] = (_bounds_werner, _kind)


def figure_ids():
    return sorted(FIGURES)


def render_figure(figure_id, steps=201) -> str:
    """CSV text for a figure id; raises ParameterError on an unknown id."""
    if figure_id not in FIGURES:
        raise ParameterError(f"unknown figure id {figure_id!r}")
    if steps < 2:
        raise ParameterError("steps must be >= 2")
    func, kind = FIGURES[figure_id]
    header, rows = func(kind, steps)
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_fmt(x) for x in row))
    return "\n".join(lines) + "\n"
