"""Self-verification suite behind the ``verify`` CLI subcommand.

Runs oracle-equivalence grids, operator identities, inversion round-trips
and the conjecture residuals; ``fast`` uses trimmed grids, ``full`` the
acceptance-scale ones.
"""

import math

import numpy as np

from . import characterization as ch
from . import correlators, measurement, states
from .linalg import hermitian_eigenvalues, negativity_numeric


def _check_oracle_grids(full):
    worst = 0.0
    d_nb = (2, 3, 4, 5) if full else (2, 3)
    grid = np.linspace(0.0, 1.0, 11 if full else 5)
    for d in d_nb:
        for a in grid:
            for b in grid:
                for c in grid:
                    fam = states.NoisyBell(d, a, b, c)
                    worst = max(worst, abs(
                        negativity_numeric(states.build_state(fam))
                        - states.closed_form_negativity(fam)))
    d_w = (2, 3, 4, 5, 6) if full else (2, 3, 4)
    for d in d_w:
        for a in np.linspace(0.0, 1.0, 101 if full else 21):
            fam = states.Werner(d, a)
            worst = max(worst, abs(
                negativity_numeric(states.build_state(fam))
                - states.closed_form_negativity(fam)))
    for a in np.linspace(2.0, 5.0, 301 if full else 31):
        fam = states.OPH(a)
        worst = max(worst, abs(
            negativity_numeric(states.build_state(fam))
            - states.closed_form_negativity(fam)))
    return worst < 1e-9, f"max |numeric - closed form| = {worst:.3e}"


def _check_w_identities(full):
    worst = 0.0
    for d in range(2, 17 if full else 9):
        w = measurement.make_observable(d, "W").matrix
        ident = w @ w - ((d - 1) * np.eye(d) + (d - 2) * w)
        worst = max(worst, np.max(np.abs(ident)))
        eig = hermitian_eigenvalues(w)
        expected = np.array([-1.0] * (d - 1) + [d - 1.0])
        worst = max(worst, np.max(np.abs(eig - expected)))
        z = measurement.make_basis(d, "Z")
        wb = measurement.make_basis(d, "W")
        overlaps = np.abs(z.vectors.conj() @ wb.vectors.T) ** 2
        worst = max(worst, np.max(np.abs(overlaps - 1.0 / d)))
    return worst < 1e-12, f"max identity defect = {worst:.3e}"


def _check_joint_tables(full):
    worst = 0.0
    grid = np.linspace(0.0, 1.0, 11 if full else 5)
    zb = measurement.make_basis(3, "Z")
    xa = measurement.make_basis(3, "X")
    xb = measurement.make_basis(3, "Xb")
    for a in grid:
        for b in grid:
            for c in grid:
                fam = states.NoisyBell(3, a, b, c)
                rho = states.build_state(fam)
                jd = measurement.joint_distribution(rho, zb, zb)
                n = (-3 + 9 * a + b - a * b + 3 * (1 - a) * (1 - b) * c) / 6.0
                expect = np.full((3, 3), a / 3 - 2 * n / 6)
                np.fill_diagonal(expect, (1 - 2 * a + 2 * n) / 3)
                worst = max(worst, np.max(np.abs(jd.p - expect)))
                jx = measurement.joint_distribution(rho, xa, xb)
                expect_x = np.full((3, 3), (1 - a) / 9)
                np.fill_diagonal(expect_x, a / 3 + (1 - a) / 9)
                worst = max(worst, np.max(np.abs(jx.p - expect_x)))
    for a in np.linspace(2.0, 5.0, 31 if full else 11):
        rho = states.build_state(states.OPH(a))
        for k, expected in ((0, 2.0 / 7), (1, a / 7), (2, (5 - a) / 7)):
            jd = measurement.joint_distribution(rho, zb, zb)
            worst = max(worst, abs(
                correlators.mutual_predictability(jd, k=k) - expected))
    return worst < 1e-12, f"max table deviation = {worst:.3e}"


def _check_round_trips(full):
    worst = 0.0
    grid = np.linspace(0.0, 1.0, 5 if full else 3)
    for a in grid:
        for b in grid:
            for c in grid:
                fam = states.NoisyBell(3, a, b, c)
                rho = states.build_state(fam)
                zb = measurement.make_basis(3, "Z")
                jz = measurement.joint_distribution(rho, zb, zb)
                jx = measurement.joint_distribution(
                    rho,
                    measurement.make_basis(3, "X"),
                    measurement.make_basis(3, "Xb"),
                )
                n_true = states.closed_form_negativity(fam)
                for kind in ("mp", "mi", "pcc"):
                    if kind == "pcc" and (
                        correlators.pcc_distribution(jx) is None
                        or correlators.pcc_distribution(jz) is None
                    ):
                        continue
                    cx = ch._corr(jx, kind)
                    cz = ch._corr(jz, kind)
                    res = ch.invert_noisy_bell(cx, cz, kind, 3)
                    worst = max(worst, abs(res.negativity - n_true))
    for a in np.linspace(0.0, 1.0, 21 if full else 9):
        fam = states.Werner(3, a)
        jd = ch.werner_z_table(3, a)
        n_true = states.closed_form_negativity(fam)
        for kind in ("mp", "pcc"):
            res = ch.invert_werner(ch._corr(jd, kind), kind, 3)
            worst = max(worst, abs(res.negativity - n_true))
    for a in np.linspace(2.0, 5.0, 31 if full else 13):
        jd = ch.oph_shifted_table(a, k=1)
        true_region = ch.classify_oph(a)
        for kind in ("mp", "mi", "pcc"):
            res = ch.oph_from_correlator(ch._corr(jd, kind), kind, k=1)
            if res.region != true_region:
                return False, f"OPH region mismatch at a = {a}"
            if true_region == ch.NPT_ENTANGLED:
                worst = max(worst, abs(
                    res.negativity - states.closed_form_negativity(states.OPH(a))))
    return worst < 1e-8, f"max round-trip error = {worst:.3e}"


def _check_conjecture(full):
    worst = 0.0
    rng = np.random.default_rng(20240817)
    dims = range(2, 11) if full else range(2, 5)
    draws = 200 if full else 20
    p_steps = 101 if full else 11
    for d in dims:
        for _ in range(draws // len(list(dims)) + 1):
            lam = rng.dirichlet(np.ones(d))
            if sum(1 for x in lam if x > 0) < 2:
                continue
            fam = states.PureSchmidt(tuple(lam / lam.sum()))
            worst = max(worst, abs(ch.conjecture_residual(fam)))
        for p in np.linspace(0.0, 1.0, p_steps):
            worst = max(worst, abs(ch.conjecture_residual(states.CnaBell(d, p))))
    return worst < 1e-10, f"max conjecture residual = {worst:.3e}"


def _check_bound_landscape(full):
    count = 21 if full else 7
    for i in range(count):
        a = 0.3 + 0.2 * (i + 0.5) / count
        jd = ch.werner_z_table(3, a)
        mp = correlators.mutual_predictability(jd)
        mi = correlators.mutual_information(jd)
        pcc = correlators.pcc_distribution(jd)
        if ch.bound_spengler([mp, mp], 3).violated:
            return False, f"Spengler unexpectedly violated at a = {a}"
        if ch.bound_maccone_mi(mi, mi, 3).violated:
            return False, f"Maccone MI unexpectedly violated at a = {a}"
        if ch.bound_maccone_pcc(pcc, pcc).violated:
            return False, f"Maccone PCC unexpectedly violated at a = {a}"
        if not mp < ch.state_dependent_threshold("werner", "mp", 3):
            return False, f"MP threshold missed entangled state at a = {a}"
        if not mi > ch.state_dependent_threshold("werner", "mi", 3):
            return False, f"MI threshold missed entangled state at a = {a}"
        if not pcc < ch.state_dependent_threshold("werner", "pcc", 3):
            return False, f"PCC threshold missed entangled state at a = {a}"
    bell = ch.noisy_bell_z_table(3, 1.0, 1.0)
    mp = correlators.mutual_predictability(bell)
    mi = correlators.mutual_information(bell)
    pcc = correlators.pcc_distribution(bell)
    ok = (
        ch.bound_spengler([mp, mp], 3).violated
        and ch.bound_maccone_mi(mi, mi, 3).violated
        and ch.bound_maccone_pcc(pcc, pcc).violated
    )
    return ok, "pure Bell violates all three bounds" if ok else "Bell violation missing"


CHECKS = (
    ("negativity-oracle-grids", _check_oracle_grids),
    ("w-operator-identities", _check_w_identities),
    ("joint-distribution-tables", _check_joint_tables),
    ("inversion-round-trips", _check_round_trips),
    ("conjecture-residuals", _check_conjecture),
    ("bound-landscape", _check_bound_landscape),
)


def run_checks(level="fast"):
    """Run every check; yields (name, ok, detail)."""
    full = level == "full"
    results = []
    for name, func in CHECKS:
        try:
            ok, detail = func(full)
        except Exception as exc:  # a crash is a failure, not an abort
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append((name, ok, detail))
    return results
