"""Command-line front end: compute, invert, figure, sweep, verify.

Exit codes: 0 ok, 1 verification failure, 2 input error, 3 inversion-domain
error.  JSON in, CSV/JSON out; no plotting.
"""

import dataclasses
import json
import os
import sys

import click
import numpy as np

from . import characterization as ch
from . import correlators, figures, measurement, states, verify
from .errors import InversionDomainError, ParameterError, QclabError
from .linalg import hermitian_eigenvalues, negativity_numeric

EXIT_VERIFY = 1
EXIT_INPUT = 2
EXIT_DOMAIN = 3


def _fail(code, message):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _load_state(text):
    if text.startswith("@"):
        path = text[1:]
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            _fail(EXIT_INPUT, f"cannot read state file: {exc}")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        _fail(EXIT_INPUT, f"malformed state JSON: {exc}")
    try:
        return states.family_from_dict(obj)
    except ParameterError as exc:
        _fail(EXIT_INPUT, str(exc))


def _parse_bases(spec, d):
    """'Z,Z' | 'Z,X' | 'X,X' | 'Z,shiftZ:k' | 'W,W' -> (basis_a, basis_b, shift)."""
    parts = spec.split(",")
    if len(parts) != 2:
        _fail(EXIT_INPUT, f"bad bases spec {spec!r}")
    out = []
    for idx, part in enumerate(parts):
        part = part.strip()
        if part == "X" and idx == 1:
            # party B measures in the conjugate Fourier basis so that the
            # Bell state is correlated on equal labels
            out.append(measurement.make_basis(d, "Xb"))
        elif part in ("Z", "X", "Xb", "W"):
            out.append(measurement.make_basis(d, part))
        elif part.startswith("shiftZ:"):
            try:
                k = int(part.split(":", 1)[1])
            except ValueError:
                _fail(EXIT_INPUT, f"bad shift in bases spec {spec!r}")
            out.append(measurement.make_basis(d, "shiftZ", k=k))
        else:
            _fail(EXIT_INPUT, f"unknown basis {part!r}")
    return out[0], out[1]


def _json_ready(value):
    if isinstance(value, (np.floating, np.integer)):
        return float(value)
    if dataclasses.is_dataclass(value):
        return {k: _json_ready(v) for k, v in dataclasses.asdict(value).items()}
    if isinstance(value, (list, tuple)):
        return [_json_ready(v) for v in value]
    if isinstance(value, dict):
        return {k: _json_ready(v) for k, v in value.items()}
    return value


@click.group()
def main():
    """Negativity and statistical correlators for two-qudit mixed states."""


@main.command()
@click.option("--state", required=True, help="state JSON or @file")
@click.option("--bases", default="Z,Z", show_default=True)
@click.option("--correlators", "wanted", default="mp,mi,pcc", show_default=True)
def compute(state, bases, wanted):
    """Correlators and Negativity of one state."""
    family = _load_state(state)
    try:
        rho = states.build_state(family)
    except QclabError as exc:
        _fail(EXIT_INPUT, str(exc))
    basis_a, basis_b = _parse_bases(bases, rho.dim_a)
    wanted_set = [w.strip() for w in wanted.split(",") if w.strip()]
    bad = [w for w in wanted_set if w not in ("mp", "mi", "pcc")]
    if bad:
        _fail(EXIT_INPUT, f"unknown correlators {bad}")
    jd = measurement.joint_distribution(rho, basis_a, basis_b)
    corr = {}
    for kind in wanted_set:
        if kind == "mp":
            corr["mp"] = correlators.mutual_predictability(jd)
        elif kind == "mi":
            corr["mi"] = correlators.mutual_information(jd)
        else:
            if basis_a.label == "W" and basis_b.label == "W":
                # degenerate W spectrum: use the expectation form
                w_obs = measurement.make_observable(rho.dim_a, "W")
                corr["pcc"] = correlators.pcc_observables(rho, w_obs, w_obs)
            else:
                corr["pcc"] = correlators.pcc_distribution(jd)
    eig = hermitian_eigenvalues(rho.matrix)
    report = {
        "state": states.family_to_dict(family),
        "bases": f"{basis_a.label},{basis_b.label}",
        "trace": float(np.trace(rho.matrix).real),
        "min_eigenvalue": float(eig[0]),
        "negativity_numeric": negativity_numeric(rho),
        "negativity_closed_form": states.closed_form_negativity(family),
        "correlators": corr,
    }
    click.echo(json.dumps(_json_ready(report), indent=2))


@main.command()
@click.option("--family", "family_kind", required=True,
              type=click.Choice(["noisy_bell", "werner", "oph"]))
@click.option("--correlator", "kind", required=True,
              type=click.Choice(["mp", "mi", "pcc"]))
@click.option("--values", required=True,
              help="noisy_bell: 'corrX,corrZ'; werner/oph: one value")
@click.option("--d", default=3, show_default=True)
@click.option("--k", default=1, show_default=True, help="OPH relabelling shift")
def invert(family_kind, kind, values, d, k):
    """Recover Negativity (and region/ambiguity) from measured correlators."""
    try:
        nums = [float(v) for v in values.split(",")]
    except ValueError:
        _fail(EXIT_INPUT, f"bad values {values!r}")
    try:
        if family_kind == "noisy_bell":
            if len(nums) != 2:
                _fail(EXIT_INPUT, "noisy_bell needs two values: corrX,corrZ")
            result = ch.invert_noisy_bell(nums[0], nums[1], kind, d)
        elif family_kind == "werner":
            if len(nums) != 1:
                _fail(EXIT_INPUT, "werner needs one value")
            result = ch.invert_werner(nums[0], kind, d)
        else:
            if len(nums) != 1:
                _fail(EXIT_INPUT, "oph needs one value")
            result = ch.oph_from_correlator(nums[0], kind, k=k)
    except InversionDomainError as exc:
        _fail(EXIT_DOMAIN, str(exc))
    except QclabError as exc:
        _fail(EXIT_INPUT, str(exc))
    click.echo(json.dumps(_json_ready(result), indent=2))


@main.command()
@click.option("--figure", "figure_id", required=True)
@click.option("--steps", default=201, show_default=True)
@click.option("--out", default=None, help="output path (default: <figure>.csv)")
def figure(figure_id, steps, out):
    """Write one figure-reproduction CSV."""
    try:
        text = figures.render_figure(figure_id, steps=steps)
    except ParameterError as exc:
        _fail(EXIT_INPUT, str(exc))
    path = out or f"{figure_id}.csv"
    with open(path, "w", newline="") as fh:
        fh.write(text)
    click.echo(f"wrote {path}")


@main.command()
@click.option("--state", required=True, help="family template JSON or @file")
@click.option("--param", required=True, help="swept parameter name")
@click.option("--start", type=float, required=True)
@click.option("--stop", type=float, required=True)
@click.option("--steps", default=201, show_default=True)
@click.option("--bases", default="Z,Z", show_default=True)
@click.option("--out", default="-", help="output path or '-' for stdout")
def sweep(state, param, start, stop, steps, bases, out):
    """Sweep one family parameter, emitting correlators and Negativity."""
    if steps < 2:
        _fail(EXIT_INPUT, "steps must be >= 2")
    base_family = _load_state(state)
    template = states.family_to_dict(base_family)
    if param not in template:
        _fail(EXIT_INPUT, f"family has no parameter {param!r}")
    lines = [f"{param},mp,mi,pcc,negativity"]
    for value in np.linspace(start, stop, steps):
        spec = dict(template)
        spec[param] = float(value)
        try:
            family = states.family_from_dict(spec)
            rho = states.build_state(family)
        except QclabError as exc:
            _fail(EXIT_INPUT, str(exc))
        basis_a, basis_b = _parse_bases(bases, rho.dim_a)
        jd = measurement.joint_distribution(rho, basis_a, basis_b)
        pcc = correlators.pcc_distribution(jd)
        lines.append(",".join([
            format(float(value), ".12g"),
            format(correlators.mutual_predictability(jd), ".12g"),
            format(correlators.mutual_information(jd), ".12g"),
            "" if pcc is None else format(pcc, ".12g"),
            format(states.closed_form_negativity(family), ".12g"),
        ]))
    text = "\n".join(lines) + "\n"
    if out == "-":
        click.echo(text, nl=False)
    else:
        with open(out, "w", newline="") as fh:
            fh.write(text)
        click.echo(f"wrote {out}")


@main.command("verify")
@click.option("--level", default="fast", type=click.Choice(["fast", "full"]),
              show_default=True)
def verify_cmd(level):
    """Run the self-verification suite."""
    results = verify.run_checks(level)
    failed = 0
    for name, ok, detail in results:
        status = "PASS" if ok else "FAIL"
        click.echo(f"{status} {name}: {detail}")
        if not ok:
            failed += 1
    if failed:
        click.echo(f"{failed} check(s) failed")
        sys.exit(EXIT_VERIFY)
    click.echo("all checks passed")


if __name__ == "__main__":
    main()
