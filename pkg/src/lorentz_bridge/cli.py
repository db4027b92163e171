"""Command-line front end.

Usage:
    lorentz-bridge boost --vector 1,0,0,0 --beta 0.6
    lorentz-bridge wave --omega 2.5 --k 1.5,0,0
    lorentz-bridge doppler --beta-range -0.9:0.9:0.3
    lorentz-bridge dispersion --omega0 2 --k-max 3 --points 4
    lorentz-bridge verify --suite theorem-a --samples 1000 --seed 7

Exit codes: 0 success/pass, 1 verification failure, 2 usage error,
3 domain error (e.g. |beta| >= 1, |k| > omega).
"""

from __future__ import annotations

import csv
import io
import math
import os
import sys
from pathlib import Path
from typing import Any, Sequence

import click
import numpy as np

from .harness import SUITE_GROUPS, SamplingSpec, render_json, run_all
from .kinematics import (
    WaveState,
    doppler_factor,
    group_velocity,
    phase_velocity,
    rest_frequency,
    rest_wave_velocity,
)
from .minkowski import Boost, FourVector, boost_axis
from .theorems import DEFAULT_TOLERANCE

__all__ = ["cli", "main", "EXIT_OK", "EXIT_FAIL", "EXIT_USAGE", "EXIT_DOMAIN"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3
SEED_ENV = "LORENTZ_BRIDGE_SEED"
JSON_DIGITS = 17
TEXT_DIGITS = 6


class DomainError(click.ClickException):
    exit_code = EXIT_DOMAIN


def _floats(text: str, n: int | None, flag: str) -> list[float]:
    try:
        vals = [float(x) for x in text.split(",")]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated numbers, got {text!r}", param_hint=flag) from None
    if n is not None and len(vals) != n:
        raise click.BadParameter(f"expected {n} components, got {len(vals)}", param_hint=flag)
    if not all(math.isfinite(v) for v in vals):
        raise click.BadParameter("components must be finite", param_hint=flag)
    return vals


def fmt_number(x: float, digits: int) -> str:
    x = float(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    text = f"{x:.{digits}g}"
    return "0" if text in ("-0", "0") else text


def _emit_table(header: Sequence[str], rows: Sequence[Sequence[Any]], fmt: str, digits: int | None) -> None:
    if fmt == "json":
        d = JSON_DIGITS if digits is None else digits
        records = [dict(zip(header, row)) for row in rows]
        click.echo(render_json(records, digits=d), nl=False)
        return
    d = TEXT_DIGITS if digits is None else digits

    def cell(v):
        if v is None:
            return "undefined"
        if isinstance(v, str):
            return v
        return fmt_number(v, d)

    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([cell(v) for v in row])
        click.echo(buf.getvalue(), nl=False)
        return
    for row in rows:
        click.echo(",".join(cell(v) for v in row))


def _json_value(v):
    if isinstance(v, float) and not math.isfinite(v):
        return None
    return v


def format_option(default: str):
    return click.option(
        "--format", "fmt", type=click.Choice(["json", "csv", "plain"]), default=default, show_default=True,
        help="Output format.",
    )


precision_option = click.option(
    "--precision", type=click.IntRange(1, 17), default=None,
    help="Significant digits (default 17 for json, 6 otherwise).",
)
c_option = click.option(
    "--c", "c_light", type=float, default=1.0, show_default=True,
    help="Speed of light for SI input/output; 1 keeps natural units.",
)


# --- config file ------------------------------------------------------------


def read_config(path: str | os.PathLike) -> dict[str, str]:
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    out = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise click.UsageError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        out[key.lstrip("-")] = value
    return out


def _default_map(group: click.Group, settings: dict[str, str]) -> dict[str, dict[str, str]]:
    dmap: dict[str, dict[str, str]] = {}
    used = set()
    for name, cmd in group.commands.items():
        for param in cmd.params:
            if not isinstance(param, click.Option):
                continue
            for opt in param.opts:
                key = opt.lstrip("-")
                if key in settings:
                    dmap.setdefault(name, {})[param.name] = settings[key]
                    used.add(key)
    unknown = sorted(set(settings) - used)
    if unknown:
        raise click.UsageError(f"unknown config keys: {', '.join(unknown)}")
    return dmap


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False),
              help="key=value file mirroring the command flags; flags win.")
@click.version_option(package_name="artifact")
@click.pass_context
def cli(ctx: click.Context, config_path: str | None):
    """Relativistic wave-particle kinematics and proportionality verification."""
    if config_path:
        ctx.default_map = _default_map(cli, read_config(config_path))


# --- commands ---------------------------------------------------------------


@cli.command("boost")
@click.option("--vector", required=True, help="Four-vector t,x,y,z.")
@click.option("--beta", type=float, required=True, help="Signed frame speed (fraction of c).")
@click.option("--axis", type=click.Choice(["x", "y", "z"]), default="x", show_default=True)
@format_option("plain")
@precision_option
@c_option
def cmd_boost(vector, beta, axis, fmt, precision, c_light):
    """Boost a four-vector into a frame moving along AXIS."""
    t, x, y, z = _floats(vector, 4, "--vector")
    if not abs(beta) < 1.0:
        raise DomainError(f"--beta: |beta| = {abs(beta):g} must be < 1")
    v = FourVector(c_light * t, x, y, z)
    out = boost_axis(v, axis, Boost.from_beta(beta, axis))
    comps = [out.t / c_light, out.x, out.y, out.z]
    _emit_table(["t", "x", "y", "z"], [comps], fmt, precision)


@cli.command("wave")
@click.option("--omega", type=float, required=True, help="Angular frequency.")
@click.option("--k", "k_text", required=True, help="Wave vector kx,ky,kz.")
@format_option("plain")
@precision_option
@c_option
def cmd_wave(omega, k_text, fmt, precision, c_light):
    """Derived quantities of a plane wave: omega0, v_p, v_g, wavelength, rest-frame velocity."""
    k = _floats(k_text, 3, "--k")
    k_nat = [c_light * kc for kc in k]
    try:
        w = WaveState(omega, k_nat)
    except ValueError as exc:
        if not omega > 0:
            raise DomainError(f"--omega: {exc}") from None
        raise DomainError(f"--k: {exc}") from None
    kmag = math.hypot(*k)
    omega0 = rest_frequency(w)
    vp = phase_velocity(w) * c_light if kmag > 0 else math.inf
    vg = group_velocity(w) * c_light
    wavelength = 2.0 * math.pi / kmag if kmag > 0 else math.inf
    try:
        v_rest = [vc * c_light for vc in rest_wave_velocity(w)]
    except ValueError:
        v_rest = [None, None, None]
    rows = [
        ("omega0", omega0),
        ("v_p", vp),
        ("v_g", vg),
        ("wavelength", wavelength),
        ("v_rest_x", v_rest[0]),
        ("v_rest_y", v_rest[1]),
        ("v_rest_z", v_rest[2]),
    ]
    if fmt == "json":
        d = JSON_DIGITS if precision is None else precision
        click.echo(render_json({name: _json_value(val) for name, val in rows}, digits=d), nl=False)
        return
    _emit_table(["quantity", "value"], rows, fmt, precision)


def _parse_range(text: str) -> list[float]:
    parts = text.split(":")
    if len(parts) == 1:
        vals = _floats(parts[0], 1, "--beta-range")
        start, stop, step = vals[0], vals[0], 1.0
    elif len(parts) == 3:
        try:
            start, stop, step = (float(p) for p in parts)
        except ValueError:
            raise click.BadParameter(f"expected a:b:step, got {text!r}", param_hint="--beta-range") from None
    else:
        raise click.BadParameter(f"expected a:b:step or a single value, got {text!r}", param_hint="--beta-range")
    if not all(math.isfinite(v) for v in (start, stop, step)):
        raise click.BadParameter("range values must be finite", param_hint="--beta-range")
    for end in (start, stop):
        if not abs(end) < 1.0:
            raise DomainError(f"--beta-range: endpoint {end:g} outside (-1, 1)")
    if stop < start:
        raise click.BadParameter("range end is below its start", param_hint="--beta-range")
    if step <= 0:
        raise click.BadParameter("step must be > 0", param_hint="--beta-range")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [round(start + i * step, 12) for i in range(count)]


@cli.command("doppler")
@click.option("--beta-range", "beta_range", required=True, help="a:b:step or a single beta.")
@format_option("csv")
@precision_option
def cmd_doppler(beta_range, fmt, precision):
    """Doppler factor sqrt((1-beta)/(1+beta)) over a range of beta."""
    rows = [(b, doppler_factor(b)) for b in _parse_range(beta_range)]
    _emit_table(["beta", "factor"], rows, fmt, precision)


@cli.command("dispersion")
@click.option("--omega0", type=float, required=True, help="Rest-wave frequency (>= 0).")
@click.option("--k-max", "k_max", type=float, required=True, help="Largest wave number (> 0).")
@click.option("--points", type=int, required=True, help="Number of rows (>= 2).")
@format_option("csv")
@precision_option
@c_option
def cmd_dispersion(omega0, k_max, points, fmt, precision, c_light):
    """Table of k, omega, v_p, v_g on omega**2 = omega0**2 + k**2, k = k_max*i/points."""
    if points < 2:
        raise click.BadParameter("need at least 2 points", param_hint="--points")
    if not (math.isfinite(omega0) and omega0 >= 0):
        raise DomainError("--omega0: must be >= 0")
    if not (math.isfinite(k_max) and k_max > 0):
        raise DomainError("--k-max: must be > 0")
    ks = k_max * np.arange(1, points + 1) / points
    rows = []
    for k in ks:
        kn = c_light * float(k)
        omega = math.hypot(omega0, kn)
        rows.append((float(k), omega, c_light * omega / kn, c_light * kn / omega))
    _emit_table(["k", "omega", "v_p", "v_g"], rows, fmt, precision)


def _default_seed() -> int:
    env = os.environ.get(SEED_ENV)
    if env is None:
        return 42
    try:
        return int(env)
    except ValueError:
        raise click.UsageError(f"{SEED_ENV} must be an integer, got {env!r}") from None


@cli.command("verify")
@click.option("--suite", type=click.Choice(sorted(SUITE_GROUPS)), default="all", show_default=True)
@click.option("--seed", type=click.IntRange(0, 2**64 - 1), default=None, help=f"RNG seed (default ${SEED_ENV} or 42).")
@click.option("--samples", type=click.IntRange(min=1), default=1000, show_default=True)
@click.option("--beta-max", "beta_max", type=float, default=0.99, show_default=True)
@click.option("--beta-mode", "beta_mode", type=click.Choice(["uniform", "rapidity"]), default="uniform", show_default=True)
@click.option("--C", "C_value", type=float, default=None, help="Fix the proportionality constant (default: sampled).")
@click.option("--tolerance", type=float, default=DEFAULT_TOLERANCE, show_default=True)
@click.option("--exponent", type=float, default=1.0, show_default=True,
              help="Candidate n in E = C omega**n for the ashby-miller suite.")
@click.option("--perturb", type=float, default=0.0, show_default=True,
              help="Mismatch injected into particle/wave pairs (negative control).")
@click.option("--output", type=click.Path(dir_okay=False, writable=True), default=None,
              help="Also write the report to this file.")
@click.option("--format", "fmt", type=click.Choice(["json", "plain"]), default="json", show_default=True)
@click.pass_context
def cmd_verify(ctx, suite, seed, samples, beta_max, beta_mode, C_value, tolerance, exponent, perturb, output, fmt):
    """Run the verification suites; exit 0 iff every verdict passes."""
    if seed is None:
        seed = _default_seed()
    if not (0.0 <= beta_max < 1.0):
        raise click.BadParameter("must lie in [0, 1)", param_hint="--beta-max")
    if C_value is not None and not C_value > 0:
        raise click.BadParameter("must be > 0", param_hint="--C")
    if not tolerance > 0:
        raise click.BadParameter("must be > 0", param_hint="--tolerance")
    spec = SamplingSpec(seed=seed, n_samples=samples, beta_max=beta_max, beta_mode=beta_mode)
    report = run_all(spec, C_value, tolerance, suites=suite, perturb=perturb, exponent=exponent)
    text = render_json(report.to_dict(), digits=JSON_DIGITS)
    if output:
        Path(output).write_text(text)
    if fmt == "json":
        click.echo(text, nl=False)
    else:
        for v in report.verdicts:
            status = "PASS" if v.passed else "FAIL"
            click.echo(f"{status} {v.suite_name:22s} n={v.samples:<8d} max_rel={v.max_rel_residual:.3e} tol={v.tolerance:.1e}")
        click.echo("overall: " + ("PASS" if report.overall_pass else "FAIL"))
    for v in report.verdicts:
        if not v.passed:
            click.echo(f"FAIL {v.suite_name}: {v.note}", err=True)
    ctx.exit(EXIT_OK if report.overall_pass else EXIT_FAIL)


def main(argv: Sequence[str] | None = None) -> int:
    try:
        rc = cli.main(args=argv, prog_name="lorentz-bridge", standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.Abort:
        click.echo("aborted", err=True)
        return EXIT_FAIL
    return rc if isinstance(rc, int) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
