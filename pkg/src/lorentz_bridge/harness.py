"""Seeded sampling, the verification suites and the JSON report.

Every suite draws from its own generator, seeded from ``(seed, suite name)``,
so adding or skipping a suite never shifts the numbers of another one.
"""

from __future__ import annotations

import json
import math
import time
import zlib
from dataclasses import asdict, dataclass, field
from typing import Any, Callable

import numpy as np

from . import __version__
from .kinematics import ParticleState, WaveState, lorentz_gamma, phase_harmony_check
from .minkowski import AXES, Boost, axis_index, boost_array, norm_sq_array
from .theorems import (
    DEFAULT_TOLERANCE,
    TheoremVerdict,
    make_verdict,
    verify_ashby_miller,
    verify_direction_lemma,
    verify_einstein_energy,
    verify_proportionality,
    verify_theorem_a,
    verify_theorem_b,
)

__all__ = [
    "SamplingSpec",
    "VerificationReport",
    "SUITES",
    "SUITE_GROUPS",
    "suite_stream",
    "sample_betas",
    "sample_axes",
    "sample_boost",
    "sample_velocities",
    "sample_case1_pair",
    "run_suite",
    "run_all",
    "render_json",
    "numeric_fields",
]

STRESS_BETA_MAX = 1.0 - 1e-6
HARMONY_NU0 = (1.0, 10.0)
HARMONY_BETAS = (0.3, 0.6, 0.9)
HARMONY_T_MAX = 100.0


@dataclass(frozen=True)
class SamplingSpec:
    seed: int = 42
    n_samples: int = 1000
    beta_max: float = 0.99
    mass_range: tuple[float, float] = (1e-3, 1e3)
    omega0_range: tuple[float, float] = (1e-3, 1e3)
    c_range: tuple[float, float] = (1e-3, 1e3)
    axes: tuple[str, ...] = AXES
    beta_mode: str = "uniform"  # or "rapidity"
    massless_fraction: float = 0.1

    def __post_init__(self):
        if not (0 <= int(self.seed) < 2**64):
            raise ValueError("seed must be a 64-bit unsigned integer")
        if int(self.n_samples) < 1:
            raise ValueError("n_samples must be >= 1")
        if not (0.0 <= self.beta_max < 1.0):
            raise ValueError("beta_max must lie in [0, 1)")
        for name in ("mass_range", "omega0_range", "c_range"):
            lo, hi = getattr(self, name)
            if not (0.0 < lo <= hi and math.isfinite(hi)):
                raise ValueError(f"{name} must be a non-empty positive interval, got {(lo, hi)}")
        if not self.axes or any(a not in AXES for a in self.axes):
            raise ValueError(f"axes must be a non-empty subset of {AXES}")
        if self.beta_mode not in ("uniform", "rapidity"):
            raise ValueError("beta_mode must be 'uniform' or 'rapidity'")
        if not (0.0 <= self.massless_fraction <= 1.0):
            raise ValueError("massless_fraction must lie in [0, 1]")

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        for key in ("mass_range", "omega0_range", "c_range", "axes"):
            d[key] = list(d[key])
        return d


@dataclass
class VerificationReport:
    version: str
    config: dict[str, Any]
    verdicts: list[TheoremVerdict] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def overall_pass(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def verdict(self, name: str) -> TheoremVerdict:
        for v in self.verdicts:
            if v.suite_name == name:
                return v
        raise KeyError(name)

    def to_dict(self) -> dict[str, Any]:
        return {
            "version": self.version,
            "config": self.config,
            "verdicts": [v.to_dict() for v in self.verdicts],
            "overall_pass": self.overall_pass,
            "wall_time": self.wall_time,
        }


# --- sampling ---------------------------------------------------------------


def suite_stream(seed: int, name: str) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([int(seed), zlib.crc32(name.encode())]))


def sample_betas(rng: np.random.Generator, spec: SamplingSpec, n: int, beta_max: float | None = None) -> np.ndarray:
    bm = spec.beta_max if beta_max is None else beta_max
    if bm == 0.0:
        return np.zeros(n)
    if spec.beta_mode == "rapidity":
        phi_max = math.atanh(bm)
        return np.clip(np.tanh(rng.uniform(-phi_max, phi_max, n)), -bm, bm)
    return rng.uniform(-bm, bm, n)


def sample_axes(rng: np.random.Generator, spec: SamplingSpec, n: int) -> np.ndarray:
    choices = np.array([axis_index(a) for a in spec.axes])
    return choices[rng.integers(0, choices.size, n)]


def sample_boost(rng: np.random.Generator, spec: SamplingSpec) -> Boost:
    beta = float(sample_betas(rng, spec, 1)[0])
    axis = int(sample_axes(rng, spec, 1)[0])
    return Boost.from_beta(beta, axis)


def sample_velocities(rng: np.random.Generator, spec: SamplingSpec, n: int, beta_max: float | None = None) -> np.ndarray:
    """Isotropic directions with speed uniform in [0, beta_max]."""
    bm = spec.beta_max if beta_max is None else beta_max
    d = rng.normal(size=(n, 3))
    d /= np.linalg.norm(d, axis=1)[:, None]
    return d * rng.uniform(0.0, bm, n)[:, None]


def _uniform(rng: np.random.Generator, rng_range: tuple[float, float], n: int) -> np.ndarray:
    return rng.uniform(rng_range[0], rng_range[1], n)


def _log_uniform(rng: np.random.Generator, rng_range: tuple[float, float], n: int) -> np.ndarray:
    lo, hi = rng_range
    return np.exp(rng.uniform(math.log(lo), math.log(hi), n))


def sample_case1_pair(rng: np.random.Generator, spec: SamplingSpec) -> tuple[ParticleState, WaveState]:
    """A Case 1 particle and its wave, created at rest and then set in motion."""
    m0 = float(_uniform(rng, spec.mass_range, 1)[0])
    omega0 = float(_uniform(rng, spec.omega0_range, 1)[0])
    beta = float(sample_betas(rng, spec, 1)[0])
    axis = int(sample_axes(rng, spec, 1)[0])
    v = [0.0, 0.0, 0.0]
    v[axis] = beta
    g = lorentz_gamma(beta)
    k = [0.0, 0.0, 0.0]
    k[axis] = g * beta * omega0
    return ParticleState(m0, tuple(v)), WaveState(g * omega0, tuple(k))


def _massive_four_momenta(rng, spec, n, beta_max=None) -> tuple[np.ndarray, np.ndarray]:
    m0 = _uniform(rng, spec.mass_range, n)
    vel = sample_velocities(rng, spec, n, beta_max)
    speed = np.linalg.norm(vel, axis=1)
    g = 1.0 / np.sqrt((1.0 - speed) * (1.0 + speed))
    p = np.column_stack([g * m0, (g * m0)[:, None] * vel])
    return m0, p


# --- suites -----------------------------------------------------------------


@dataclass
class _Ctx:
    spec: SamplingSpec
    C: float | None
    tolerance: float
    perturb: float
    exponent: float

    def rng(self, name: str) -> np.random.Generator:
        return suite_stream(self.spec.seed, name)

    def c_values(self, rng, n) -> np.ndarray:
        if self.C is not None:
            return np.full(n, float(self.C))
        return _log_uniform(rng, self.spec.c_range, n)


def _suite_theorem_a(ctx: _Ctx) -> list[TheoremVerdict]:
    spec, n = ctx.spec, ctx.spec.n_samples
    rng = ctx.rng("theorem-a")
    m0 = _uniform(rng, (0.0, spec.mass_range[1]), n)
    m0[rng.uniform(size=n) < spec.massless_fraction] = 0.0
    C = ctx.c_values(rng, n)
    vel = sample_velocities(rng, spec, n)
    photon_dir = rng.normal(size=(n, 3))
    photon_e = _uniform(rng, spec.mass_range, n)
    betas = sample_betas(rng, spec, n)
    axes = sample_axes(rng, spec, n)
    return [
        verify_theorem_a(
            m0, C, betas, axes,
            start_velocity=vel, photon_energy=photon_e, photon_direction=photon_dir,
            tolerance=ctx.tolerance, perturb=ctx.perturb,
        )
    ]


def _suite_proportionality(ctx: _Ctx) -> list[TheoremVerdict]:
    spec, n = ctx.spec, ctx.spec.n_samples
    rng = ctx.rng("proportionality")
    _, b = _massive_four_momenta(rng, spec, n)
    C = ctx.c_values(rng, n)
    a = C[:, None] * b
    if ctx.perturb:
        a[:, 1:] += ctx.perturb
    betas = sample_betas(rng, spec, n)
    axes = sample_axes(rng, spec, n)
    return [verify_proportionality(a, b, C, betas, axes, tolerance=ctx.tolerance)]


def _suite_einstein(ctx: _Ctx) -> list[TheoremVerdict]:
    spec, n = ctx.spec, ctx.spec.n_samples
    rng = ctx.rng("einstein")
    m0 = _uniform(rng, spec.mass_range, n)
    vel = sample_velocities(rng, spec, n)
    return [verify_einstein_energy(m0, vel, tolerance=ctx.tolerance, perturb=ctx.perturb)]


def _suite_ashby_miller(ctx: _Ctx) -> list[TheoremVerdict]:
    rng = ctx.rng("ashby-miller")
    betas = sample_betas(rng, ctx.spec, ctx.spec.n_samples)
    return [verify_ashby_miller(betas, exponent=ctx.exponent, tolerance=ctx.tolerance)]


def _suite_lemma(ctx: _Ctx) -> list[TheoremVerdict]:
    spec, n = ctx.spec, ctx.spec.n_samples
    rng = ctx.rng("lemma")
    omega0 = _uniform(rng, spec.omega0_range, n)
    m0 = _uniform(rng, spec.mass_range, n)
    vel = sample_betas(rng, spec, n)
    axes = sample_axes(rng, spec, n)
    return [verify_direction_lemma(omega0, vel, axes, m0=m0, tolerance=ctx.tolerance, perturb=ctx.perturb)]


def _suite_theorem_b(ctx: _Ctx) -> list[TheoremVerdict]:
    spec, n = ctx.spec, ctx.spec.n_samples
    out = []
    rng = ctx.rng("theorem-b-case1")
    m0 = _uniform(rng, spec.mass_range, n)
    omega0 = _uniform(rng, spec.omega0_range, n)
    out.append(
        verify_theorem_b(m0, omega0, sample_betas(rng, spec, n), sample_axes(rng, spec, n),
                         tolerance=ctx.tolerance, perturb=ctx.perturb)
    )
    for case, m_fn, w_fn in (
        (2, lambda r: _uniform(r, spec.mass_range, n), lambda r: np.zeros(n)),
        (3, lambda r: np.zeros(n), lambda r: _uniform(r, spec.omega0_range, n)),
    ):
        rng = ctx.rng(f"theorem-b-case{case}")
        m0, omega0 = m_fn(rng), w_fn(rng)
        out.append(
            verify_theorem_b(m0, omega0, sample_betas(rng, spec, n), sample_axes(rng, spec, n), tolerance=ctx.tolerance)
        )
    rng = ctx.rng("theorem-b-case4")
    e1 = _uniform(rng, spec.mass_range, n)
    w1 = _uniform(rng, spec.omega0_range, n)
    out.append(
        verify_theorem_b(np.zeros(n), np.zeros(n), sample_betas(rng, spec, n), sample_axes(rng, spec, n),
                         light_energy=e1, light_omega=w1, tolerance=ctx.tolerance, perturb=ctx.perturb)
    )
    return out


def shell_residual(before: np.ndarray, after: np.ndarray, betas: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Norm change under a boost, scaled by ``max(1, |norm|, gamma**2 |v|**2)``.

    ``|v|`` is the Euclidean length of the input four-vector; boosted
    components are of size gamma |v|, so that is the size of the terms
    cancelling in the norm.
    """
    n0 = norm_sq_array(before)
    n1 = norm_sq_array(after)
    g2 = 1.0 / ((1.0 - betas) * (1.0 + betas))
    scale = np.maximum.reduce([np.ones_like(n0), np.abs(n0), g2 * np.sum(before**2, axis=1)])
    diff = np.abs(n1 - n0)
    return diff, diff / scale


def _shell_verdicts(rng, spec, n, tolerance, beta_max=None, stress=False) -> list[TheoremVerdict]:
    m0, p = _massive_four_momenta(rng, spec, n, beta_max)
    omega0 = _uniform(rng, spec.omega0_range, n)
    kvel = sample_velocities(rng, spec, n, beta_max)
    ks = np.linalg.norm(kvel, axis=1)
    gk = 1.0 / np.sqrt((1.0 - ks) * (1.0 + ks))
    k = np.column_stack([gk * omega0, (gk * omega0)[:, None] * kvel])
    betas = sample_betas(rng, spec, n, beta_max)
    axes = sample_axes(rng, spec, n)
    out = []
    g2 = 1.0 / ((1.0 - betas) * (1.0 + betas))
    for label, vec, inv in (("mass", p, m0**2), ("wave", k, omega0**2)):
        boosted = boost_array(vec, betas, axes)
        abs_r, rel_r = shell_residual(vec, boosted, betas)
        # the boosted norm must also match the generating invariant
        n1 = norm_sq_array(boosted)
        scale = np.maximum.reduce([np.ones(n), inv, g2 * np.sum(vec**2, axis=1)])
        rel = np.maximum(rel_r, np.abs(n1 - inv) / scale)
        if stress:
            rel = rel / g2
        out.append(
            make_verdict(
                f"{label}-shell" + ("-stress" if stress else ""),
                np.maximum(abs_r, np.abs(n1 - inv)), rel, tolerance,
                {"vector": vec, "beta": betas, "axis": axes, "invariant": inv},
                note="Minkowski norm preserved; scale max(1, |norm|, gamma^2 |v|^2)"
                + ("; tolerance relaxed by gamma^2" if stress else ""),
            )
        )
    return out


def _suite_shells(ctx: _Ctx) -> list[TheoremVerdict]:
    spec = ctx.spec
    out = _shell_verdicts(ctx.rng("shells"), spec, spec.n_samples, ctx.tolerance)
    out += _shell_verdicts(ctx.rng("shells-stress"), spec, spec.n_samples, ctx.tolerance,
                          beta_max=STRESS_BETA_MAX, stress=True)
    out.append(_composition_verdict(ctx))
    return out


def _composition_verdict(ctx: _Ctx) -> TheoremVerdict:
    spec, n = ctx.spec, ctx.spec.n_samples
    rng = ctx.rng("rapidity-composition")
    _, p = _massive_four_momenta(rng, spec, n)
    b1 = sample_betas(rng, spec, n)
    b2 = sample_betas(rng, spec, n)
    axes = sample_axes(rng, spec, n)
    sequential = boost_array(boost_array(p, b1, axes), b2, axes)
    composed = boost_array(p, np.tanh(np.arctanh(b1) + np.arctanh(b2)), axes)
    g2 = np.cosh(np.arctanh(b1) + np.arctanh(b2)) ** 2
    diff = np.abs(sequential - composed).max(axis=1)
    scale = np.maximum(1.0, np.sqrt(g2 * np.cosh(np.arctanh(b1)) ** 2) * np.abs(p).max(axis=1))
    return make_verdict(
        "rapidity-composition", diff, diff / scale, ctx.tolerance,
        {"vector": p, "beta1": b1, "beta2": b2, "axis": axes},
        note="boost(b2) o boost(b1) == boost(tanh(atanh b1 + atanh b2))",
    )


def _suite_harmony(ctx: _Ctx) -> list[TheoremVerdict]:
    from .kinematics import phase_harmony_check
    t = np.linspace(0.0, HARMONY_T_MAX, max(ctx.spec.n_samples, 2))
    rows, nus, betas = [], [], []
    for nu0 in HARMONY_NU0:
        for beta in HARMONY_BETAS:
            rows.append(phase_harmony_check(nu0, beta, t))
            nus.append(nu0)
            betas.append(beta)
    rel = np.asarray(rows)
    return [
        make_verdict(
            "phase-harmony", rel, rel, ctx.tolerance,
            {"nu0": np.asarray(nus), "beta": np.asarray(betas)},
            note=f"inner phase vs wave phase at x = beta t, t in [0, {HARMONY_T_MAX:g}]",
            details={"t_samples": int(t.size)},
        )
    ]


def _suite_identities(ctx: _Ctx) -> list[TheoremVerdict]:
    spec, n = ctx.spec, ctx.spec.n_samples
    rng = ctx.rng("kinematic-identities")
    omega0 = _uniform(rng, spec.omega0_range, n)
    vel = sample_velocities(rng, spec, n)
    # keep k != 0 so phase velocity exists
    vel[np.linalg.norm(vel, axis=1) == 0.0] = [spec.beta_max / 2 or 0.5, 0.0, 0.0]
    speed = np.linalg.norm(vel, axis=1)
    g = 1.0 / np.sqrt((1.0 - speed) * (1.0 + speed))
    omega = g * omega0
    k = (g * omega0)[:, None] * vel
    kmag = np.linalg.norm(k, axis=1)
    vp = omega / kmag
    vg = kmag / omega
    abs_1, rel_1 = np.abs(vp * vg - 1.0), np.abs(vp * vg - 1.0)
    v_rest = k / omega[:, None]
    abs_2 = np.abs(v_rest - vel).max(axis=1)
    # direction-wise c^2 / v_p must reproduce |v|
    abs_3 = np.abs(1.0 / vp - speed)
    rel = np.maximum.reduce([rel_1, abs_2, abs_3])
    return [
        make_verdict(
            "kinematic-identities", np.maximum.reduce([abs_1, abs_2, abs_3]), rel, ctx.tolerance,
            {"omega0": omega0, "velocity": vel},
            note="v_p * v_g = 1 and rest-wave velocity k/omega = c^2/v_p recovers the generating velocity",
        )
    ]


SUITES: dict[str, Callable[[_Ctx], list[TheoremVerdict]]] = {
    "theorem-a": _suite_theorem_a,
    "theorem-b": _suite_theorem_b,
    "lemma": _suite_lemma,
    "ashby-miller": _suite_ashby_miller,
    "einstein": _suite_einstein,
    "proportionality": _suite_proportionality,
    "shells": _suite_shells,
    "harmony": _suite_harmony,
    "identities": _suite_identities,
}

SUITE_GROUPS = {"all": tuple(SUITES)} | {name: (name,) for name in SUITES}


def run_suite(name: str, ctx: _Ctx) -> list[TheoremVerdict]:
    try:
        return SUITES[name](ctx)
    except Exception as exc:  # a broken suite must not abort the report
        return [
            TheoremVerdict(
                name, 0, 0.0, float(np.finfo(float).max), ctx.tolerance, False,
                witness={"error": type(exc).__name__}, note=f"verifier error: {exc}",
            )
        ]


def run_all(
    spec: SamplingSpec,
    C: float | None = None,
    tolerance: float = DEFAULT_TOLERANCE,
    *,
    suites: str | tuple[str, ...] = "all",
    perturb: float = 0.0,
    exponent: float = 1.0,
) -> VerificationReport:
    """Run the selected suites and collect their verdicts.

    ``C=None`` samples the proportionality constant log-uniformly from
    ``spec.c_range``; a number fixes it.  ``perturb`` and ``exponent`` turn
    the pair-based suites into negative controls.
    """
    names = SUITE_GROUPS[suites] if isinstance(suites, str) else tuple(suites)
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise ValueError(f"unknown suites: {unknown}")
    ctx = _Ctx(spec, C, float(tolerance), float(perturb), float(exponent))
    config = {
        "sampling": spec.to_dict(),
        "C": C,
        "tolerance": float(tolerance),
        "suites": list(names),
        "perturb": float(perturb),
        "exponent": float(exponent),
    }
    report = VerificationReport(__version__, config)
    start = time.perf_counter()
    for name in names:
        report.verdicts.extend(run_suite(name, ctx))
    report.wall_time = time.perf_counter() - start
    return report


# --- serialisation ----------------------------------------------------------


def _render(obj: Any, indent: int, level: int, digits: int) -> str:
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if not math.isfinite(x):
            # JSON has no inf/nan
            return json.dumps(None if math.isnan(x) else ("inf" if x > 0 else "-inf"))
        text = f"{x:.{digits}g}"
        if "e" not in text and "." not in text:
            text += ".0"
        return text
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_render(v, indent, level + 1, digits)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        seq = list(obj)
        if not seq:
            return "[]"
        if all(not isinstance(v, (dict, list, tuple, np.ndarray)) for v in seq):
            return "[" + ", ".join(_render(v, indent, level + 1, digits) for v in seq) + "]"
        items = [pad + _render(v, indent, level + 1, digits) for v in seq]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def render_json(obj: Any, digits: int = 17, indent: int = 2) -> str:
    """JSON with every float written to ``digits`` significant digits."""
    return _render(obj, indent, 0, digits) + "\n"


def numeric_fields(report: dict[str, Any]) -> dict[str, Any]:
    """The report minus wall-clock timing, for determinism comparisons."""
    return {k: v for k, v in report.items() if k != "wall_time"}
