"""Numerical verifiers for the particle/wave proportionality results.

Each verifier takes sample arrays (boost speeds, axes, masses, ...), runs the
construction the corresponding argument prescribes, and condenses the
outcome into a :class:`TheoremVerdict`.  Arrays are broadcast against the
boost samples, so a scalar ``m0`` applies to every row.

Residuals are relative with a floor of 1 unless stated otherwise:
``|lhs - rhs| / max(1, |lhs|, |rhs|)``.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Any, Sequence

import numpy as np

from .kinematics import DEFAULT_ZERO_TOL, CaseClass, classify_case
from .minkowski import boost_array

__all__ = [
    "DEFAULT_TOLERANCE",
    "TheoremVerdict",
    "relative_residual",
    "make_verdict",
    "verify_theorem_a",
    "verify_proportionality",
    "verify_einstein_energy",
    "ashby_miller_residual",
    "verify_ashby_miller",
    "verify_direction_lemma",
    "verify_theorem_b",
    "ASHBY_MILLER_EXPONENTS",
    "ASHBY_MILLER_BETAS",
]

DEFAULT_TOLERANCE = 1e-12
ASHBY_MILLER_EXPONENTS = (0.5, 1.0, 1.5, 2.0)
ASHBY_MILLER_BETAS = (-0.9, -0.6, -0.3, 0.3, 0.6, 0.9)
# an excluded exponent must miss frame invariance by at least this much
EXCLUSION_THRESHOLD = 1e-2


@dataclass
class TheoremVerdict:
    suite_name: str
    samples: int
    max_abs_residual: float
    max_rel_residual: float
    tolerance: float
    passed: bool
    witness: dict[str, Any] | None = None
    note: str = ""
    details: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        d["pass"] = d.pop("passed")
        return d


def relative_residual(lhs, rhs) -> tuple[np.ndarray, np.ndarray]:
    """Absolute and floor-1 relative differences, elementwise."""
    lhs = np.asarray(lhs, dtype=float)
    rhs = np.asarray(rhs, dtype=float)
    diff = np.abs(lhs - rhs)
    scale = np.maximum(1.0, np.maximum(np.abs(lhs), np.abs(rhs)))
    return diff, diff / scale


def _clean(x: np.ndarray) -> np.ndarray:
    # NaN must count as a failure, not vanish inside max()
    return np.where(np.isnan(x), np.inf, x)


def _finite_or_max(x: float) -> float:
    return x if math.isfinite(x) else float(np.finfo(float).max)


def make_verdict(
    name: str,
    abs_res: np.ndarray,
    rel_res: np.ndarray,
    tolerance: float,
    inputs: dict[str, np.ndarray],
    note: str = "",
    details: dict[str, Any] | None = None,
) -> TheoremVerdict:
    """Condense per-sample residuals into a verdict; the witness is the worst row."""
    abs_res = _clean(np.atleast_1d(np.asarray(abs_res, dtype=float)))
    rel_res = _clean(np.atleast_1d(np.asarray(rel_res, dtype=float)))
    n = int(rel_res.size)
    if n == 0:
        max_abs = max_rel = 0.0
        worst = None
    else:
        worst = int(np.argmax(rel_res))
        max_abs = _finite_or_max(float(np.max(abs_res)))
        max_rel = _finite_or_max(float(rel_res[worst]))
    passed = bool(max_rel <= tolerance)
    witness = None
    if not passed and worst is not None:
        witness = {}
        for key, arr in inputs.items():
            a = np.broadcast_to(np.asarray(arr), (n,) + np.shape(arr)[1:]) if np.ndim(arr) else arr
            val = a[worst] if np.ndim(arr) else a
            witness[key] = np.asarray(val).tolist()
        witness["rel_residual"] = max_rel
    return TheoremVerdict(name, n, max_abs, max_rel, float(tolerance), passed, witness, note, details or {})


def _prep(betas, axes) -> tuple[np.ndarray, np.ndarray]:
    betas = np.atleast_1d(np.asarray(betas, dtype=float))
    if betas.ndim != 1:
        raise ValueError("boost samples must be one-dimensional")
    if np.any(~(np.abs(betas) < 1.0)):
        raise ValueError("boost samples must satisfy |beta| < 1")
    axes = np.broadcast_to(np.asarray(axes, dtype=int), betas.shape).copy()
    if np.any((axes < 0) | (axes > 2)):
        raise ValueError("axes must be 0, 1 or 2")
    return betas, axes


def _col(x, n: int) -> np.ndarray:
    return np.broadcast_to(np.asarray(x, dtype=float), (n,)).astype(float)


def _unit_along(axes: np.ndarray) -> np.ndarray:
    d = np.zeros((axes.size, 3))
    d[np.arange(axes.size), axes] = 1.0
    return d


def _rest_vectors(scale: np.ndarray) -> np.ndarray:
    v = np.zeros((scale.size, 4))
    v[:, 0] = scale
    return v


def _component_residuals(p: np.ndarray, ck: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    abs_r, rel_r = relative_residual(p, ck)
    return abs_r.max(axis=1), rel_r.max(axis=1)


# --- proportionality from the energy relation -------------------------------


def verify_theorem_a(
    m0,
    C,
    betas,
    axes=0,
    *,
    start_velocity=None,
    photon_energy=1.0,
    photon_direction=None,
    tolerance: float = DEFAULT_TOLERANCE,
    perturb: float = 0.0,
    suite_name: str = "theorem-a",
) -> TheoremVerdict:
    """E = C omega in every frame forces p = C k.

    Builds a particle/wave pair with ``k = p / C`` in the start frame, boosts
    both along the sampled axes, and checks three things per sample: the
    energy relation survives (E' = C omega'), every spatial component obeys
    p' = C k', and the subtraction step
    ``gamma (E - C omega) - (E' - C omega') = gamma beta (p_s - C k_s)``
    vanishes.  ``m0 == 0`` rows use a photon with ``photon_energy`` moving
    along ``photon_direction`` (default: the boost axis).

    ``perturb`` shifts the start-frame momentum along the boost axis while
    keeping E = C omega, i.e. a pair that violates p = C k.
    """
    betas, axes = _prep(betas, axes)
    n = betas.size
    m0 = _col(m0, n)
    C = _col(C, n)
    if np.any(m0 < 0) or np.any(~(C > 0)):
        raise ValueError("need m0 >= 0 and C > 0")
    if start_velocity is None:
        vel = np.zeros((n, 3))
    else:
        vel = np.broadcast_to(np.asarray(start_velocity, dtype=float), (n, 3))
    if photon_direction is None:
        direction = _unit_along(axes)
    else:
        direction = np.broadcast_to(np.asarray(photon_direction, dtype=float), (n, 3))
        direction = direction / np.linalg.norm(direction, axis=1)[:, None]
    e_photon = _col(photon_energy, n)

    speed = np.linalg.norm(vel, axis=1)
    if np.any(speed >= 1.0):
        raise ValueError("start velocities must satisfy |v| < 1")
    gamma0 = 1.0 / np.sqrt((1.0 - speed) * (1.0 + speed))
    massive = m0 > 0
    energy = np.where(massive, gamma0 * m0, e_photon)
    mom = np.where(massive[:, None], (gamma0 * m0)[:, None] * vel, e_photon[:, None] * direction)
    p = np.column_stack([energy, mom])
    k = p / C[:, None]
    rows = np.arange(n)
    if perturb:
        p[rows, axes + 1] += perturb

    p_b = boost_array(p, betas, axes)
    k_b = boost_array(k, betas, axes)
    ck_b = C[:, None] * k_b
    abs_c, rel_c = _component_residuals(p_b, ck_b)

    # subtraction step; scaled by the size of the terms it cancels, since
    # p_s - C k_s is itself a difference of two rounded values
    g = 1.0 / np.sqrt((1.0 - betas) * (1.0 + betas))
    lhs = g * (p[:, 0] - C * k[:, 0]) - (p_b[:, 0] - ck_b[:, 0])
    rhs = g * betas * (p[rows, axes + 1] - C * k[rows, axes + 1])
    abs_s = np.abs(rhs) + np.abs(lhs - rhs)
    scale = np.maximum(1.0, g * np.maximum(np.abs(p).max(axis=1), np.abs(C[:, None] * k).max(axis=1)))
    rel_s = abs_s / scale

    return make_verdict(
        suite_name,
        np.maximum(abs_c, abs_s),
        np.maximum(rel_c, rel_s),
        tolerance,
        {"m0": m0, "C": C, "beta": betas, "axis": axes, "start_velocity": vel},
        note="E' = C omega' imposed in every boosted frame; residual over all components of p' - C k'",
    )


def verify_proportionality(
    a,
    b,
    C,
    betas,
    axes=0,
    *,
    tolerance: float = DEFAULT_TOLERANCE,
    suite_name: str = "proportionality",
) -> TheoremVerdict:
    """Temporal proportionality of two four-vectors in all frames <=> spatial.

    ``a`` and ``b`` are ``(4,)`` or ``(n, 4)`` arrays with ``a_t = C b_t`` in
    the start frame.  After each boost the temporal relation is re-imposed
    and the spatial one checked (and the converse: spatial relation imposed,
    temporal checked); both residual sets must vanish.
    """
    betas, axes = _prep(betas, axes)
    n = betas.size
    a = np.broadcast_to(np.asarray(a, dtype=float), (n, 4)).copy()
    b = np.broadcast_to(np.asarray(b, dtype=float), (n, 4)).copy()
    C = _col(C, n)
    _, pre = relative_residual(a[:, 0], C * b[:, 0])
    if np.any(pre > tolerance):
        raise ValueError("precondition a_t = C b_t does not hold in the start frame")
    a_b = boost_array(a, betas, axes)
    cb_b = C[:, None] * boost_array(b, betas, axes)
    rows = np.arange(n)
    abs_t, rel_t = relative_residual(a_b[:, 0], cb_b[:, 0])
    abs_x, rel_x = relative_residual(a_b[rows, axes + 1], cb_b[rows, axes + 1])
    abs_all, rel_all = _component_residuals(a_b, cb_b)
    return make_verdict(
        suite_name,
        np.maximum.reduce([abs_t, abs_x, abs_all]),
        np.maximum.reduce([rel_t, rel_x, rel_all]),
        tolerance,
        {"a": a, "b": b, "C": C, "beta": betas, "axis": axes},
        note="temporal => spatial and spatial => temporal proportionality across boosts",
        details={"max_rel_temporal": float(np.max(rel_t, initial=0.0)), "max_rel_spatial": float(np.max(rel_x, initial=0.0))},
    )


def verify_einstein_energy(
    m0,
    velocities,
    *,
    tolerance: float = DEFAULT_TOLERANCE,
    perturb: float = 0.0,
    suite_name: str = "einstein",
) -> TheoremVerdict:
    """``p = m0 u`` with the four-velocity ``u = (gamma, gamma v)`` gives E = gamma m0.

    The four-velocity is built from the rapidity ``atanh|v|`` (cosh, sinh)
    and compared against the energy/momentum computed from
    ``gamma = 1/sqrt(1 - v**2)``.  ``perturb`` offsets the energy on the
    four-velocity side.
    """
    vel = np.atleast_2d(np.asarray(velocities, dtype=float))
    if vel.shape[-1] != 3:
        vel = np.column_stack([vel.reshape(-1), np.zeros((vel.size, 2))])
    n = vel.shape[0]
    m0 = _col(m0, n)
    if np.any(~(m0 > 0)):
        raise ValueError("m0 must be > 0")
    speed = np.linalg.norm(vel, axis=1)
    if np.any(~(speed < 1.0)):
        raise ValueError("velocities must satisfy |v| < 1")

    eta = np.arctanh(speed)
    with np.errstate(invalid="ignore", divide="ignore"):
        unit = np.where(speed[:, None] > 0, vel / speed[:, None], 0.0)
    u = np.column_stack([np.cosh(eta), np.sinh(eta)[:, None] * unit])
    p_from_u = m0[:, None] * u
    p_from_u[:, 0] += perturb

    gamma = 1.0 / np.sqrt((1.0 - speed) * (1.0 + speed))
    energy = gamma * m0
    p_direct = np.column_stack([energy, energy[:, None] * vel])
    abs_r, rel_r = _component_residuals(p_from_u, p_direct)
    return make_verdict(
        suite_name,
        abs_r,
        rel_r,
        tolerance,
        {"m0": m0, "velocity": vel},
        note="E = m0 u_t = gamma m0 (E = m c**2 with m = gamma m0)",
    )


# --- exponent exclusion -----------------------------------------------------


def _light_pair_boost(n_exp: np.ndarray, betas: np.ndarray, C: float = 1.0) -> np.ndarray:
    size = betas.size
    photon = np.tile([C, C, 0.0, 0.0], (size, 1))
    wave = np.tile([1.0, 1.0, 0.0, 0.0], (size, 1))
    e_b = boost_array(photon, betas, 0)[:, 0]
    w_b = boost_array(wave, betas, 0)[:, 0]
    return np.abs(C * w_b ** n_exp / e_b - 1.0)


def ashby_miller_residual(n: float, beta: float) -> float:
    """Frame-invariance violation of a law ``E = C omega**n`` for a light-like pair.

    Starting from omega = 1, E = C, both are boosted along the propagation
    axis (each picks up the Doppler factor D).  Returns
    ``|C omega'**n / E' - 1| = |D**(n-1) - 1|``; zero only for n = 1 or beta = 0.
    """
    beta = float(beta)
    if not abs(beta) < 1.0:
        raise ValueError(f"|beta| = {abs(beta)!r} must be < 1")
    return float(_light_pair_boost(np.asarray(float(n)), np.asarray([beta]))[0])


def verify_ashby_miller(
    betas=(),
    *,
    exponent: float = 1.0,
    exponents: Sequence[float] = ASHBY_MILLER_EXPONENTS,
    grid_betas: Sequence[float] = ASHBY_MILLER_BETAS,
    tolerance: float = DEFAULT_TOLERANCE,
    suite_name: str = "ashby-miller",
) -> TheoremVerdict:
    """Test the candidate law E = C omega**exponent for frame invariance.

    The verdict residual is the candidate's violation over the fixed grid
    plus any sampled ``betas``.  As a side condition every exponent n != 1
    in ``exponents`` must be excluded on the grid (violation >=
    ``EXCLUSION_THRESHOLD`` at each beta != 0); a failed exclusion fails
    the verdict.
    """
    grid = np.asarray(grid_betas, dtype=float)
    sampled, _ = _prep(betas, 0) if np.size(betas) else (np.zeros(0), None)
    all_b = np.concatenate([grid, sampled])
    cand = _light_pair_boost(np.asarray(float(exponent)), all_b)

    table = {}
    excluded = True
    for n_exp in exponents:
        cells = _light_pair_boost(np.asarray(float(n_exp)), grid)
        table[str(float(n_exp))] = cells.tolist()
        if float(n_exp) != 1.0:
            moving = grid != 0.0
            if np.any(cells[moving] < EXCLUSION_THRESHOLD):
                excluded = False
    rel = cand.copy()
    note = f"candidate exponent n = {exponent:g}; only n = 1 is frame invariant"
    if not excluded:
        rel = np.append(rel, 1.0)
        note += "; exclusion of n != 1 FAILED on the grid"
    return make_verdict(
        suite_name,
        np.append(cand, 0.0) if not excluded else cand,
        rel,
        tolerance,
        {"beta": np.append(all_b, np.nan) if not excluded else all_b, "exponent": float(exponent)},
        note=note,
        details={"grid_betas": grid.tolist(), "residual_grid": table, "exclusion_holds": excluded},
    )


# --- direction lemma --------------------------------------------------------


def _sign_mismatch(p_s: np.ndarray, k_s: np.ndarray) -> np.ndarray:
    disagree = np.sign(p_s) != np.sign(k_s)
    zero_mismatch = (p_s == 0.0) != (k_s == 0.0)
    return disagree | zero_mismatch


def verify_direction_lemma(
    omega0,
    velocities,
    axes=0,
    *,
    m0=1.0,
    tolerance: float = DEFAULT_TOLERANCE,
    perturb: float = 0.0,
    suite_name: str = "lemma",
) -> TheoremVerdict:
    """p and k point the same way in every frame iff both vanish together at rest.

    The rest pair (p0 = 0, k0 = 0) is seen from frames in which it moves with
    each sampled velocity (signed, along ``axes``); p_s and k_s must agree in
    sign and vanish together.  The rest frame itself (v = 0) is always
    evaluated.  A counterexample pair with ``k0 != 0`` must violate sign
    agreement for some sampled velocity, otherwise the check is reported
    as inconclusive and the suite fails.  ``perturb`` puts
    ``k0 = perturb * omega0`` into the pair under test (negative control).
    """
    vel, axes = _prep(velocities, axes)
    omega0 = _col(omega0, vel.size)
    m0 = _col(m0, vel.size)
    vel = np.concatenate([[0.0], vel])
    axes = np.concatenate([axes[:1], axes])
    omega0 = np.concatenate([omega0[:1], omega0])
    m0 = np.concatenate([m0[:1], m0])
    if np.any(~(omega0 > 0)) or np.any(~(m0 > 0)):
        raise ValueError("omega0 and m0 must be > 0")
    p_s, k_s = _observe(m0, omega0, perturb * omega0, vel, axes)
    bad = _sign_mismatch(p_s, k_s).astype(float)

    moving = vel != 0.0
    details: dict[str, Any] = {"sign_agreement_fraction": float(1.0 - bad.mean())}
    found = False
    details["counterexample_k0_over_omega0"] = None
    details["counterexample_violations"] = 0
    if np.any(moving):
        # k0/omega0 above every sampled speed: each v < 0 then flips sign(k_s) only
        frac = 0.5 * (1.0 + float(np.max(np.abs(vel))))
        both = np.concatenate([vel[moving], -vel[moving]])
        both_ax = np.concatenate([axes[moving], axes[moving]])
        m_c = np.concatenate([m0[moving], m0[moving]])
        w_c = np.concatenate([omega0[moving], omega0[moving]])
        violations = _sign_mismatch(*_observe(m_c, w_c, frac * w_c, both, both_ax))
        found = bool(np.any(violations))
        details["counterexample_k0_over_omega0"] = frac
        details["counterexample_violations"] = int(np.sum(violations))
    details["counterexample_found"] = found
    rel = bad.copy()
    inputs = {"velocity": vel, "axis": axes, "omega0": omega0, "m0": m0}
    note = "sign(p_s) = sign(k_s) for boosted rest pairs; p0 = 0 <=> k0 = 0"
    if not found:
        rel = np.append(rel, 1.0)
        inputs = {k: np.append(v, np.nan) for k, v in inputs.items()}
        note += "; counterexample pair with k0 != 0 was not refuted by the samples"
    return make_verdict(suite_name, rel, rel, tolerance, inputs, note=note, details=details)


def _observe(m0, omega0, k0_spatial, v, ax):
    """Spatial p and k along ``ax`` seen from frames where the pair moves with ``v``."""
    r = np.arange(v.size)
    p0 = _rest_vectors(m0)
    k0 = _rest_vectors(omega0)
    k0[r, ax + 1] = k0_spatial
    p = boost_array(p0, -v, ax)
    k = boost_array(k0, -v, ax)
    return p[r, ax + 1], k[r, ax + 1]


# --- the four-case analysis -------------------------------------------------


def _ratio_residual(num: np.ndarray, den: np.ndarray, target: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    with np.errstate(invalid="ignore", divide="ignore"):
        ratio = num / den
    diff = np.abs(ratio - target)
    return diff, diff / np.abs(target)


def verify_theorem_b(
    m0,
    omega0,
    betas,
    axes=0,
    *,
    light_energy=1.0,
    light_omega=1.0,
    tolerance: float = DEFAULT_TOLERANCE,
    zero_tol: float = DEFAULT_ZERO_TOL,
    perturb: float = 0.0,
    suite_name: str | None = None,
) -> TheoremVerdict:
    """E = C omega and p = C k for each admissible (m0, omega0) corner.

    All sample rows must fall in the same case (see ``classify_case``).

    Case 1: rest pair boosted; E/omega and p_s/k_s must both equal
    ``C = m0/omega0`` (pure relative error).  Case 4: light-like pair with
    p' = E', k' = omega' (same-sign branch) boosted; the ratios must keep
    their primed value E'/omega'.  Cases 2 and 3 are exclusions: every
    boosted sample is searched for a configuration satisfying the
    postulates (omega > 0 resp. E > 0) and the residual is the fraction
    found, which must be 0.

    ``perturb`` gives the Case 1 rest wave a wave number ``perturb*omega0``
    and offsets the Case 4 particle momentum by ``-perturb``.
    """
    betas, axes = _prep(betas, axes)
    n = betas.size
    m0 = _col(m0, n)
    omega0 = _col(omega0, n)
    cases = {classify_case(float(a), float(b), zero_tol) for a, b in zip(m0, omega0)}
    if len(cases) != 1:
        raise ValueError(f"samples span several cases: {sorted(c.value for c in cases)}")
    case = cases.pop()
    name = suite_name or f"theorem-b-case{case.value}"
    rows = np.arange(n)
    inputs = {"m0": m0, "omega0": omega0, "beta": betas, "axis": axes}
    details = {"case": case.value, "valid": case.valid, "reason": case.reason}

    if case is CaseClass.CASE1:
        C = m0 / omega0
        p = boost_array(_rest_vectors(m0), betas, axes)
        k0 = _rest_vectors(omega0)
        k0[rows, axes + 1] = perturb * omega0
        k = boost_array(k0, betas, axes)
        ps, ks = p[rows, axes + 1], k[rows, axes + 1]
        abs_e, rel_e = _ratio_residual(p[:, 0], k[:, 0], C)
        moving = ks != 0.0
        abs_p, rel_p = _ratio_residual(np.where(moving, ps, C), np.where(moving, ks, 1.0), C)
        zero_ok = ((ps == 0.0) == (ks == 0.0)).astype(float)
        rel = np.maximum.reduce([rel_e, rel_p, 1.0 - zero_ok])
        return make_verdict(
            name, np.maximum(abs_e, abs_p), rel, tolerance, inputs | {"C": C},
            note="E/omega = p_s/k_s = m0/omega0 in every frame", details=details,
        )

    if case is CaseClass.CASE4:
        e1 = _col(light_energy, n)
        w1 = _col(light_omega, n)
        if np.any(~(e1 > 0)) or np.any(~(w1 > 0)):
            raise ValueError("light-like pair needs E' > 0 and omega' > 0")
        C = e1 / w1
        p1 = np.zeros((n, 4))
        k1 = np.zeros((n, 4))
        p1[:, 0] = e1
        p1[rows, axes + 1] = e1 - perturb
        k1[:, 0] = w1
        k1[rows, axes + 1] = w1
        p = boost_array(p1, -betas, axes)
        k = boost_array(k1, -betas, axes)
        abs_e, rel_e = _ratio_residual(p[:, 0], k[:, 0], C)
        abs_p, rel_p = _ratio_residual(p[rows, axes + 1], k[rows, axes + 1], C)
        details["untested_branch"] = "opposite-sign solution p' = -E', k' = omega' (excluded by the direction lemma)"
        return make_verdict(
            name, np.maximum(abs_e, abs_p), np.maximum(rel_e, rel_p), tolerance, inputs | {"C": C},
            note="E/omega and p_s/k_s keep the primed ratio E'/omega' under Doppler boosts", details=details,
        )

    # exclusions: sub-threshold inputs are exactly zero by classification
    m_eff = np.where(m0 > zero_tol, m0, 0.0)
    w_eff = np.where(omega0 > zero_tol, omega0, 0.0)
    p = boost_array(_rest_vectors(m_eff), betas, axes)
    k = boost_array(_rest_vectors(w_eff), betas, axes)
    with np.errstate(invalid="ignore", divide="ignore"):
        ratio = p[:, 0] / k[:, 0]
    wave_exists = k[:, 0] > 0.0
    particle_has_energy = p[:, 0] > 0.0
    satisfying = wave_exists & particle_has_energy & np.isfinite(ratio) & (ratio > 0)
    details["satisfying_samples"] = int(np.sum(satisfying))
    frac = np.full(n, float(np.mean(satisfying)) if n else 0.0)
    return make_verdict(
        name, satisfying.astype(float), frac, tolerance, inputs,
        note=f"excluded: {case.reason}", details=details,
    )
