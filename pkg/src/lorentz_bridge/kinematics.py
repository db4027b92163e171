"""Particle and plane-wave states and the quantities derived from them.

Natural units throughout (c = 1): energies, momenta, angular frequencies
and wave numbers all share one unit, and velocities are fractions of c.
The proportionality constant between particle and wave four-vectors is the
free parameter ``C`` (it plays the role of hbar; ``h = 2*pi*C``).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

import numpy as np

from .minkowski import Boost, FourVector, boost

__all__ = [
    "DEFAULT_ZERO_TOL",
    "ParticleState",
    "WaveState",
    "CaseClass",
    "four_momentum",
    "massless_four_momentum",
    "wave_four_vector",
    "de_broglie_wavelength",
    "doppler_factor",
    "phase_velocity",
    "group_velocity",
    "rest_wave_velocity",
    "rest_frequency",
    "frequency_transform",
    "phase_harmony_check",
    "classify_case",
    "derive_invariant_C",
    "lorentz_gamma",
]

DEFAULT_ZERO_TOL = 1e-15

# |v| = 1 check for massless states and |k| <= omega slack for waves built
# from boosted light-like vectors
_LIGHTLIKE_SLACK = 1e-12
# negative radicands above -_RADICAND_CLAMP * omega**2 are treated as roundoff
_RADICAND_CLAMP = 1e-12


def _vec3(values: Sequence[float], name: str) -> tuple[float, float, float]:
    vals = tuple(float(v) for v in values)
    if len(vals) != 3:
        raise ValueError(f"{name} must be a 3-vector")
    if not all(math.isfinite(v) for v in vals):
        raise ValueError(f"{name} must be finite")
    return vals


def lorentz_gamma(beta: float) -> float:
    """``1 / sqrt(1 - beta**2)``, factored to keep precision near |beta| -> 1."""
    beta = abs(float(beta))
    if not beta < 1.0:
        raise ValueError(f"|beta| = {beta!r} must be < 1")
    return 1.0 / math.sqrt((1.0 - beta) * (1.0 + beta))


@dataclass(frozen=True)
class ParticleState:
    """A free particle: rest mass ``m0`` and 3-velocity (fraction of c).

    Massive states need ``|v| < 1``.  Massless states (``m0 == 0``) need
    ``|v| == 1`` and carry their energy separately; see
    :func:`massless_four_momentum`.
    """

    m0: float
    velocity: tuple[float, float, float] = (0.0, 0.0, 0.0)

    def __post_init__(self):
        m0 = float(self.m0)
        if not (math.isfinite(m0) and m0 >= 0.0):
            raise ValueError(f"rest mass must be finite and >= 0, got {self.m0!r}")
        v = _vec3(self.velocity, "velocity")
        speed = math.hypot(*v)
        if m0 > 0.0 and not speed < 1.0:
            raise ValueError(f"a massive particle needs |v| < 1, got {speed!r}")
        if m0 == 0.0 and abs(speed - 1.0) > _LIGHTLIKE_SLACK:
            raise ValueError(f"a massless particle needs |v| = 1, got {speed!r}")
        object.__setattr__(self, "m0", m0)
        object.__setattr__(self, "velocity", v)

    @property
    def speed(self) -> float:
        return math.hypot(*self.velocity)

    @property
    def gamma(self) -> float:
        return lorentz_gamma(self.speed)


@dataclass(frozen=True)
class WaveState:
    """Monochromatic plane wave: angular frequency, wave vector, amplitude.

    ``amplitude`` is carried along untouched; no formula reads it.  The
    default constructor enforces ``|k| <= omega`` (phase velocity >= c).
    Use :meth:`permissive` to build non-physical states for counterexample
    experiments; those have ``physical = False``.
    """

    omega: float
    k: tuple[float, float, float] = (0.0, 0.0, 0.0)
    amplitude: Any = None
    physical: bool = field(default=True, compare=False)

    def __post_init__(self):
        omega = float(self.omega)
        if not (math.isfinite(omega) and omega > 0.0):
            raise ValueError(f"omega must be finite and > 0, got {self.omega!r}")
        k = _vec3(self.k, "k")
        object.__setattr__(self, "omega", omega)
        object.__setattr__(self, "k", k)
        if self.physical and math.hypot(*k) > omega * (1.0 + _LIGHTLIKE_SLACK):
            raise ValueError(
                f"|k| = {math.hypot(*k)!r} exceeds omega = {omega!r}: "
                "a matter wave needs phase velocity v_p >= c"
            )

    @classmethod
    def permissive(cls, omega: float, k: Sequence[float], amplitude: Any = None) -> "WaveState":
        """Skip the ``v_p >= c`` check.  The result is flagged non-physical."""
        k = _vec3(k, "k")
        physical = math.hypot(*k) <= float(omega) * (1.0 + _LIGHTLIKE_SLACK)
        return cls(omega, k, amplitude, physical=physical)

    @classmethod
    def from_four_vector(cls, v: FourVector, amplitude: Any = None) -> "WaveState":
        return cls(v.t, v.spatial, amplitude)

    @property
    def k_mag(self) -> float:
        return math.hypot(*self.k)

    @property
    def wavelength(self) -> float:
        """``2*pi/|k|``; infinite for a stationary wave."""
        kk = self.k_mag
        return math.inf if kk == 0.0 else 2.0 * math.pi / kk

    @property
    def frequency(self) -> float:
        return self.omega / (2.0 * math.pi)

    def four_vector(self) -> FourVector:
        return wave_four_vector(self)

    def boosted(self, b: Boost) -> "WaveState":
        return WaveState.from_four_vector(boost(self.four_vector(), b), self.amplitude)


class CaseClass(enum.Enum):
    """The four corners of (rest mass, rest-wave frequency) space."""

    CASE1 = 1  # m0 > 0, omega0 > 0
    CASE2 = 2  # m0 > 0, omega0 = 0
    CASE3 = 3  # m0 = 0, omega0 > 0
    CASE4 = 4  # m0 = 0, omega0 = 0

    @property
    def valid(self) -> bool:
        return self in (CaseClass.CASE1, CaseClass.CASE4)

    @property
    def reason(self) -> str:
        return _CASE_REASONS[self]


_CASE_REASONS = {
    CaseClass.CASE1: "massive particle with a wave of nonzero rest frequency; E/omega is a finite invariant",
    CaseClass.CASE2: (
        "omega0 = 0 with m0 > 0: for finite gamma the boosted wave keeps omega = k = 0 in every frame, "
        "so no wave exists; gamma -> infinity needs v = c, which forces m0 = 0"
    ),
    CaseClass.CASE3: (
        "m0 = 0 with omega0 > 0: for finite gamma the particle energy is 0 in every frame; "
        "gamma -> infinity needs v = c, and finite k then forces omega0 = 0"
    ),
    CaseClass.CASE4: "massless particle with a light-like wave; E and omega share the Doppler factor",
}


def four_momentum(p: ParticleState) -> FourVector:
    """``(gamma m0, gamma m0 v)`` for a massive particle."""
    if p.m0 == 0.0:
        raise ValueError("massless particle: use massless_four_momentum(E, direction)")
    g = p.gamma
    e = g * p.m0
    return FourVector(e, *(e * v for v in p.velocity))


def massless_four_momentum(E: float, direction: Sequence[float]) -> FourVector:
    """``(E, E * n)`` with ``n`` normalised; light-like by construction."""
    E = float(E)
    if not (math.isfinite(E) and E > 0.0):
        raise ValueError(f"photon energy must be > 0, got {E!r}")
    n = _vec3(direction, "direction")
    norm = math.hypot(*n)
    if norm == 0.0:
        raise ValueError("direction must be nonzero")
    return FourVector(E, *(E * c / norm for c in n))


def wave_four_vector(w: WaveState) -> FourVector:
    return FourVector(w.omega, *w.k)


def de_broglie_wavelength(p_mag: float, C: float = 1.0) -> float:
    """``lambda = 2*pi*C / |p|``."""
    if not p_mag > 0.0:
        raise ValueError(f"wavelength undefined for |p| = {p_mag!r}")
    if not C > 0.0:
        raise ValueError(f"C must be > 0, got {C!r}")
    return 2.0 * math.pi * C / p_mag


def doppler_factor(beta: float) -> float:
    """``sqrt((1 - beta)/(1 + beta))`` for a collinear light-like state."""
    beta = float(beta)
    if not abs(beta) < 1.0:
        raise ValueError(f"|beta| = {abs(beta)!r} must be < 1")
    return math.sqrt((1.0 - beta) / (1.0 + beta))


def phase_velocity(w: WaveState) -> float:
    kk = w.k_mag
    if kk == 0.0:
        raise ValueError("phase velocity undefined for k = 0 (stationary wave)")
    return w.omega / kk


def group_velocity(w: WaveState) -> float:
    """``d omega / dk = |k| / omega`` on the shell omega**2 = omega0**2 + k**2."""
    return w.k_mag / w.omega


def rest_frequency(w: WaveState) -> float:
    """Invariant ``omega0 = sqrt(omega**2 - |k|**2)``.

    Negative radicands within roundoff (``> -1e-12 omega**2``) clamp to 0;
    anything lower is a corrupted state.
    """
    kk = w.k_mag
    radicand = (w.omega - kk) * (w.omega + kk)
    if radicand < 0.0:
        if radicand >= -_RADICAND_CLAMP * w.omega**2:
            return 0.0
        raise ValueError(f"omega**2 - |k|**2 = {radicand!r} < 0: state is not a physical wave")
    return math.sqrt(radicand)


def rest_wave_velocity(w: WaveState, zero_tol: float = DEFAULT_ZERO_TOL) -> tuple[float, float, float]:
    """Velocity of the frame in which the wave is stationary (k' = 0).

    Equal to ``k / omega``, i.e. ``c**2 / v_p`` along the wave vector.
    """
    if rest_frequency(w) <= zero_tol * max(1.0, w.omega):
        raise ValueError("a light-like wave (omega0 = 0) has no rest frame")
    return tuple(kc / w.omega for kc in w.k)


def frequency_transform(nu0: float, beta: float) -> tuple[float, float]:
    """Return (time-dilated inner frequency, wave frequency) seen at speed beta."""
    g = lorentz_gamma(beta)
    return nu0 / g, nu0 * g


def phase_harmony_check(nu0: float, beta: float, t_samples: Iterable[float]) -> float:
    """Largest phase mismatch between the inner clock and the pilot wave.

    At the particle position ``x = beta t`` the inner phase
    ``2 pi nu_inner t`` is compared with the wave phase
    ``2 pi nu_wave (t - x / v_p)``, ``v_p = 1/beta``.  The mismatch is
    measured in radians relative to ``max(1, |phase|)``; phases reach
    1e4 rad over the sampled range, where an absolute 1e-12 is below one ulp.
    """
    beta = float(beta)
    if beta == 0.0:
        raise ValueError("beta = 0 gives an infinite phase velocity")
    nu_inner, nu_wave = frequency_transform(nu0, beta)
    t = np.asarray(list(t_samples), dtype=float)
    if t.size == 0:
        return 0.0
    x = beta * t
    v_p = 1.0 / beta
    inner = 2.0 * math.pi * nu_inner * t
    wave = 2.0 * math.pi * nu_wave * (t - x / v_p)
    scale = np.maximum(1.0, np.maximum(np.abs(inner), np.abs(wave)))
    return float(np.max(np.abs(inner - wave) / scale))


def classify_case(m0: float, omega0: float, zero_tol: float = DEFAULT_ZERO_TOL) -> CaseClass:
    if m0 < 0.0 or omega0 < 0.0:
        raise ValueError("m0 and omega0 must be >= 0")
    massive = m0 > zero_tol
    oscillating = omega0 > zero_tol
    if massive and oscillating:
        return CaseClass.CASE1
    if massive:
        return CaseClass.CASE2
    if oscillating:
        return CaseClass.CASE3
    return CaseClass.CASE4


def derive_invariant_C(m0: float, omega0: float) -> float:
    """``C = m0 / omega0`` (``m0 c**2 / omega0`` with c = 1)."""
    if not omega0 > 0.0:
        raise ValueError("omega0 = 0 leaves C undefined (massive particle without a rest wave)")
    if not m0 > 0.0:
        raise ValueError("m0 must be > 0 for the massive-case invariant")
    return m0 / omega0
