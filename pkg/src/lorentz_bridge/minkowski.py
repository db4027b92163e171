"""Four-vectors, the Minkowski inner product and pure Lorentz boosts.

Everything here works in natural units (c = 1) with metric signature
(+, -, -, -).  Boosts are stored by rapidity; beta and gamma are derived
from it, so collinear composition is a plain addition.

Two layers are provided: immutable scalar types (:class:`FourVector`,
:class:`Boost`) for the library API, and array kernels
(:func:`boost_array`, :func:`norm_sq_array`) used by the bulk verifiers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

__all__ = [
    "METRIC_SIGNATURE",
    "AXES",
    "FourVector",
    "Boost",
    "minkowski_norm_sq",
    "minkowski_dot",
    "boost",
    "boost_x",
    "boost_axis",
    "compose_rapidity",
    "axis_index",
    "boost_array",
    "norm_sq_array",
]

METRIC_SIGNATURE = (1, -1, -1, -1)
AXES = ("x", "y", "z")

Axis = Union[str, int]

# relative slack when deciding whether two rapidity vectors are collinear
_COLLINEAR_TOL = 1e-12


def axis_index(axis: Axis) -> int:
    """Map ``'x' | 'y' | 'z'`` (or 0, 1, 2) to a spatial index 0..2."""
    if isinstance(axis, str):
        try:
            return AXES.index(axis.lower())
        except ValueError:
            raise ValueError(f"unknown axis {axis!r}; expected one of x, y, z") from None
    idx = int(axis)
    if idx not in (0, 1, 2):
        raise ValueError(f"axis index must be 0, 1 or 2, got {axis!r}")
    return idx


@dataclass(frozen=True)
class FourVector:
    """A contravariant four-vector ``(t, x, y, z)``.

    ``t`` is the time-like component (E/c for a four-momentum, omega/c for a
    wave four-vector).  Components must be finite.
    """

    t: float
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def __post_init__(self):
        for name in ("t", "x", "y", "z"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"FourVector component {name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)

    @classmethod
    def from_sequence(cls, values: Sequence[float]) -> "FourVector":
        if len(values) != 4:
            raise ValueError(f"a four-vector needs 4 components, got {len(values)}")
        return cls(*values)

    @property
    def spatial(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)

    def component(self, axis: Axis) -> float:
        return self.spatial[axis_index(axis)]

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.t, self.x, self.y, self.z)

    def as_array(self) -> np.ndarray:
        return np.array(self.as_tuple(), dtype=float)

    def norm_sq(self) -> float:
        return minkowski_norm_sq(self)

    def __add__(self, other: "FourVector") -> "FourVector":
        return FourVector(*(a + b for a, b in zip(self.as_tuple(), other.as_tuple())))

    def __sub__(self, other: "FourVector") -> "FourVector":
        return FourVector(*(a - b for a, b in zip(self.as_tuple(), other.as_tuple())))

    def __mul__(self, scalar: float) -> "FourVector":
        return FourVector(*(scalar * a for a in self.as_tuple()))

    __rmul__ = __mul__

    def __neg__(self) -> "FourVector":
        return self * -1.0


def minkowski_dot(a: FourVector, b: FourVector) -> float:
    return a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z


def minkowski_norm_sq(v: FourVector) -> float:
    """Invariant square ``t**2 - x**2 - y**2 - z**2``."""
    return minkowski_dot(v, v)


@dataclass(frozen=True)
class Boost:
    """Pure Lorentz boost parametrised by a rapidity 3-vector.

    The direction of ``rapidity`` is the direction of the frame velocity and
    its length is ``atanh(|beta|)``.
    """

    rapidity: tuple[float, float, float] = (0.0, 0.0, 0.0)

    def __post_init__(self):
        phi = tuple(float(r) for r in self.rapidity)
        if len(phi) != 3:
            raise ValueError("rapidity must be a 3-vector")
        if not all(math.isfinite(r) for r in phi):
            raise ValueError("rapidity must be finite (|beta| < 1)")
        object.__setattr__(self, "rapidity", phi)

    @classmethod
    def from_beta(cls, beta: float, axis: Axis = "x") -> "Boost":
        """Axis-aligned boost with signed speed ``beta`` along ``axis``."""
        beta = float(beta)
        if not abs(beta) < 1.0:
            raise ValueError(f"unphysical frame velocity: |beta| = {abs(beta)!r} must be < 1")
        phi = [0.0, 0.0, 0.0]
        phi[axis_index(axis)] = math.atanh(beta)
        return cls(tuple(phi))

    @classmethod
    def from_velocity(cls, beta_vec: Sequence[float]) -> "Boost":
        """Boost along an arbitrary direction given the 3-velocity of the frame."""
        bx, by, bz = (float(b) for b in beta_vec)
        speed = math.hypot(bx, by, bz)
        if not speed < 1.0:
            raise ValueError(f"unphysical frame velocity: |beta| = {speed!r} must be < 1")
        if speed == 0.0:
            return cls()
        scale = math.atanh(speed) / speed
        return cls((bx * scale, by * scale, bz * scale))

    @classmethod
    def from_rapidity(cls, phi: float, axis: Axis = "x") -> "Boost":
        r = [0.0, 0.0, 0.0]
        r[axis_index(axis)] = float(phi)
        return cls(tuple(r))

    @property
    def rapidity_magnitude(self) -> float:
        return math.hypot(*self.rapidity)

    def direction(self) -> tuple[float, float, float]:
        mag = self.rapidity_magnitude
        if mag == 0.0:
            return (0.0, 0.0, 0.0)
        return tuple(r / mag for r in self.rapidity)

    def beta(self) -> tuple[float, float, float]:
        speed = math.tanh(self.rapidity_magnitude)
        return tuple(speed * n for n in self.direction())

    def speed(self) -> float:
        return math.tanh(self.rapidity_magnitude)

    def gamma(self) -> float:
        return math.cosh(self.rapidity_magnitude)

    def axis(self) -> int | None:
        """Index of the single axis carrying the rapidity, or None."""
        nonzero = [i for i, r in enumerate(self.rapidity) if r != 0.0]
        if not nonzero:
            return None
        if len(nonzero) == 1:
            return nonzero[0]
        return None

    def inverse(self) -> "Boost":
        return Boost(tuple(-r for r in self.rapidity))


def _boost_along(v: FourVector, idx: int, phi: float) -> FourVector:
    g = math.cosh(phi)
    gb = math.sinh(phi)
    comps = list(v.spatial)
    s = comps[idx]
    t_new = g * v.t - gb * s
    comps[idx] = g * s - gb * v.t
    return FourVector(t_new, *comps)


def boost_axis(v: FourVector, axis: Axis, b: Boost | float) -> FourVector:
    """Boost ``v`` into a frame moving along ``axis``.

    ``b`` is either a :class:`Boost` whose rapidity lies on ``axis`` or a
    plain signed beta.  Components orthogonal to the axis are returned
    untouched.
    """
    idx = axis_index(axis)
    if not isinstance(b, Boost):
        b = Boost.from_beta(b, idx)
    for i, r in enumerate(b.rapidity):
        if i != idx and r != 0.0:
            raise ValueError(f"boost has a component off the {AXES[idx]} axis")
    return _boost_along(v, idx, b.rapidity[idx])


def boost_x(v: FourVector, b: Boost | float) -> FourVector:
    """``(g(t - beta x), g(x - beta t), y, z)``."""
    return boost_axis(v, 0, b)


def boost(v: FourVector, b: Boost) -> FourVector:
    """General pure boost (no rotation) along the direction of ``b``."""
    idx = b.axis()
    if idx is not None:
        return _boost_along(v, idx, b.rapidity[idx])
    phi = b.rapidity_magnitude
    if phi == 0.0:
        return v
    n = b.direction()
    g = math.cosh(phi)
    gb = math.sinh(phi)
    s_par = n[0] * v.x + n[1] * v.y + n[2] * v.z
    t_new = g * v.t - gb * s_par
    shift = (g - 1.0) * s_par - gb * v.t
    return FourVector(t_new, v.x + shift * n[0], v.y + shift * n[1], v.z + shift * n[2])


def compose_rapidity(b1: Boost, b2: Boost) -> Boost:
    """Compose two collinear boosts by adding rapidities.

    Non-collinear pairs would need a Wigner rotation and are rejected.
    """
    r1, r2 = np.asarray(b1.rapidity), np.asarray(b2.rapidity)
    cross = np.cross(r1, r2)
    scale = max(float(np.linalg.norm(r1) * np.linalg.norm(r2)), 1e-300)
    if float(np.linalg.norm(cross)) > _COLLINEAR_TOL * scale:
        raise ValueError("only collinear boosts can be composed by rapidity addition")
    return Boost(tuple(float(a + b) for a, b in zip(b1.rapidity, b2.rapidity)))


# --- array kernels ---------------------------------------------------------


def norm_sq_array(v: np.ndarray) -> np.ndarray:
    """Minkowski square of each row of an ``(n, 4)`` array."""
    v = np.asarray(v, dtype=float)
    return v[..., 0] ** 2 - v[..., 1] ** 2 - v[..., 2] ** 2 - v[..., 3] ** 2


def boost_array(v: np.ndarray, beta: np.ndarray, axes: np.ndarray | int = 0) -> np.ndarray:
    """Row-wise axis-aligned boost of an ``(n, 4)`` array.

    ``beta`` holds signed speeds (shape ``(n,)`` or scalar) and ``axes`` the
    spatial index (0, 1, 2) for each row.  Uses the same cosh/sinh of the
    rapidity as the scalar path.
    """
    v = np.array(v, dtype=float, copy=True)
    if v.ndim == 1:
        v = v[None, :]
    n = v.shape[0]
    beta = np.broadcast_to(np.asarray(beta, dtype=float), (n,))
    if np.any(~(np.abs(beta) < 1.0)):
        raise ValueError("unphysical frame velocity: all |beta| must be < 1")
    axes = np.broadcast_to(np.asarray(axes, dtype=int), (n,))
    if np.any((axes < 0) | (axes > 2)):
        raise ValueError("axis indices must be 0, 1 or 2")
    phi = np.arctanh(beta)
    g = np.cosh(phi)
    gb = np.sinh(phi)
    rows = np.arange(n)
    cols = axes + 1
    t = v[:, 0].copy()
    s = v[rows, cols].copy()
    v[:, 0] = g * t - gb * s
    v[rows, cols] = g * s - gb * t
    return v
