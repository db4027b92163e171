"""Relativistic particle/wave kinematics and proportionality verifiers."""

__version__ = "0.1.0"

from .kinematics import (  # noqa: E402
    CaseClass,
    ParticleState,
    WaveState,
    classify_case,
    de_broglie_wavelength,
    derive_invariant_C,
    doppler_factor,
    four_momentum,
    frequency_transform,
    group_velocity,
    massless_four_momentum,
    phase_harmony_check,
    phase_velocity,
    rest_frequency,
    rest_wave_velocity,
)
from .minkowski import Boost, FourVector, boost, boost_axis, boost_x, compose_rapidity, minkowski_norm_sq  # noqa: E402
