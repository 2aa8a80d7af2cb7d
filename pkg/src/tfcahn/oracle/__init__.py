from __future__ import annotations

from .classical import classical_ch_step
from .fractional import FracKind, brute_force_caputo, brute_force_rl, frac_power
from .profile import (
    PROFILE,
    PROFILE_S,
    U_JUMP,
    ProfileConstants,
    closed_form_S,
    compute_S,
    tanh_profile,
    tanh_profile_deriv,
    tanh_profile_second,
)

__all__ = [
    "PROFILE",
    "PROFILE_S",
    "U_JUMP",
    "FracKind",
    "ProfileConstants",
    "brute_force_caputo",
    "brute_force_rl",
    "classical_ch_step",
    "closed_form_S",
    "compute_S",
    "frac_power",
    "tanh_profile",
    "tanh_profile_deriv",
    "tanh_profile_second",
]
