from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .._typing import FloatArray
from .._validation import as_positive_float

SQRT2 = math.sqrt(2.0)
PROFILE_S = 2.0 * SQRT2 / 3.0
U_JUMP = 2.0


@dataclass(frozen=True)
class ProfileConstants:
    """
    Constants of the planar inner profile U(z) = tanh(z / sqrt(2)).

    ``S`` is the integral of U'(z)^2 over the line and ``U_jump`` the jump
    u+ - u- between the two wells.
    """

    S: float = PROFILE_S
    U_jump: float = U_JUMP

    def sigma_int(self, epsilon: float) -> float:
        """Interfacial energy per unit length, S * epsilon."""
        return self.S * as_positive_float(epsilon, name="epsilon")

    @property
    def gibbs_thomson_coefficient(self) -> float:
        """S / [U]."""
        return self.S / self.U_jump


PROFILE = ProfileConstants()


def tanh_profile(z: FloatArray | float) -> FloatArray | float:
    out = np.tanh(np.asarray(z, dtype=np.float64) / SQRT2)
    return float(out) if out.ndim == 0 else out


def tanh_profile_deriv(z: FloatArray | float) -> FloatArray | float:
    out = 1.0 / (SQRT2 * np.cosh(np.asarray(z, dtype=np.float64) / SQRT2) ** 2)
    return float(out) if out.ndim == 0 else out


def tanh_profile_second(z: FloatArray | float) -> FloatArray | float:
    """U'' = -U (1 - U^2), which equals F'(U) = U^3 - U."""
    u = np.tanh(np.asarray(z, dtype=np.float64) / SQRT2)
    out = -u * (1.0 - u * u)
    return float(out) if out.ndim == 0 else out


def compute_S(half_width: float = 40.0) -> float:
    """
    S = integral of U'(z)^2 over [-L, L] by adaptive quadrature.

    The integrand is even, so the quadrature runs over [0, L] and doubles.
    The tail beyond L = 40 is below 1e-30.
    """
    L = as_positive_float(half_width, name="half_width")
    val, _err = quad(
        lambda z: tanh_profile_deriv(z) ** 2, 0.0, L, epsabs=0.0, epsrel=1e-12, limit=200
    )
    return 2.0 * float(val)


def closed_form_S(half_width: float = math.inf) -> float:
    """Antiderivative form sqrt(2)/2 * (tanh - tanh^3/3) of U'^2, over [-L, L]."""
    th = 1.0 if math.isinf(half_width) else math.tanh(half_width / SQRT2)
    return SQRT2 * (th - th**3 / 3.0)


__all__ = [
    "PROFILE",
    "PROFILE_S",
    "U_JUMP",
    "ProfileConstants",
    "closed_form_S",
    "compute_S",
    "tanh_profile",
    "tanh_profile_deriv",
    "tanh_profile_second",
]
