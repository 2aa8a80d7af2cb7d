from __future__ import annotations

from collections.abc import Callable
from enum import Enum

from scipy.integrate import quad
from scipy.special import gamma as gamma_fn
from scipy.special import rgamma

from .._validation import as_count, as_fraction_order, as_nonnegative_float, as_positive_float

ScalarFn = Callable[[float], float]

_FD_STEP = 1e-3


class FracKind(str, Enum):
    CAPUTO_DERIV = "caputo"
    RL_INTEGRAL = "rl"


def frac_power(kind: FracKind | str, order: float, beta: float, t: float) -> float:
    """
    Closed-form fractional calculus of t^beta.

    CAPUTO_DERIV: Gamma(beta+1) / Gamma(beta+1-alpha) * t^(beta-alpha), beta >= 1.
    RL_INTEGRAL: Gamma(beta+1) / Gamma(beta+1+gamma) * t^(beta+gamma), beta >= 0.
    """
    kind = FracKind(kind)
    order = as_fraction_order(order, name="order")
    t = as_positive_float(t, name="t")
    if kind is FracKind.CAPUTO_DERIV:
        beta = float(beta)
        if beta < 1.0:
            raise ValueError(f"beta must be >= 1 for the Caputo derivative; got {beta!r}.")
        return float(gamma_fn(beta + 1.0) * rgamma(beta + 1.0 - order) * t ** (beta - order))
    beta = as_nonnegative_float(beta, name="beta")
    return float(gamma_fn(beta + 1.0) / gamma_fn(beta + 1.0 + order) * t ** (beta + order))


def _derivative(v: ScalarFn, x: float, h: float) -> float:
    # Richardson-extrapolated differences; forward stencil near t = 0.
    if x >= h:
        def d(hh: float) -> float:
            return (v(x + hh) - v(x - hh)) / (2.0 * hh)
    else:
        def d(hh: float) -> float:
            return (-3.0 * v(x) + 4.0 * v(x + hh) - v(x + 2.0 * hh)) / (2.0 * hh)
    return (4.0 * d(0.5 * h) - d(h)) / 3.0


def brute_force_caputo(
    alpha: float,
    v: ScalarFn,
    t: float,
    n_quad: int = 1000,
    *,
    dv: ScalarFn | None = None,
) -> float:
    """
    Caputo derivative (1/Gamma(1-alpha)) int_0^t v'(s) (t-s)^(-alpha) ds.

    The endpoint singularity is handled by QUADPACK's algebraic weight
    (``weight="alg"``); ``n_quad`` is the subdivision limit. ``dv`` is the
    exact derivative when known, otherwise v' is differenced numerically.
    alpha = 1 returns v'(t).
    """
    alpha = as_fraction_order(alpha, name="alpha")
    t = as_positive_float(t, name="t")
    n_quad = as_count(n_quad, name="n_quad", minimum=1000)
    h = _FD_STEP * t

    def deriv(s: float) -> float:
        return float(dv(s)) if dv is not None else _derivative(v, s, h)

    if alpha == 1.0:
        return deriv(t)
    val, _err = quad(
        deriv, 0.0, t, weight="alg", wvar=(0.0, -alpha), limit=n_quad, epsabs=1e-14, epsrel=1e-12
    )
    return float(rgamma(1.0 - alpha) * val)


def brute_force_rl(gamma: float, v: ScalarFn, t: float, n_quad: int = 1000) -> float:
    """Riemann-Liouville integral (1/Gamma(gamma)) int_0^t (t-s)^(gamma-1) v(s) ds."""
    gamma = as_fraction_order(gamma, name="gamma")
    t = as_positive_float(t, name="t")
    n_quad = as_count(n_quad, name="n_quad", minimum=1000)
    if gamma == 1.0:
        val, _err = quad(v, 0.0, t, limit=n_quad, epsabs=1e-14, epsrel=1e-12)
    else:
        val, _err = quad(
            v, 0.0, t, weight="alg", wvar=(0.0, gamma - 1.0), limit=n_quad, epsabs=1e-14, epsrel=1e-12
        )
    return float(val * rgamma(gamma))


__all__ = ["FracKind", "ScalarFn", "brute_force_caputo", "brute_force_rl", "frac_power"]
