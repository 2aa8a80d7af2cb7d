from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
from scipy.special import gamma as gamma_fn

from .._typing import FloatArray
from .._validation import (
    as_1d_float,
    as_count,
    as_fraction_order,
    as_positive_float,
)
from .order import FractionalOrder

_SPACING_RTOL = 1e-10


@dataclass(frozen=True)
class L1Weights:
    """
    L1 weights a_j = (j+1)^(1-alpha) - j^(1-alpha), j = 0..n-1.
    """

    a: FloatArray
    alpha: float

    def __len__(self) -> int:
        return int(self.a.size)


@dataclass(frozen=True)
class ScalarHistory:
    """
    Samples v_j = v(j * tau), j = 0..n, on a uniform grid starting at t = 0.
    """

    values: FloatArray
    tau: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", as_1d_float(self.values, name="values"))
        object.__setattr__(self, "tau", as_positive_float(self.tau, name="tau"))

    @classmethod
    def from_samples(cls, times: object, values: object) -> ScalarHistory:
        """
        Build a history from explicit (t_j, v_j) pairs, checking uniform spacing.
        """
        t = as_1d_float(times, name="times")
        v = as_1d_float(values, name="values")
        if t.size != v.size:
            raise ValueError(
                f"times and values must have equal length; got {t.size} and {v.size}."
            )
        if t.size < 2:
            raise ValueError("a history needs at least two samples.")
        if t[0] != 0.0:
            raise ValueError(f"histories must start at t=0; got t_0={t[0]!r}.")
        steps = np.diff(t)
        tau = float(steps.mean())
        if tau <= 0.0 or np.max(np.abs(steps - tau)) > _SPACING_RTOL * tau:
            raise ValueError("sample times must be uniformly spaced and increasing.")
        return cls(values=v, tau=tau)

    @classmethod
    def from_function(
        cls, v: Callable[[FloatArray], FloatArray], *, tau: float, n: int
    ) -> ScalarHistory:
        n = as_count(n, name="n", minimum=1)
        t = tau * np.arange(n + 1, dtype=np.float64)
        return cls(values=np.asarray(v(t), dtype=np.float64), tau=tau)

    @property
    def n(self) -> int:
        """Number of steps (samples minus one)."""
        return int(self.values.size - 1)

    @property
    def times(self) -> FloatArray:
        return self.tau * np.arange(self.values.size, dtype=np.float64)

    @property
    def t_end(self) -> float:
        return self.tau * self.n


def l1_weights(order: FractionalOrder | float, n: int) -> L1Weights:
    """
    L1 product-integration weights for the Caputo derivative.

    For j >= 1 the difference is evaluated as j^(1-alpha) * expm1((1-alpha)
    * log1p(1/j)) to avoid cancellation at large j.
    """
    order = FractionalOrder.of(order)
    n = as_count(n, name="n", minimum=1)
    beta = 1.0 - order.alpha
    a = np.empty(n, dtype=np.float64)
    a[0] = 1.0
    if n > 1:
        j = np.arange(1, n, dtype=np.float64)
        a[1:] = np.power(j, beta) * np.expm1(beta * np.log1p(1.0 / j))
    return L1Weights(a=a, alpha=order.alpha)


def _check_spacing(hist: ScalarHistory, tau: float) -> None:
    tau = as_positive_float(tau, name="tau")
    if abs(hist.tau - tau) > _SPACING_RTOL * tau:
        raise ValueError(
            f"history spacing {hist.tau!r} does not match tau={tau!r}."
        )


def caputo_l1(order: FractionalOrder | float, hist: ScalarHistory, tau: float) -> float:
    """
    L1 approximation of the Caputo derivative at the last sample time.

    Returns (tau^-alpha / Gamma(2-alpha)) * sum_j a_j (v_{n-j} - v_{n-j-1}),
    which is exact when v is linear in t.
    """
    order = FractionalOrder.of(order)
    _check_spacing(hist, tau)
    n = hist.n
    if n < 1:
        raise ValueError("caputo_l1 needs at least two samples.")
    dv = np.diff(hist.values)
    w = l1_weights(order, n).a
    return order.l1_scale(tau) * float(np.dot(w, dv[::-1]))


def caputo_l1_all(order: FractionalOrder | float, hist: ScalarHistory) -> ScalarHistory:
    """
    L1 derivative at every grid time t_1..t_n; the t_0 entry is set to 0.
    """
    order = FractionalOrder.of(order)
    n = hist.n
    if n < 1:
        raise ValueError("caputo_l1_all needs at least two samples.")
    dv = np.diff(hist.values)
    w = l1_weights(order, n).a
    out = np.zeros(n + 1, dtype=np.float64)
    out[1:] = order.l1_scale(hist.tau) * np.convolve(w, dv)[:n]
    return ScalarHistory(values=out, tau=hist.tau)


def _product_integration_weights(gamma: float, n: int) -> FloatArray:
    # Trapezoidal product-integration weights b_{n,k}, k = 0..n.
    g1 = gamma + 1.0
    b = np.empty(n + 1, dtype=np.float64)
    b[n] = 1.0
    if n == 1:
        b[0] = gamma
        return b
    b[0] = (n - 1.0) ** g1 - (n - 1.0 - gamma) * float(n) ** gamma
    m = np.arange(n - 1, 0, -1, dtype=np.float64)  # m = n - k for k = 1..n-1
    inner = np.empty_like(m)
    one = m == 1.0
    inner[one] = 2.0**g1 - 2.0
    big = ~one
    mb = m[big]
    inner[big] = np.power(mb, g1) * (
        np.expm1(g1 * np.log1p(1.0 / mb)) + np.expm1(g1 * np.log1p(-1.0 / mb))
    )
    b[1:n] = inner
    return b


def rl_integral(gamma: float, hist: ScalarHistory, tau: float) -> float:
    """
    Riemann-Liouville integral I^gamma v at the last sample time.

    Uses product integration against the piecewise-linear interpolant of
    the samples, so the result is exact for v linear in t. gamma = 1
    reduces to the cumulative trapezoidal rule.
    """
    gamma = as_fraction_order(gamma, name="gamma")
    _check_spacing(hist, tau)
    n = hist.n
    if n == 0:
        return 0.0
    b = _product_integration_weights(gamma, n)
    scale = tau**gamma / float(gamma_fn(gamma + 2.0))
    return scale * float(np.dot(b, hist.values))


def rescale_check(
    order: FractionalOrder | float,
    hist: ScalarHistory,
    c: float,
    *,
    v: Callable[[FloatArray], FloatArray] | None = None,
) -> tuple[float, float]:
    """
    Compare both sides of the time-rescaling identity of the Caputo derivative.

    With hist sampling v on [0, T], returns (lhs, rhs) where lhs is the L1
    derivative of t -> v(c t) at T / c and rhs is c^alpha times the L1
    derivative of v at T. Without ``v`` the rescaled history reuses the
    samples on the grid tau / c; with ``v`` it is resampled on the original
    step, so the two sides differ by discretization error only.
    """
    order = FractionalOrder.of(order)
    c = as_positive_float(c, name="c")
    rhs = c**order.alpha * caputo_l1(order, hist, hist.tau)
    if v is None:
        lhs = caputo_l1(order, ScalarHistory(hist.values, hist.tau / c), hist.tau / c)
        return lhs, rhs
    t_end = hist.t_end / c
    m = max(1, round(hist.n / c))
    tau_w = t_end / m
    t = tau_w * np.arange(m + 1, dtype=np.float64)
    rescaled = ScalarHistory(values=np.asarray(v(c * t), dtype=np.float64), tau=tau_w)
    lhs = caputo_l1(order, rescaled, tau_w)
    return lhs, rhs
