from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.stats import linregress

from .._typing import FloatArray
from .._validation import as_fraction_order, as_positive_float
from ..errors import InsufficientDataError
from ..model import Mobility

MIN_FIT_POINTS = 8


@dataclass(frozen=True)
class SlopeFit:
    """
    Least-squares line ln y = intercept + slope * ln t over ``window``.
    """

    slope: float
    intercept: float
    r_squared: float
    window: tuple[float, float]
    n_points: int

    @property
    def prefactor(self) -> float:
        return math.exp(self.intercept)

    def to_dict(self) -> dict[str, object]:
        return {
            "slope": self.slope,
            "intercept": self.intercept,
            "r_squared": self.r_squared,
            "window": [self.window[0], self.window[1]],
            "n_points": self.n_points,
        }


def _select(
    t: object, y: object, window: tuple[float, float] | None
) -> tuple[FloatArray, FloatArray, tuple[float, float]]:
    tt = np.asarray(t, dtype=np.float64).ravel()
    yy = np.asarray(y, dtype=np.float64).ravel()
    if tt.shape != yy.shape:
        raise ValueError(f"t and y must have equal length; got {tt.size} and {yy.size}.")
    if window is None:
        lo, hi = (float(tt.min()), float(tt.max())) if tt.size else (0.0, 0.0)
    else:
        lo, hi = float(window[0]), float(window[1])
        if not lo < hi:
            raise ValueError(f"window must satisfy t_lo < t_hi; got {window!r}.")
    keep = (tt >= lo) & (tt <= hi) & np.isfinite(tt) & np.isfinite(yy)
    tt, yy = tt[keep], yy[keep]
    if tt.size < MIN_FIT_POINTS:
        raise InsufficientDataError(
            f"need at least {MIN_FIT_POINTS} points in window [{lo:g}, {hi:g}]; got {tt.size}."
        )
    if np.any(tt <= 0.0) or np.any(yy <= 0.0):
        raise ValueError("power-law fits need t > 0 and y > 0 inside the window.")
    return tt, yy, (lo, hi)


def fit_power_law(
    t: object, y: object, window: tuple[float, float] | None = None
) -> SlopeFit:
    """
    Fit y ~ c t^p by linear regression of ln y on ln t.

    Parameters
    ----------
    t, y
        Samples; only those with t inside ``window`` (inclusive) are used.
    window
        (t_lo, t_hi); defaults to the full range.

    Raises
    ------
    InsufficientDataError
        Fewer than 8 points inside the window.
    ValueError
        Nonpositive t or y inside the window.
    """
    tt, yy, win = _select(t, y, window)
    lt, ly = np.log(tt), np.log(yy)
    res = linregress(lt, ly)
    resid = ly - (res.intercept + res.slope * lt)
    ss_tot = float(np.sum((ly - ly.mean()) ** 2))
    ss_res = float(np.sum(resid**2))
    r2 = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    return SlopeFit(
        slope=float(res.slope),
        intercept=float(res.intercept),
        r_squared=float(min(1.0, max(0.0, r2))),
        window=win,
        n_points=int(tt.size),
    )


def split_window_slopes(
    t: object,
    y: object,
    window: tuple[float, float],
    split: float | None = None,
) -> tuple[SlopeFit, SlopeFit]:
    """
    Slopes on [t_lo, split] and [split, t_hi]; ``split`` defaults to the
    geometric midpoint of the window.
    """
    lo, hi = float(window[0]), float(window[1])
    mid = math.sqrt(lo * hi) if split is None else float(split)
    if not lo < mid < hi:
        raise ValueError(f"split must lie inside the window; got {mid!r}.")
    return fit_power_law(t, y, (lo, mid)), fit_power_law(t, y, (mid, hi))


class Regime(str, Enum):
    EARLY = "early"
    LATE = "late"


def predicted_coarsening_rate(
    alpha: float, mobility: Mobility | str, regime: Regime | str = Regime.EARLY
) -> float:
    """
    Growth exponent p of l(t) ~ t^p from the scaling invariance of the
    sharp-interface models: alpha/3 for constant mobility; alpha/3 early and
    alpha/4 late for one-sided mobility.
    """
    alpha = as_fraction_order(alpha, name="alpha")
    mob = Mobility.parse(mobility)
    reg = Regime(regime)
    if mob is Mobility.ONE_SIDED and reg is Regime.LATE:
        return alpha / 4.0
    return alpha / 3.0


def expected_energy_slope(
    alpha: float, mobility: Mobility | str, regime: Regime | str = Regime.EARLY
) -> float:
    """E/|Omega| ~ 1/l, so the energy slope is minus the coarsening rate."""
    return -predicted_coarsening_rate(alpha, mobility, regime)


class Stage(str, Enum):
    FAST = "t"
    MULLINS_SEKERKA = "t1"
    SLOW = "t2"


def timescale(t: float, epsilon: float, alpha: float, stage: Stage | str) -> float:
    """
    Rescaled time of a sharp-interface stage: t, eps^(1/alpha) t or eps^(2/alpha) t.
    """
    t = float(t)
    epsilon = as_positive_float(epsilon, name="epsilon")
    alpha = as_fraction_order(alpha, name="alpha")
    power = {Stage.FAST: 0.0, Stage.MULLINS_SEKERKA: 1.0, Stage.SLOW: 2.0}[Stage(stage)]
    return epsilon ** (power / alpha) * t


__all__ = [
    "MIN_FIT_POINTS",
    "Regime",
    "SlopeFit",
    "Stage",
    "expected_energy_slope",
    "fit_power_law",
    "predicted_coarsening_rate",
    "split_window_slopes",
    "timescale",
]
