from __future__ import annotations

from typing import Any

import numpy as np

from .diagnostics import SlopeFit, TimeSeries, fit_power_law
from .field import Field
from .plot_style import set_style


def plot_energy_decay(
    series: TimeSeries,
    *,
    window: tuple[float, float] | None = None,
    reference_slope: float | None = None,
    ax: Any | None = None,
) -> tuple[Any, Any, SlopeFit | None]:
    """
    Log-log plot of E/|Omega| against t with the fitted power law.

    Parameters
    ----------
    series
        Output of a ``SeriesRecorder``.
    window
        Fit window (t_lo, t_hi); no fit is drawn when omitted.
    reference_slope
        Optional guide line (e.g. ``expected_energy_slope``) through the
        first point of the window.
    ax
        Optional matplotlib Axes.

    Returns
    -------
    (fig, ax, fit)
    """
    set_style()
    import matplotlib.pyplot as plt

    if ax is None:
        fig, ax = plt.subplots(figsize=(4.2, 3.2))
    else:
        fig = ax.figure

    t = series.t
    e = series.column("energy_per_area")
    keep = (t > 0.0) & (e > 0.0)
    ax.loglog(t[keep], e[keep], ".", label="simulation")

    fit = None
    if window is not None:
        fit = fit_power_law(t, e, window)
        tt = np.geomspace(window[0], window[1], 32)
        ax.loglog(tt, fit.prefactor * tt**fit.slope, "-", label=f"fit, slope {fit.slope:.3f}")
        if reference_slope is not None:
            t0 = window[0]
            e0 = fit.prefactor * t0**fit.slope
            ax.loglog(tt, e0 * (tt / t0) ** reference_slope, "--", label=f"slope {reference_slope:.3f}")

    ax.set_xlabel(r"$t$")
    ax.set_ylabel(r"$E(t)/|\Omega|$")
    ax.legend(loc="best")
    return fig, ax, fit


def plot_field(u: Field, *, title: str | None = None, ax: Any | None = None) -> tuple[Any, Any]:
    """Image of u on its grid, color limits fixed to [-1, 1]."""
    set_style()
    import matplotlib.pyplot as plt

    if ax is None:
        fig, ax = plt.subplots(figsize=(3.4, 3.4))
    else:
        fig = ax.figure

    g = u.grid
    ax.imshow(u.values, vmin=-1.0, vmax=1.0, extent=(0.0, g.lx, 0.0, g.ly), aspect="equal")
    ax.grid(False)
    ax.set_xlabel(r"$x$")
    ax.set_ylabel(r"$y$")
    if title is not None:
        ax.set_title(title)
    return fig, ax


__all__ = ["plot_energy_decay", "plot_field"]
