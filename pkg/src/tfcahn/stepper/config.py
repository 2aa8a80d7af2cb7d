from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .._validation import as_count, as_finite_float, as_positive_float
from ..model import Mobility

# Upper limit on the degenerate-solve tolerance.
MAX_KRYLOV_TOL = 1e-8
DEFAULT_BOUND = 1.5


class HistoryMode(str, Enum):
    DIRECT = "direct"
    SOE = "soe"

    @classmethod
    def parse(cls, value: HistoryMode | str) -> HistoryMode:
        if isinstance(value, HistoryMode):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise ValueError(f"history_mode must be 'direct' or 'soe'; got {value!r}.") from None


@dataclass(frozen=True)
class SchemeConfig:
    """
    Time-stepping constants.

    Parameters
    ----------
    tau
        Time step.
    t_end
        Final time; 0 means no steps. When positive it must be >= tau.
    history_mode
        ``"direct"`` (all past spectra kept) or ``"soe"`` (exponential modes).
    soe_tol
        Relative tolerance of the SOE kernel.
    krylov_tol, krylov_maxiter, krylov_restart
        GMRES controls for the degenerate-mobility solve.
    dealias
        2/3-rule filtering of the flux products. ``None`` picks on for
        one-sided mobility and off for constant mobility.
    sink_every
        Cadence (in steps) of the run callback.
    bound
        max|u| above which a run emits an ``unbounded`` warning.
    """

    tau: float
    t_end: float
    history_mode: HistoryMode = HistoryMode.DIRECT
    soe_tol: float = 1e-9
    krylov_tol: float = 1e-10
    krylov_maxiter: int = 400
    krylov_restart: int = 100
    dealias: bool | None = None
    sink_every: int = 1
    bound: float = DEFAULT_BOUND

    def __post_init__(self) -> None:
        tau = as_positive_float(self.tau, name="tau")
        t_end = as_finite_float(self.t_end, name="t_end")
        if t_end < 0.0:
            raise ValueError(f"t_end must be >= 0; got {t_end!r}.")
        if t_end > 0.0 and tau > t_end * (1.0 + 1e-12):
            raise ValueError(f"tau must be <= t_end; got tau={tau!r}, t_end={t_end!r}.")
        object.__setattr__(self, "tau", tau)
        object.__setattr__(self, "t_end", t_end)
        object.__setattr__(self, "history_mode", HistoryMode.parse(self.history_mode))
        soe_tol = as_positive_float(self.soe_tol, name="soe_tol")
        if not (1e-12 <= soe_tol <= 1e-3):
            raise ValueError(f"soe_tol must lie in [1e-12, 1e-3]; got {soe_tol!r}.")
        object.__setattr__(self, "soe_tol", soe_tol)
        krylov_tol = as_positive_float(self.krylov_tol, name="krylov_tol")
        if krylov_tol > MAX_KRYLOV_TOL:
            raise ValueError(f"krylov_tol must be <= 1e-8; got {krylov_tol!r}.")
        object.__setattr__(self, "krylov_tol", krylov_tol)
        object.__setattr__(
            self, "krylov_maxiter", as_count(self.krylov_maxiter, name="krylov_maxiter", minimum=1)
        )
        object.__setattr__(
            self, "krylov_restart", as_count(self.krylov_restart, name="krylov_restart", minimum=1)
        )
        if self.dealias is not None:
            object.__setattr__(self, "dealias", bool(self.dealias))
        object.__setattr__(
            self, "sink_every", as_count(self.sink_every, name="sink_every", minimum=1)
        )
        object.__setattr__(self, "bound", as_positive_float(self.bound, name="bound"))

    @property
    def n_steps(self) -> int:
        """Number of steps to reach t_end (t_end/tau, rounded to the nearest
        integer when within 1e-9 of it, else floored)."""
        ratio = self.t_end / self.tau
        nearest = round(ratio)
        if abs(ratio - nearest) <= 1e-9 * max(1.0, ratio):
            return int(nearest)
        return int(math.floor(ratio))

    def dealias_for(self, mobility: Mobility | str) -> bool:
        if self.dealias is not None:
            return self.dealias
        return Mobility.parse(mobility) is Mobility.ONE_SIDED


__all__ = ["DEFAULT_BOUND", "MAX_KRYLOV_TOL", "HistoryMode", "SchemeConfig"]
