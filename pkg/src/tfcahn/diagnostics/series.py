from __future__ import annotations

import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field

import numpy as np

from .._typing import FloatArray
from ..errors import UndefinedLengthError
from ..field import Field
from ..model import ModelParams, chemical_potential, energy
from ..stepper import SolverState
from .length import energy_length, structure_factor_length
from .powerlaw import SlopeFit, fit_power_law

logger = logging.getLogger(__name__)

SERIES_COLUMNS = (
    "step",
    "t",
    "energy_total",
    "energy_per_area",
    "mass",
    "length_sf",
    "length_energy",
)


@dataclass(frozen=True)
class SeriesRow:
    step: int
    t: float
    energy_total: float
    energy_per_area: float
    mass: float
    length_sf: float
    length_energy: float

    @classmethod
    def measure(cls, step: int, t: float, u: Field, p: ModelParams) -> SeriesRow:
        """Diagnostics of one state; undefined lengths are recorded as NaN."""
        e = energy(u, p)
        try:
            l_sf = structure_factor_length(u)
        except UndefinedLengthError:
            l_sf = float("nan")
        try:
            l_en = energy_length(u, p)
        except UndefinedLengthError:
            l_en = float("nan")
        return cls(
            step=int(step),
            t=float(t),
            energy_total=e.total,
            energy_per_area=e.per_area,
            mass=u.mass,
            length_sf=l_sf,
            length_energy=l_en,
        )


@dataclass(frozen=True)
class TimeSeries:
    """Diagnostic rows with strictly increasing t."""

    rows: tuple[SeriesRow, ...] = ()

    def __post_init__(self) -> None:
        rows = tuple(self.rows)
        t = np.array([r.t for r in rows], dtype=np.float64)
        if t.size > 1 and not np.all(np.diff(t) > 0.0):
            raise ValueError("time series t must be strictly increasing.")
        object.__setattr__(self, "rows", rows)

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[SeriesRow]:
        return iter(self.rows)

    def append(self, row: SeriesRow) -> TimeSeries:
        return TimeSeries(rows=(*self.rows, row))

    def column(self, name: str) -> FloatArray:
        if name not in SERIES_COLUMNS:
            raise ValueError(f"unknown column {name!r}; expected one of {SERIES_COLUMNS}.")
        return np.array([getattr(r, name) for r in self.rows], dtype=np.float64)

    @property
    def t(self) -> FloatArray:
        return self.column("t")

    def fit(self, column: str, window: tuple[float, float] | None = None) -> SlopeFit:
        return fit_power_law(self.t, self.column(column), window)

    def as_array(self, columns: Sequence[str] = SERIES_COLUMNS) -> FloatArray:
        return np.column_stack([self.column(c) for c in columns]) if self.rows else np.empty(
            (0, len(columns))
        )


@dataclass
class SeriesRecorder:
    """
    Run sink collecting a TimeSeries.

    Used as ``run(config, init, params, sink=recorder)``; ``every`` thins the
    states seen by the sink further.
    """

    params: ModelParams
    every: int = 1
    rows: list[SeriesRow] = field(default_factory=list)

    def __call__(self, state: SolverState) -> None:
        if state.step_index % self.every != 0:
            return
        row = SeriesRow.measure(state.step_index, state.t, state.u_current, self.params)
        self.rows.append(row)
        logger.debug("t=%.4g E/|Omega|=%.6g mass=%.3e", row.t, row.energy_per_area, row.mass)

    @property
    def series(self) -> TimeSeries:
        return TimeSeries(rows=tuple(self.rows))


@dataclass
class SnapshotRecorder:
    """
    Run sink keeping (t, u, mu) triples for interface diagnostics.
    """

    params: ModelParams
    every: int = 1
    times: list[float] = field(default_factory=list)
    snapshots: list[tuple[Field, Field]] = field(default_factory=list)

    def __call__(self, state: SolverState) -> None:
        if state.step_index % self.every != 0:
            return
        u = state.u_current
        self.times.append(state.t)
        self.snapshots.append((u, chemical_potential(u, self.params)))


__all__ = [
    "SERIES_COLUMNS",
    "SeriesRecorder",
    "SeriesRow",
    "SnapshotRecorder",
    "TimeSeries",
]
