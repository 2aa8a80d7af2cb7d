from __future__ import annotations

from .interface import (
    FluxLawResult,
    InterfaceTrack,
    flux_law_residual,
    gibbs_thomson_residual,
    gibbs_thomson_target,
    interface_mean_potential,
    phase_centroid,
    radial_profile,
    track_radius,
)
from .length import (
    CharacteristicLength,
    characteristic_length,
    energy_length,
    structure_factor_length,
)
from .powerlaw import (
    MIN_FIT_POINTS,
    Regime,
    SlopeFit,
    Stage,
    expected_energy_slope,
    fit_power_law,
    predicted_coarsening_rate,
    split_window_slopes,
    timescale,
)
from .report import CoarseningReport, coarsening_report
from .series import (
    SERIES_COLUMNS,
    SeriesRecorder,
    SeriesRow,
    SnapshotRecorder,
    TimeSeries,
)

__all__ = [
    "MIN_FIT_POINTS",
    "SERIES_COLUMNS",
    "CharacteristicLength",
    "CoarseningReport",
    "FluxLawResult",
    "InterfaceTrack",
    "Regime",
    "SeriesRecorder",
    "SeriesRow",
    "SlopeFit",
    "SnapshotRecorder",
    "Stage",
    "TimeSeries",
    "characteristic_length",
    "coarsening_report",
    "energy_length",
    "expected_energy_slope",
    "fit_power_law",
    "flux_law_residual",
    "gibbs_thomson_residual",
    "gibbs_thomson_target",
    "interface_mean_potential",
    "phase_centroid",
    "predicted_coarsening_rate",
    "radial_profile",
    "split_window_slopes",
    "structure_factor_length",
    "timescale",
    "track_radius",
]
