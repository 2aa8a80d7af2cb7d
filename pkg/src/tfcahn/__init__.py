from __future__ import annotations

from importlib.metadata import PackageNotFoundError, version

from .config import RunConfig, load_run_config, parse_run_config
from .diagnostics import (
    CoarseningReport,
    InterfaceTrack,
    SeriesRecorder,
    SlopeFit,
    TimeSeries,
    characteristic_length,
    coarsening_report,
    fit_power_law,
    flux_law_residual,
    gibbs_thomson_residual,
    predicted_coarsening_rate,
    track_radius,
)
from .errors import (
    DivergenceError,
    InsufficientDataError,
    InterfaceGeometryError,
    KrylovConvergenceError,
    SimulationError,
    SOEConstructionError,
    UndefinedLengthError,
)
from .field import Field, Grid2D
from .fracops import FractionalOrder, caputo_l1, rl_integral, soe_build
from .initial import init_field
from .io import Snapshot, read_snapshot, write_pgm, write_snapshot
from .model import Mobility, ModelParams, chemical_potential, energy
from .plot_style import savefig, set_style
from .plots import plot_energy_decay, plot_field
from .results import BenchmarkResult, CheckResult, CheckSuiteResult, RunResult
from .stepper import HistoryMode, SchemeConfig, SolverState, run, step

try:
    __version__ = version("tfcahn")
except PackageNotFoundError:  # pragma: no cover
    __version__ = "0.0.0"

__all__ = [
    "BenchmarkResult",
    "CheckResult",
    "CheckSuiteResult",
    "CoarseningReport",
    "DivergenceError",
    "Field",
    "FractionalOrder",
    "Grid2D",
    "HistoryMode",
    "InsufficientDataError",
    "InterfaceGeometryError",
    "InterfaceTrack",
    "KrylovConvergenceError",
    "Mobility",
    "ModelParams",
    "RunConfig",
    "RunResult",
    "SOEConstructionError",
    "SchemeConfig",
    "SeriesRecorder",
    "SimulationError",
    "SlopeFit",
    "Snapshot",
    "SolverState",
    "TimeSeries",
    "UndefinedLengthError",
    "__version__",
    "caputo_l1",
    "characteristic_length",
    "chemical_potential",
    "coarsening_report",
    "energy",
    "fit_power_law",
    "flux_law_residual",
    "gibbs_thomson_residual",
    "init_field",
    "load_run_config",
    "parse_run_config",
    "plot_energy_decay",
    "plot_field",
    "predicted_coarsening_rate",
    "read_snapshot",
    "rl_integral",
    "run",
    "savefig",
    "set_style",
    "soe_build",
    "step",
    "track_radius",
    "write_pgm",
    "write_snapshot",
]
