from __future__ import annotations

import argparse
import json
import logging
import sys
import warnings
from collections.abc import Sequence
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import scipy.fft

from ._validation import as_count
from .benchmarks import run_history_benchmark
from .checks import run_checks
from .config import load_run_config
from .diagnostics import SeriesRecorder, fit_power_law
from .errors import SimulationError
from .initial import init_field
from .io import (
    Snapshot,
    read_series_csv,
    read_snapshot,
    write_pgm,
    write_series_csv,
    write_snapshot,
)
from .model import ModelParams
from .results import BenchmarkResult, CheckSuiteResult, RunResult
from .stepper import SolverState, run
from .utils.warnings import TFCahnWarning

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERICAL = 2
EXIT_CHECK_FAILED = 3

SERIES_FILE = "series.csv"
CONFIG_FILE = "config.json"


@dataclass
class _RunSink:
    """Feeds the series recorder and writes snapshots on their own cadences."""

    params: ModelParams
    out_dir: Path
    series_every: int
    snapshot_every: int
    recorder: SeriesRecorder = field(init=False)
    snapshots: list[Path] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.recorder = SeriesRecorder(params=self.params, every=self.series_every)

    def __call__(self, state: SolverState) -> None:
        self.recorder(state)
        if self.snapshot_every and state.step_index % self.snapshot_every == 0:
            snap = Snapshot.from_field(
                state.u_current,
                alpha=self.params.order.alpha,
                epsilon=self.params.epsilon,
                t=state.t,
            )
            path = self.out_dir / f"snapshot_{state.step_index:08d}.tfch"
            self.snapshots.append(write_snapshot(path, snap))


def cmd_run(config_path: str | Path) -> RunResult:
    """
    Execute one configured run and write its outputs.

    Writes ``series.csv``, a normalized ``config.json`` and, when
    ``output.snapshot_every > 0``, one snapshot per cadence step into the
    output directory (``TFCHE_OUT_DIR`` overrides ``output.dir``).
    """
    cfg = load_run_config(config_path)
    out_dir = cfg.output.resolved_dir()
    out_dir.mkdir(parents=True, exist_ok=True)

    grid = cfg.build_grid()
    params = cfg.model_params()
    scheme = cfg.scheme_config()
    u0 = init_field(cfg.init, grid, epsilon=cfg.epsilon)
    sink = _RunSink(
        params=params,
        out_dir=out_dir,
        series_every=cfg.output.series_every,
        snapshot_every=cfg.output.snapshot_every,
    )

    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", TFCahnWarning)
        final = run(scheme, u0, params, sink=sink)
    messages = tuple(str(w.message) for w in caught if issubclass(w.category, TFCahnWarning))
    for msg in messages:
        logger.warning(msg)

    (out_dir / CONFIG_FILE).write_text(cfg.to_json() + "\n", encoding="utf-8")
    series_path = write_series_csv(out_dir / SERIES_FILE, sink.recorder.series)
    return RunResult(
        t_final=final.t,
        n_steps=final.step_index,
        series_path=series_path,
        snapshot_paths=tuple(sink.snapshots),
        warnings=messages,
    )


def cmd_fit(
    csv_path: str | Path,
    column: str = "energy",
    t_lo: float | None = None,
    t_hi: float | None = None,
) -> dict[str, object]:
    """Power-law fit of one series CSV column against t."""
    cols = read_series_csv(csv_path)
    if "t" not in cols:
        raise ValueError(f"{csv_path}: no 't' column.")
    if column not in cols:
        raise ValueError(f"{csv_path}: no column {column!r}; have {', '.join(cols)}.")
    window = None
    if t_lo is not None or t_hi is not None:
        t = cols["t"]
        window = (
            float(np.min(t)) if t_lo is None else float(t_lo),
            float(np.max(t)) if t_hi is None else float(t_hi),
        )
    fit = fit_power_law(cols["t"], cols[column], window)
    return {"column": column, **fit.to_dict()}


def cmd_check() -> CheckSuiteResult:
    return run_checks()


def cmd_bench(alpha: float, n_steps: int, *, tol: float = 1e-9, width: int = 8) -> BenchmarkResult:
    return run_history_benchmark(alpha, n_steps, tol=tol, width=width)


def cmd_snapshot(snapshot_path: str | Path, pgm: str | Path | None = None) -> dict[str, object]:
    """Convert a snapshot to PGM (when ``pgm`` is given) and describe it."""
    snap = read_snapshot(snapshot_path)
    info: dict[str, object] = {
        "nx": snap.nx,
        "ny": snap.ny,
        "alpha": snap.alpha,
        "epsilon": snap.epsilon,
        "t": snap.t,
        "min": float(np.min(snap.values)),
        "max": float(np.max(snap.values)),
        "mean": float(np.mean(snap.values)),
    }
    if pgm is not None:
        info["pgm"] = str(write_pgm(pgm, snap.values))
    return info


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _threads(value: str) -> int:
    try:
        return as_count(int(value), name="--threads", minimum=1)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="tfcahn",
        description="Time-fractional Cahn-Hilliard simulations and diagnostics.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")
    parser.add_argument(
        "--threads",
        type=_threads,
        default=1,
        help="FFT worker threads (default: 1, bit-reproducible)",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_run = sub.add_parser("run", help="run a simulation from a JSON config")
    p_run.add_argument("config", type=Path)

    p_fit = sub.add_parser("fit", help="fit a power law to a series CSV column")
    p_fit.add_argument("csv", type=Path)
    p_fit.add_argument("--column", default="energy")
    p_fit.add_argument("--t-lo", type=float, default=None)
    p_fit.add_argument("--t-hi", type=float, default=None)

    sub.add_parser("check", help="run the invariant suite")

    p_bench = sub.add_parser("bench", help="time direct vs SOE history")
    p_bench.add_argument("--alpha", type=float, default=0.5)
    p_bench.add_argument("--n-steps", type=int, default=10_000)
    p_bench.add_argument("--tol", type=float, default=1e-9)
    p_bench.add_argument("--width", type=int, default=8)

    p_snap = sub.add_parser("snapshot", help="inspect a snapshot or convert it to PGM")
    p_snap.add_argument("snapshot", type=Path)
    p_snap.add_argument("--pgm", type=Path, default=None)
    return parser


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "run":
        print(cmd_run(args.config).summary())
        return EXIT_OK
    if args.command == "fit":
        print(json.dumps(cmd_fit(args.csv, args.column, args.t_lo, args.t_hi), sort_keys=True))
        return EXIT_OK
    if args.command == "check":
        suite = cmd_check()
        print(suite.summary())
        return EXIT_OK if suite.passed else EXIT_CHECK_FAILED
    if args.command == "bench":
        print(cmd_bench(args.alpha, args.n_steps, tol=args.tol, width=args.width).to_json())
        return EXIT_OK
    print(json.dumps(cmd_snapshot(args.snapshot, args.pgm), sort_keys=True))
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    logging.basicConfig(
        level=max(logging.DEBUG, logging.WARNING - 10 * args.verbose),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        with scipy.fft.set_workers(args.threads):
            return _dispatch(args)
    except SimulationError as exc:
        print(f"tfcahn: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (ValueError, OSError) as exc:
        print(f"tfcahn: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


__all__ = [
    "EXIT_CHECK_FAILED",
    "EXIT_NUMERICAL",
    "EXIT_OK",
    "EXIT_USAGE",
    "build_parser",
    "cmd_bench",
    "cmd_check",
    "cmd_fit",
    "cmd_run",
    "cmd_snapshot",
    "main",
]
