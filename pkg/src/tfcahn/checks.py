from __future__ import annotations

import logging
import math
import tempfile
from collections.abc import Callable
from pathlib import Path

import numpy as np

from .benchmarks import run_history_benchmark
from .diagnostics import SeriesRecorder, SeriesRow, TimeSeries
from .field import (
    Field,
    Grid2D,
    SpectrumField,
    dft_forward,
    dft_inverse,
    divergence,
    gradient,
    laplacian,
    variable_flux_div,
)
from .fracops import ScalarHistory, caputo_l1, rl_integral
from .initial import random_field
from .io import Snapshot, pgm_pixels, read_series_csv, read_snapshot, write_series_csv, write_snapshot
from .model import Mobility, ModelParams, energy, mobility
from .oracle import PROFILE_S, FracKind, classical_ch_step, compute_S, frac_power
from .results import CheckResult, CheckSuiteResult
from .rng import SplitMix64
from .stepper import HistoryMode, SchemeConfig, init_state, run, step

logger = logging.getLogger(__name__)

Check = Callable[[], CheckResult]

# SplitMix64 reference outputs.
GOLDEN_U64_SEED42 = (13679457532755275413, 2949826092126892291, 5139283748462763858)
GOLDEN_U64_SEED0 = 0xE220A8397B1DCDAF
# (first output >> 11) * 2**-53 = 6679422623415661 * 2**-53
GOLDEN_UNIFORM_SEED42 = 6679422623415661 * 2.0**-53

_ALPHAS = tuple(round(0.1 * i, 1) for i in range(1, 10))


def _result(name: str, value: float, tol: float, **details: object) -> CheckResult:
    return CheckResult(
        name=name, passed=bool(value <= tol), value=float(value), tolerance=tol, details=dict(details)
    )


def _nyquist_free_field(grid: Grid2D, seed: int) -> Field:
    coeffs = dft_forward(random_field(grid, seed=seed, mean=0.1, amplitude=1.0)).coefficients.copy()
    coeffs[grid.ny // 2, :] = 0.0
    coeffs[:, grid.nx // 2] = 0.0
    return dft_inverse(SpectrumField(grid=grid, coefficients=coeffs))


def check_l1_linear() -> CheckResult:
    worst = 0.0
    for alpha in _ALPHAS:
        hist = ScalarHistory.from_function(lambda t: t, tau=0.01, n=100)
        exact = frac_power(FracKind.CAPUTO_DERIV, alpha, 1.0, hist.t_end)
        worst = max(worst, abs(caputo_l1(alpha, hist, hist.tau) - exact) / exact)
    return _result("l1_exact_on_linear", worst, 1e-12)


def check_l1_order() -> CheckResult:
    worst = 0.0
    for alpha in (0.3, 0.5, 0.7, 0.9):
        exact = frac_power(FracKind.CAPUTO_DERIV, alpha, 2.0, 1.0)
        errs = []
        for n in (512, 1024):
            hist = ScalarHistory.from_function(lambda t: t**2, tau=1.0 / n, n=n)
            errs.append(abs(caputo_l1(alpha, hist, hist.tau) - exact))
        order = math.log2(errs[0] / errs[1])
        worst = max(worst, abs(order - (2.0 - alpha)))
    return _result("l1_convergence_order", worst, 0.1)


def check_rl_linear() -> CheckResult:
    worst = 0.0
    for gamma in _ALPHAS:
        hist = ScalarHistory.from_function(lambda t: 1.0 + 2.0 * t, tau=0.02, n=50)
        exact = frac_power(FracKind.RL_INTEGRAL, gamma, 0.0, 1.0) + 2.0 * frac_power(
            FracKind.RL_INTEGRAL, gamma, 1.0, 1.0
        )
        worst = max(worst, abs(rl_integral(gamma, hist, hist.tau) - exact) / exact)
    return _result("rl_exact_on_linear", worst, 1e-12)


def check_soe_equivalence() -> CheckResult:
    res = run_history_benchmark(0.5, 2000, tol=1e-9, width=2, seed=7)
    return _result("soe_matches_direct", res.max_rel_diff, 1e-6, n_modes=res.n_modes)


def check_dft_roundtrip() -> CheckResult:
    u = random_field(Grid2D.square(32), seed=3, mean=0.1, amplitude=0.5)
    back = dft_inverse(dft_forward(u))
    return _result("dft_roundtrip", float(np.max(np.abs(back.values - u.values))), 1e-13)


def check_parseval() -> CheckResult:
    u = random_field(Grid2D.square(32), seed=5, mean=0.0, amplitude=1.0)
    spatial = float(np.sum(u.values**2)) * u.grid.size
    spectral = float(np.sum(dft_forward(u).power))
    return _result("parseval", abs(spatial - spectral) / spatial, 1e-12)


def check_laplacian_eigen() -> CheckResult:
    g = Grid2D.square(32, 2.0 * np.pi)
    xx, yy = g.mesh
    u = Field(grid=g, values=np.sin(3.0 * xx) * np.cos(2.0 * yy))
    err = float(np.max(np.abs(laplacian(u).values + 13.0 * u.values)))
    return _result("laplacian_eigenfunction", err, 1e-10)


def check_div_grad() -> CheckResult:
    u = _nyquist_free_field(Grid2D(nx=32, ny=16, lx=1.0, ly=0.5), seed=9)
    err = float(np.max(np.abs(divergence(*gradient(u)).values - laplacian(u).values)))
    scale = float(np.max(np.abs(laplacian(u).values)))
    return _result("div_grad_is_laplacian", err / scale, 1e-12)


def check_operator_mass() -> CheckResult:
    g = Grid2D.square(32)
    u = random_field(g, seed=11, mean=0.2, amplitude=0.8)
    mu = random_field(g, seed=12, mean=0.0, amplitude=1.0)
    worst = abs(laplacian(u).mass)
    for dealias in (False, True):
        worst = max(worst, abs(variable_flux_div(mobility(u, Mobility.ONE_SIDED), mu, dealias=dealias).mass))
    return _result("operators_preserve_mass", worst, 1e-10)


def check_classical_limit() -> CheckResult:
    g = Grid2D.square(32)
    p = ModelParams(epsilon=0.08, alpha=1.0)
    tau, n = 1e-3, 20
    u0 = random_field(g, seed=1, mean=0.0, amplitude=0.05)
    state = init_state(SchemeConfig(tau=tau, t_end=n * tau, history_mode=HistoryMode.DIRECT), u0, p)
    ref = u0
    worst = 0.0
    for _ in range(n):
        state = step(state)
        ref = classical_ch_step(ref, p, tau)
        worst = max(worst, float(np.max(np.abs(state.u_current.values - ref.values))))
    return _result("classical_limit", worst, 1e-12)


def _mass_energy(mob: Mobility) -> tuple[float, float]:
    g = Grid2D.square(32)
    p = ModelParams(epsilon=0.08, mobility=mob, alpha=0.9)
    u0 = random_field(g, seed=42, mean=0.0, amplitude=0.05)
    rec = SeriesRecorder(params=p)
    run(SchemeConfig(tau=1e-3, t_end=0.05, history_mode=HistoryMode.SOE), u0, p, sink=rec)
    series = rec.series
    drift = float(np.max(np.abs(series.column("mass") - u0.mass)))
    e = series.column("energy_total")
    growth = float(np.max(e[1:] - e[0] * (1.0 + 1e-8))) if e.size > 1 else 0.0
    return drift, max(growth, 0.0)


def check_mass_energy() -> CheckResult:
    drift_c, growth_c = _mass_energy(Mobility.CONSTANT)
    drift_d, growth_d = _mass_energy(Mobility.ONE_SIDED)
    drift = max(drift_c, drift_d)
    growth = max(growth_c, growth_d)
    return CheckResult(
        name="mass_and_energy",
        passed=drift <= 1e-10 and growth == 0.0,
        value=drift,
        tolerance=1e-10,
        details={"energy_growth": growth},
    )


def check_prng_golden() -> CheckResult:
    got = SplitMix64(42).next_u64(3)
    ok = [int(v) for v in got] == list(GOLDEN_U64_SEED42)
    ok = ok and int(SplitMix64(0).next_u64(1)[0]) == GOLDEN_U64_SEED0
    err = abs(float(SplitMix64(42).uniform(1)[0]) - GOLDEN_UNIFORM_SEED42)
    return CheckResult(name="prng_golden", passed=ok and err == 0.0, value=err, tolerance=0.0)


def check_file_roundtrip() -> CheckResult:
    g = Grid2D(nx=16, ny=8)
    u = random_field(g, seed=9, mean=0.0, amplitude=1.0)
    snap = Snapshot.from_field(u, alpha=0.9, epsilon=0.05, t=1.25)
    p = ModelParams(epsilon=0.25)
    series = TimeSeries()
    for i, t in enumerate((0.0, 0.5, 1.0)):
        series = series.append(SeriesRow.measure(i, t, u, p))
    with tempfile.TemporaryDirectory() as tmp:
        path = write_snapshot(Path(tmp) / "u.tfch", snap)
        raw = path.read_bytes()
        again = read_snapshot(path)
        snap_ok = again.to_bytes() == raw and np.array_equal(again.values, u.values)
        cols = read_series_csv(write_series_csv(Path(tmp) / "series.csv", series))
    csv_ok = np.array_equal(cols["energy"], series.column("energy_per_area")) and np.array_equal(
        cols["t"], series.t
    )
    pix = pgm_pixels(np.array([[-1.0, 0.0, 1.0]]))
    pgm_ok = pix.tolist() == [[0, 128, 255]]
    ok = bool(snap_ok and csv_ok and pgm_ok)
    return CheckResult(
        name="file_roundtrip",
        passed=ok,
        value=0.0 if ok else 1.0,
        tolerance=0.0,
        details={"snapshot": bool(snap_ok), "csv": bool(csv_ok), "pgm": bool(pgm_ok)},
    )


def check_profile_constant() -> CheckResult:
    return _result("profile_constant_S", abs(compute_S() - PROFILE_S) / PROFILE_S, 1e-10)


CHECKS: tuple[Check, ...] = (
    check_l1_linear,
    check_l1_order,
    check_rl_linear,
    check_soe_equivalence,
    check_dft_roundtrip,
    check_parseval,
    check_laplacian_eigen,
    check_div_grad,
    check_operator_mass,
    check_classical_limit,
    check_mass_energy,
    check_prng_golden,
    check_file_roundtrip,
    check_profile_constant,
)


def run_checks(checks: tuple[Check, ...] = CHECKS) -> CheckSuiteResult:
    """Run the invariant suite; an exception inside a check counts as a failure."""
    results = []
    for check in checks:
        try:
            res = check()
        except Exception as exc:
            logger.exception("check %s raised", check.__name__)
            res = CheckResult(
                name=check.__name__.removeprefix("check_"),
                passed=False,
                value=float("nan"),
                tolerance=0.0,
                details={"error": f"{type(exc).__name__}: {exc}"},
            )
        logger.info(res.summary())
        results.append(res)
    return CheckSuiteResult(results=tuple(results))


__all__ = [
    "CHECKS",
    "GOLDEN_U64_SEED0",
    "GOLDEN_U64_SEED42",
    "GOLDEN_UNIFORM_SEED42",
    "run_checks",
]
