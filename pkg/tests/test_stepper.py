import importlib
import warnings

import numpy as np
import pytest

import tfcahn.stepper.schemes as schemes
from tfcahn import DivergenceError, Field, Grid2D, KrylovConvergenceError, ModelParams
from tfcahn.diagnostics import SeriesRecorder
from tfcahn.initial import random_field
from tfcahn.oracle import classical_ch_step
from tfcahn.stepper import (
    HistoryMode,
    SchemeConfig,
    SolverState,
    init_state,
    run,
    step,
    step_constant,
    step_degenerate,
)
from tfcahn.utils.warnings import TFCahnWarning

run_module = importlib.import_module("tfcahn.stepper.run")


def _smooth(grid: Grid2D) -> Field:
    xx, yy = grid.mesh
    k = 2.0 * np.pi
    return Field(
        grid=grid,
        values=0.3 * np.cos(k * xx) * np.sin(2 * k * yy) + 0.1 * np.sin(3 * k * xx) - 0.05,
    )


def test_scheme_config_validation() -> None:
    with pytest.raises(ValueError, match="tau must be > 0"):
        SchemeConfig(tau=0.0, t_end=1.0)
    with pytest.raises(ValueError, match="t_end must be >= 0"):
        SchemeConfig(tau=0.1, t_end=-1.0)
    with pytest.raises(ValueError, match="tau must be <= t_end"):
        SchemeConfig(tau=0.5, t_end=0.1)
    with pytest.raises(ValueError, match="soe_tol"):
        SchemeConfig(tau=0.1, t_end=1.0, soe_tol=1e-2)
    with pytest.raises(ValueError, match="krylov_tol"):
        SchemeConfig(tau=0.1, t_end=1.0, krylov_tol=1e-6)
    with pytest.raises(ValueError, match="history_mode"):
        SchemeConfig(tau=0.1, t_end=1.0, history_mode="fast")  # type: ignore[arg-type]


def test_step_count_rounds_near_integers() -> None:
    assert SchemeConfig(tau=0.1, t_end=0.3).n_steps == 3
    assert SchemeConfig(tau=0.3, t_end=1.0).n_steps == 3
    assert SchemeConfig(tau=1e-3, t_end=0.05).n_steps == 50
    assert SchemeConfig(tau=0.1, t_end=0.0).n_steps == 0


def test_dealias_default_follows_mobility() -> None:
    cfg = SchemeConfig(tau=0.1, t_end=1.0)
    assert cfg.dealias_for("one_sided")
    assert not cfg.dealias_for("constant")
    assert not SchemeConfig(tau=0.1, t_end=1.0, dealias=False).dealias_for("one_sided")


def test_classical_order_matches_backward_euler() -> None:
    g = Grid2D.square(64)
    p = ModelParams(epsilon=0.05, alpha=1.0)
    tau = 1e-4
    u = random_field(g, seed=3, mean=0.1, amplitude=0.1)
    state = init_state(SchemeConfig(tau=tau, t_end=100 * tau), u, p)
    ref = u
    for _ in range(100):
        state = step(state)
        ref = classical_ch_step(ref, p, tau)
    assert np.max(np.abs(state.u_current.values - ref.values)) <= 1e-12
    assert state.step_index == 100
    assert np.isclose(state.t, 100 * tau)


@pytest.mark.parametrize("mobility", ["constant", "one_sided"])
def test_mass_is_conserved_and_energy_bounded(mobility: str) -> None:
    g = Grid2D.square(32)
    p = ModelParams(epsilon=0.08, mobility=mobility, alpha=0.5)  # type: ignore[arg-type]
    u0 = random_field(g, seed=7, mean=-0.2, amplitude=0.1)
    rec = SeriesRecorder(params=p)
    run(SchemeConfig(tau=1e-3, t_end=0.03), u0, p, sink=rec)
    series = rec.series
    assert len(series) == 31
    assert np.max(np.abs(series.column("mass") - u0.mass)) <= 1e-11
    e = series.column("energy_total")
    assert np.all(e <= e[0] * (1.0 + 1e-8))


def test_soe_history_tracks_direct_history() -> None:
    g = Grid2D.square(32)
    p = ModelParams(epsilon=0.08, alpha=0.5)
    u0 = random_field(g, seed=11, mean=0.0, amplitude=0.1)
    direct = run(SchemeConfig(tau=1e-3, t_end=0.064), u0, p)
    soe = run(SchemeConfig(tau=1e-3, t_end=0.064, history_mode=HistoryMode.SOE), u0, p)
    assert soe.history.mode is HistoryMode.SOE
    assert np.max(np.abs(direct.u_current.values - soe.u_current.values)) < 1e-7


def test_full_soe_run_emits_no_warnings() -> None:
    g = Grid2D.square(16)
    p = ModelParams(epsilon=0.15, alpha=0.6)
    u0 = random_field(g, seed=4, mean=0.0, amplitude=0.1)
    cfg = SchemeConfig(tau=1e-2, t_end=0.2, history_mode=HistoryMode.SOE)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        final = run(cfg, u0, p)
    assert final.step_index == 20


def test_degenerate_solver_with_unit_mobility_matches_constant_step(
    monkeypatch: pytest.MonkeyPatch,
) -> None:
    g = Grid2D.square(32)
    u0 = _smooth(g)
    cfg = SchemeConfig(tau=1e-3, t_end=1e-3, dealias=False)
    p_const = ModelParams(epsilon=0.08, alpha=0.7)
    p_deg = ModelParams(epsilon=0.08, alpha=0.7, mobility="one_sided")  # type: ignore[arg-type]
    ref = step_constant(init_state(cfg, u0, p_const))

    monkeypatch.setattr(schemes, "mobility_array", lambda u, _kind: np.ones_like(u))
    got = step_degenerate(init_state(cfg, u0, p_deg))
    assert np.max(np.abs(got.u_current.values - ref.u_current.values)) < 1e-9


def test_dealiased_degenerate_step_damps_modes_outside_the_filter() -> None:
    g = Grid2D.square(32)
    p = ModelParams(epsilon=0.08, alpha=0.5, mobility="one_sided")  # type: ignore[arg-type]
    xx, _ = g.mesh
    u0 = Field(grid=g, values=-0.2 + 0.1 * np.cos(2.0 * np.pi * 14 * xx))
    cfg = SchemeConfig(tau=1e-3, t_end=1e-3)
    assert cfg.dealias_for(p.mobility)
    got = step_degenerate(init_state(cfg, u0, p)).u_current
    assert np.max(np.abs(got.values + 0.2)) <= 0.01
    assert got.mass == pytest.approx(u0.mass, abs=1e-12)


def test_one_sided_run_stays_bounded_with_default_dealiasing() -> None:
    g = Grid2D.square(32)
    p = ModelParams(epsilon=0.08, mobility="one_sided", alpha=0.5)  # type: ignore[arg-type]
    u0 = random_field(g, seed=7, mean=-0.2, amplitude=0.1)
    rec = SeriesRecorder(params=p)
    final = run(SchemeConfig(tau=1e-3, t_end=0.03), u0, p, sink=rec)
    assert final.step_index == 30
    assert final.u_current.max_abs <= 1.5
    e = rec.series.column("energy_total")
    assert np.all(e <= e[0] * (1.0 + 1e-8))


def test_step_rejects_wrong_mobility() -> None:
    g = Grid2D.square(8)
    cfg = SchemeConfig(tau=0.1, t_end=0.1)
    p = ModelParams(epsilon=0.3)
    with pytest.raises(ValueError, match="one-sided"):
        step_degenerate(init_state(cfg, Field.constant(g, 0.0), p))
    p_deg = ModelParams(epsilon=0.3, mobility="one_sided")  # type: ignore[arg-type]
    with pytest.raises(ValueError, match="constant mobility"):
        step_constant(init_state(cfg, Field.constant(g, 0.0), p_deg))


def test_nonfinite_step_raises_divergence_with_time(monkeypatch: pytest.MonkeyPatch) -> None:
    g = Grid2D.square(16)
    p = ModelParams(epsilon=0.15)
    monkeypatch.setattr(schemes, "inverse", lambda grid, _c: np.full(grid.shape, np.nan))
    with pytest.raises(DivergenceError) as info:
        run(SchemeConfig(tau=0.01, t_end=0.05), Field.constant(g, 0.1), p)
    assert info.value.step_index == 1
    assert info.value.t == pytest.approx(0.01)
    assert "t=0.01" in str(info.value)


def test_run_stamps_time_on_late_failures(monkeypatch: pytest.MonkeyPatch) -> None:
    g = Grid2D.square(16)
    p = ModelParams(epsilon=0.15)
    real_step = run_module.step

    def failing(state: SolverState) -> SolverState:
        if state.step_index == 3:
            raise DivergenceError("blew up", step_index=4)
        return real_step(state)

    monkeypatch.setattr(run_module, "step", failing)
    with pytest.raises(DivergenceError) as info:
        run(SchemeConfig(tau=0.01, t_end=0.1), Field.constant(g, 0.1), p)
    assert info.value.t == pytest.approx(0.04)


def test_krylov_budget_exhaustion_raises() -> None:
    g = Grid2D.square(32)
    p = ModelParams(epsilon=0.08, mobility="one_sided", alpha=0.6)  # type: ignore[arg-type]
    cfg = SchemeConfig(tau=1e-3, t_end=5e-3, krylov_maxiter=1, krylov_restart=1)
    u0 = random_field(g, seed=5, mean=0.0, amplitude=0.3)
    with pytest.raises(KrylovConvergenceError) as info:
        run(cfg, u0, p)
    assert info.value.iterations == 1
    assert info.value.residual > cfg.krylov_tol
    assert info.value.t == pytest.approx(1e-3)


def test_unbounded_solution_warns_once() -> None:
    g = Grid2D.square(16)
    p = ModelParams(epsilon=0.15)
    u0 = random_field(g, seed=2, mean=0.0, amplitude=0.5)
    with pytest.warns(TFCahnWarning, match="unbounded") as record:
        run(SchemeConfig(tau=1e-3, t_end=5e-3, bound=0.01), u0, p)
    assert sum("unbounded" in str(w.message) for w in record) == 1


def test_sink_cadence_includes_initial_and_final_states() -> None:
    g = Grid2D.square(8)
    p = ModelParams(epsilon=0.3)
    seen: list[int] = []
    run(
        SchemeConfig(tau=0.01, t_end=0.1, sink_every=3),
        Field.constant(g, 0.2),
        p,
        sink=lambda s: seen.append(s.step_index),
    )
    assert seen == [0, 3, 6, 9, 10]


def test_zero_horizon_returns_initial_state() -> None:
    g = Grid2D.square(8)
    p = ModelParams(epsilon=0.3)
    u0 = random_field(g, seed=1, mean=0.0, amplitude=0.1)
    seen: list[int] = []
    final = run(SchemeConfig(tau=0.01, t_end=0.0), u0, p, sink=lambda s: seen.append(s.step_index))
    assert seen == [0]
    assert final.step_index == 0
    assert np.array_equal(final.u_current.values, u0.values)


def test_pure_phase_is_stationary() -> None:
    g = Grid2D.square(16)
    for mobility in ("constant", "one_sided"):
        p = ModelParams(epsilon=0.15, mobility=mobility, alpha=0.4)  # type: ignore[arg-type]
        final = run(SchemeConfig(tau=0.01, t_end=0.05), Field.constant(g, 1.0), p)
        assert np.allclose(final.u_current.values, 1.0, atol=1e-12)
