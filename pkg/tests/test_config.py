import json
from pathlib import Path

import pytest

from tfcahn import load_run_config, parse_run_config
from tfcahn.config import OUT_DIR_ENV, RunConfig
from tfcahn.model import Mobility
from tfcahn.stepper import HistoryMode


def test_defaults() -> None:
    cfg = parse_run_config({})
    assert cfg == RunConfig()
    assert cfg.alpha == 0.9
    assert cfg.epsilon == 0.05
    grid = cfg.build_grid()
    assert (grid.nx, grid.ny, grid.lx, grid.ly) == (128, 128, 2.0, 2.0)
    assert cfg.model_params().is_resolved(grid)
    scheme = cfg.scheme_config()
    assert scheme.history_mode is HistoryMode.SOE
    assert scheme.n_steps == 1000
    assert cfg.model_params().mobility is Mobility.CONSTANT


def test_full_config_is_parsed() -> None:
    cfg = parse_run_config(
        {
            "alpha": 0.5,
            "epsilon": 0.1,
            "grid": {"nx": 64, "ny": 32, "lx": 4.0, "ly": 2.0},
            "mobility": "one_sided",
            "dt": 0.001,
            "t_end": 0.5,
            "history": {"mode": "direct"},
            "init": {"kind": "circle", "radius": 0.5, "center": [1.0, 1.0]},
            "output": {"dir": "runs/a", "snapshot_every": 50, "series_every": 5},
            "solver": {"krylov_tol": 1e-12, "dealias": False},
        }
    )
    grid = cfg.build_grid()
    assert grid.shape == (32, 64)
    assert cfg.mobility == "one_sided"
    assert cfg.init.center == (1.0, 1.0)
    scheme = cfg.scheme_config()
    assert scheme.history_mode is HistoryMode.DIRECT
    assert scheme.dealias is False
    assert scheme.krylov_tol == 1e-12
    assert cfg.output.snapshot_every == 50


def test_dict_round_trip() -> None:
    cfg = parse_run_config({"alpha": 0.3, "init": {"kind": "tanh1d", "radius": 0.4}})
    again = parse_run_config(json.loads(cfg.to_json()))
    assert again == cfg


@pytest.mark.parametrize(
    ("raw", "message"),
    [
        ({"alpha": 0.0}, "alpha must lie in"),
        ({"alpha": 1.2}, "alpha must lie in"),
        ({"epsilon": -1.0}, "epsilon must be > 0"),
        ({"grid": {"nx": 100}}, "power of two"),
        ({"grid": {"nx": 4}}, "power of two"),
        ({"mobility": "linear"}, "mobility must be"),
        ({"history": {"mode": "tree"}}, "history_mode"),
        ({"history": {"tol": 0.1}}, "soe_tol"),
        ({"dt": 1.0, "t_end": 0.5}, "tau must be <= t_end"),
        ({"t_end": -1.0}, "t_end must be >= 0"),
        ({"init": {"kind": "blob"}}, "init.kind"),
        ({"init": {"seed": -3}}, "init.seed"),
        ({"init": {"center": 0.5}}, "init.center"),
        ({"output": {"series_every": 0}}, "output.series_every"),
        ({"solver": {"dealias": "yes"}}, "solver.dealias"),
        ({"solver": {"krylov_tol": 1e-4}}, "krylov_tol"),
        ({"gird": {}}, "unknown key"),
        ({"grid": {"nz": 8}}, "unknown key"),
        ({"grid": [128]}, "grid must be an object"),
    ],
)
def test_invalid_configs(raw: dict[str, object], message: str) -> None:
    with pytest.raises(ValueError, match=message):
        parse_run_config(raw)


def test_load_from_file(tmp_path: Path) -> None:
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"alpha": 0.7, "t_end": 1.0}), encoding="utf-8")
    assert load_run_config(path).alpha == 0.7
    bad = tmp_path / "bad.json"
    bad.write_text("{alpha: 1", encoding="utf-8")
    with pytest.raises(ValueError, match="invalid JSON"):
        load_run_config(bad)
    with pytest.raises(OSError):
        load_run_config(tmp_path / "missing.json")


def test_output_dir_override(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    cfg = parse_run_config({"output": {"dir": "somewhere"}})
    monkeypatch.delenv(OUT_DIR_ENV, raising=False)
    assert cfg.output.resolved_dir() == Path("somewhere")
    monkeypatch.setenv(OUT_DIR_ENV, str(tmp_path))
    assert cfg.output.resolved_dir() == tmp_path
