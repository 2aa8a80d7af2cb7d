from __future__ import annotations

import json
import os
from collections.abc import Mapping
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from ._validation import as_count, as_finite_float, as_fraction_order, as_positive_float
from .field import Grid2D
from .model import Mobility, ModelParams
from .rng import MASK64
from .stepper import HistoryMode, SchemeConfig

OUT_DIR_ENV = "TFCHE_OUT_DIR"
INIT_KINDS = ("random", "circle", "tanh1d")


def _section(raw: object, name: str, allowed: tuple[str, ...]) -> dict[str, Any]:
    if raw is None:
        return {}
    if not isinstance(raw, Mapping):
        raise ValueError(f"{name} must be an object; got {type(raw).__name__}.")
    unknown = sorted(set(raw) - set(allowed))
    if unknown:
        raise ValueError(f"unknown key(s) in {name}: {', '.join(unknown)}.")
    return dict(raw)


@dataclass(frozen=True)
class GridSection:
    nx: int = 128
    ny: int | None = None
    lx: float = 2.0
    ly: float | None = None

    def build(self) -> Grid2D:
        return Grid2D(
            nx=self.nx,
            ny=self.nx if self.ny is None else self.ny,
            lx=self.lx,
            ly=self.lx if self.ly is None else self.ly,
        )


@dataclass(frozen=True)
class HistorySection:
    mode: str = "soe"
    tol: float = 1e-9


@dataclass(frozen=True)
class InitSection:
    """
    Initial condition. ``radius`` and ``center`` apply to circle and tanh1d
    (stripe half-width and centre); ``center=None`` is the domain centre.
    """

    kind: str = "random"
    seed: int = 42
    mean: float = 0.0
    amplitude: float = 0.05
    radius: float = 0.25
    center: tuple[float, float] | None = None

    def __post_init__(self) -> None:
        if self.kind not in INIT_KINDS:
            raise ValueError(f"init.kind must be one of {INIT_KINDS}; got {self.kind!r}.")
        seed = as_count(self.seed, name="init.seed")
        if seed > MASK64:
            raise ValueError(f"init.seed must fit in 64 bits; got {seed}.")
        object.__setattr__(self, "seed", seed)
        object.__setattr__(self, "mean", as_finite_float(self.mean, name="init.mean"))
        amp = as_finite_float(self.amplitude, name="init.amplitude")
        if amp < 0.0:
            raise ValueError(f"init.amplitude must be >= 0; got {amp!r}.")
        object.__setattr__(self, "amplitude", amp)
        object.__setattr__(self, "radius", as_positive_float(self.radius, name="init.radius"))
        if self.center is not None:
            c = tuple(float(v) for v in self.center)  # type: ignore[union-attr]
            if len(c) != 2:
                raise ValueError(f"init.center must be [x, y]; got {self.center!r}.")
            object.__setattr__(self, "center", c)


@dataclass(frozen=True)
class OutputSection:
    dir: str = "out"
    snapshot_every: int = 0
    series_every: int = 10

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "snapshot_every", as_count(self.snapshot_every, name="output.snapshot_every")
        )
        object.__setattr__(
            self,
            "series_every",
            as_count(self.series_every, name="output.series_every", minimum=1),
        )

    def resolved_dir(self) -> Path:
        """Output directory, with the TFCHE_OUT_DIR override applied."""
        return Path(os.environ.get(OUT_DIR_ENV) or self.dir)


@dataclass(frozen=True)
class SolverSection:
    krylov_tol: float = 1e-10
    krylov_maxiter: int = 400
    krylov_restart: int = 100
    dealias: bool | None = None
    sink_every: int = 1


@dataclass(frozen=True)
class RunConfig:
    """
    Parsed run configuration.

    Construct with :func:`parse_run_config`; ``to_dict`` is its inverse.
    """

    alpha: float = 0.9
    epsilon: float = 0.05
    grid: GridSection = field(default_factory=GridSection)
    mobility: str = "constant"
    dt: float = 0.01
    t_end: float = 10.0
    stabilization: float = 2.0
    history: HistorySection = field(default_factory=HistorySection)
    init: InitSection = field(default_factory=InitSection)
    output: OutputSection = field(default_factory=OutputSection)
    solver: SolverSection = field(default_factory=SolverSection)

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", as_fraction_order(self.alpha, name="alpha"))
        object.__setattr__(self, "mobility", Mobility.parse(self.mobility).value)
        # Validate the derived objects eagerly.
        self.build_grid()
        self.model_params()
        self.scheme_config()

    def build_grid(self) -> Grid2D:
        return self.grid.build()

    def model_params(self) -> ModelParams:
        return ModelParams(
            epsilon=self.epsilon,
            mobility=Mobility.parse(self.mobility),
            stabilization=self.stabilization,
            alpha=self.alpha,
        )

    def scheme_config(self) -> SchemeConfig:
        return SchemeConfig(
            tau=self.dt,
            t_end=self.t_end,
            history_mode=HistoryMode.parse(self.history.mode),
            soe_tol=self.history.tol,
            krylov_tol=self.solver.krylov_tol,
            krylov_maxiter=self.solver.krylov_maxiter,
            krylov_restart=self.solver.krylov_restart,
            dealias=self.solver.dealias,
            sink_every=self.solver.sink_every,
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "alpha": self.alpha,
            "epsilon": self.epsilon,
            "grid": {
                "nx": self.grid.nx,
                "ny": self.grid.ny,
                "lx": self.grid.lx,
                "ly": self.grid.ly,
            },
            "mobility": self.mobility,
            "dt": self.dt,
            "t_end": self.t_end,
            "stabilization": self.stabilization,
            "history": {"mode": self.history.mode, "tol": self.history.tol},
            "init": {
                "kind": self.init.kind,
                "seed": self.init.seed,
                "mean": self.init.mean,
                "amplitude": self.init.amplitude,
                "radius": self.init.radius,
                "center": None if self.init.center is None else list(self.init.center),
            },
            "output": {
                "dir": self.output.dir,
                "snapshot_every": self.output.snapshot_every,
                "series_every": self.output.series_every,
            },
            "solver": {
                "krylov_tol": self.solver.krylov_tol,
                "krylov_maxiter": self.solver.krylov_maxiter,
                "krylov_restart": self.solver.krylov_restart,
                "dealias": self.solver.dealias,
                "sink_every": self.solver.sink_every,
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


_TOP_KEYS = (
    "alpha",
    "epsilon",
    "grid",
    "mobility",
    "dt",
    "t_end",
    "stabilization",
    "history",
    "init",
    "output",
    "solver",
)


def _opt_int(v: object, name: str) -> int | None:
    return None if v is None else as_count(v, name=name)  # type: ignore[arg-type]


def _opt_float(v: object, name: str) -> float | None:
    return None if v is None else as_positive_float(v, name=name)  # type: ignore[arg-type]


def parse_run_config(raw: Mapping[str, object] | None) -> RunConfig:
    """
    Validate a run configuration mapping (parsed JSON).

    Unknown keys are rejected at every level; every missing field takes the
    default documented on :class:`RunConfig` and its sections.
    """
    top = _section(raw, "config", _TOP_KEYS)
    defaults = RunConfig.__dataclass_fields__

    g = _section(top.get("grid"), "grid", ("nx", "ny", "lx", "ly"))
    grid = GridSection(
        nx=as_count(g.get("nx", 128), name="grid.nx"),
        ny=_opt_int(g.get("ny"), "grid.ny"),
        lx=as_positive_float(g.get("lx", 2.0), name="grid.lx"),
        ly=_opt_float(g.get("ly"), "grid.ly"),
    )
    h = _section(top.get("history"), "history", ("mode", "tol"))
    history = HistorySection(
        mode=HistoryMode.parse(str(h.get("mode", "soe"))).value,
        tol=as_positive_float(h.get("tol", 1e-9), name="history.tol"),
    )
    i = _section(top.get("init"), "init", ("kind", "seed", "mean", "amplitude", "radius", "center"))
    center = i.get("center")
    if center is not None and not isinstance(center, (list, tuple)):
        raise ValueError(f"init.center must be [x, y] or null; got {center!r}.")
    init = InitSection(
        kind=str(i.get("kind", "random")),
        seed=i.get("seed", 42),
        mean=i.get("mean", 0.0),
        amplitude=i.get("amplitude", 0.05),
        radius=i.get("radius", 0.25),
        center=None if center is None else tuple(center),
    )
    o = _section(top.get("output"), "output", ("dir", "snapshot_every", "series_every"))
    output = OutputSection(
        dir=str(o.get("dir", "out")),
        snapshot_every=o.get("snapshot_every", 0),
        series_every=o.get("series_every", 10),
    )
    s = _section(
        top.get("solver"),
        "solver",
        ("krylov_tol", "krylov_maxiter", "krylov_restart", "dealias", "sink_every"),
    )
    dealias = s.get("dealias")
    if dealias is not None and not isinstance(dealias, bool):
        raise ValueError(f"solver.dealias must be true, false or null; got {dealias!r}.")
    solver = SolverSection(
        krylov_tol=as_positive_float(s.get("krylov_tol", 1e-10), name="solver.krylov_tol"),
        krylov_maxiter=as_count(s.get("krylov_maxiter", 400), name="solver.krylov_maxiter", minimum=1),
        krylov_restart=as_count(s.get("krylov_restart", 100), name="solver.krylov_restart", minimum=1),
        dealias=dealias,
        sink_every=as_count(s.get("sink_every", 1), name="solver.sink_every", minimum=1),
    )
    return RunConfig(
        alpha=as_fraction_order(top.get("alpha", defaults["alpha"].default), name="alpha"),
        epsilon=as_positive_float(top.get("epsilon", defaults["epsilon"].default), name="epsilon"),
        grid=grid,
        mobility=str(top.get("mobility", "constant")),
        dt=as_positive_float(top.get("dt", defaults["dt"].default), name="dt"),
        t_end=as_finite_float(top.get("t_end", defaults["t_end"].default), name="t_end"),
        stabilization=as_finite_float(
            top.get("stabilization", defaults["stabilization"].default), name="stabilization"
        ),
        history=history,
        init=init,
        output=output,
        solver=solver,
    )


def load_run_config(path: str | Path) -> RunConfig:
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno}).") from None
    return parse_run_config(raw)


__all__ = [
    "INIT_KINDS",
    "OUT_DIR_ENV",
    "GridSection",
    "HistorySection",
    "InitSection",
    "OutputSection",
    "RunConfig",
    "SolverSection",
    "load_run_config",
    "parse_run_config",
]
