from __future__ import annotations

from dataclasses import dataclass, replace

from ..field import Field, Grid2D
from ..model import ModelParams
from .config import SchemeConfig
from .history import HistoryStore


@dataclass(frozen=True)
class SolverState:
    """
    Snapshot of a running simulation after ``step_index`` steps.

    ``history`` is shared with (and advanced by) the state returned from the
    next step; keep only the newest state of a run.
    """

    u_current: Field
    history: HistoryStore
    step_index: int
    tau: float
    params: ModelParams
    config: SchemeConfig

    @property
    def grid(self) -> Grid2D:
        return self.u_current.grid

    @property
    def t(self) -> float:
        return self.step_index * self.tau

    def advanced(self, u: Field) -> SolverState:
        return replace(self, u_current=u, step_index=self.step_index + 1)


__all__ = ["SolverState"]
