from __future__ import annotations

from .config import DEFAULT_BOUND, MAX_KRYLOV_TOL, HistoryMode, SchemeConfig
from .history import HistoryStore
from .run import Sink, init_state, run
from .schemes import step, step_constant, step_degenerate
from .state import SolverState

__all__ = [
    "DEFAULT_BOUND",
    "MAX_KRYLOV_TOL",
    "HistoryMode",
    "HistoryStore",
    "SchemeConfig",
    "Sink",
    "SolverState",
    "init_state",
    "run",
    "step",
    "step_constant",
    "step_degenerate",
]
