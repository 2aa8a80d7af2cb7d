from __future__ import annotations

from .dgp import RandomWalkHistory, random_walk_history
from .runner import direct_derivatives, run_history_benchmark, soe_derivatives

__all__ = [
    "RandomWalkHistory",
    "direct_derivatives",
    "random_walk_history",
    "run_history_benchmark",
    "soe_derivatives",
]
