from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .._typing import FloatArray
from .._validation import as_count, as_positive_float
from ..rng import SplitMix64


@dataclass(frozen=True)
class RandomWalkHistory:
    """
    ``values[n]`` is the state at t_n = n * tau; ``values[0]`` is zero.
    """

    values: FloatArray
    tau: float

    @property
    def n_steps(self) -> int:
        return int(self.values.shape[0] - 1)

    @property
    def width(self) -> int:
        return int(self.values.shape[1])

    @property
    def increments(self) -> FloatArray:
        return np.diff(self.values, axis=0)


def random_walk_history(
    *, n_steps: int, width: int = 8, tau: float | None = None, seed: int = 0
) -> RandomWalkHistory:
    """
    ``width`` independent random walks with uniform steps in [-1, 1).

    Draws come from SplitMix64 in (step, component) row-major order, so a
    given seed reproduces the history on every platform. ``tau`` defaults to
    1 / n_steps (unit horizon).
    """
    n_steps = as_count(n_steps, name="n_steps", minimum=1)
    width = as_count(width, name="width", minimum=1)
    tau = 1.0 / n_steps if tau is None else as_positive_float(tau, name="tau")
    steps = 2.0 * SplitMix64(seed).uniform(n_steps * width) - 1.0
    values = np.zeros((n_steps + 1, width), dtype=np.float64)
    values[1:] = np.cumsum(steps.reshape(n_steps, width), axis=0)
    return RandomWalkHistory(values=values, tau=tau)


__all__ = ["RandomWalkHistory", "random_walk_history"]
