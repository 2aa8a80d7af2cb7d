from __future__ import annotations

import numpy as np

from ._typing import FloatArray
from ._validation import as_positive_float
from .config import InitSection
from .field import Field, Grid2D
from .oracle.profile import SQRT2
from .rng import SplitMix64


def _periodic_offset(x: FloatArray, c: float, length: float) -> FloatArray:
    d = (x - c) % length
    return np.minimum(d, length - d)


def _center(init: InitSection, grid: Grid2D) -> tuple[float, float]:
    if init.center is None:
        return 0.5 * grid.lx, 0.5 * grid.ly
    return init.center


def random_field(grid: Grid2D, *, seed: int, mean: float, amplitude: float) -> Field:
    """u = mean + amplitude * (2 xi - 1), one SplitMix64 draw per cell, row-major."""
    xi = SplitMix64(seed).uniform(grid.size).reshape(grid.shape)
    return Field(grid=grid, values=mean + amplitude * (2.0 * xi - 1.0))


def circle_field(
    grid: Grid2D, *, radius: float, center: tuple[float, float], epsilon: float
) -> Field:
    """+1 disk in a -1 matrix with a tanh rim; distances use the nearest periodic image."""
    xx, yy = grid.mesh
    dx = _periodic_offset(xx, center[0], grid.lx)
    dy = _periodic_offset(yy, center[1], grid.ly) if not grid.is_1d else 0.0 * yy
    r = np.hypot(dx, dy)
    return Field(grid=grid, values=np.tanh((radius - r) / (SQRT2 * epsilon)))


def stripe_field(
    grid: Grid2D, *, half_width: float, center: float, epsilon: float
) -> Field:
    """+1 band |x - center| < half_width with two tanh interfaces, constant in y."""
    xx, _ = grid.mesh
    d = _periodic_offset(xx, center, grid.lx)
    return Field(grid=grid, values=np.tanh((half_width - d) / (SQRT2 * epsilon)))


def init_field(init: InitSection, grid: Grid2D, *, epsilon: float) -> Field:
    """Initial condition described by ``init`` on ``grid``."""
    epsilon = as_positive_float(epsilon, name="epsilon")
    if init.kind == "random":
        return random_field(grid, seed=init.seed, mean=init.mean, amplitude=init.amplitude)
    center = _center(init, grid)
    if init.kind == "circle":
        return circle_field(grid, radius=init.radius, center=center, epsilon=epsilon)
    if init.kind == "tanh1d":
        return stripe_field(grid, half_width=init.radius, center=center[0], epsilon=epsilon)
    raise ValueError(f"unknown init kind {init.kind!r}.")


__all__ = ["circle_field", "init_field", "random_field", "stripe_field"]
