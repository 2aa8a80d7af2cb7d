from __future__ import annotations

import math

import numpy as np

from ._typing import FloatArray


def as_finite_float(x: float, *, name: str) -> float:
    val = float(x)
    if not math.isfinite(val):
        raise ValueError(f"{name} must be finite; got {x!r}.")
    return val


def as_positive_float(x: float, *, name: str) -> float:
    val = as_finite_float(x, name=name)
    if val <= 0.0:
        raise ValueError(f"{name} must be > 0; got {val!r}.")
    return val


def as_nonnegative_float(x: float, *, name: str) -> float:
    val = as_finite_float(x, name=name)
    if val < 0.0:
        raise ValueError(f"{name} must be >= 0; got {val!r}.")
    return val


def as_fraction_order(x: float, *, name: str) -> float:
    val = as_finite_float(x, name=name)
    if not (0.0 < val <= 1.0):
        raise ValueError(f"{name} must lie in (0, 1]; got {val!r}.")
    return val


def as_count(x: int, *, name: str, minimum: int = 0) -> int:
    if isinstance(x, bool) or int(x) != x:
        raise ValueError(f"{name} must be an integer; got {x!r}.")
    val = int(x)
    if val < minimum:
        raise ValueError(f"{name} must be >= {minimum}; got {val}.")
    return val


def is_power_of_two(n: int) -> bool:
    return n > 0 and (n & (n - 1)) == 0


def as_1d_float(x: object, *, name: str) -> FloatArray:
    arr = np.asarray(x, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be 1D; got shape {arr.shape}.")
    if arr.size == 0:
        raise ValueError(f"{name} must be non-empty.")
    if not np.isfinite(arr).all():
        raise ValueError(f"{name} contains NaN or infinite values.")
    return arr


def as_2d_float(x: object, *, name: str, shape: tuple[int, int]) -> FloatArray:
    arr = np.asarray(x, dtype=np.float64)
    if arr.ndim == 1 and shape[0] == 1:
        arr = arr.reshape(1, -1)
    if arr.shape != shape:
        raise ValueError(f"{name} must have shape {shape}; got {arr.shape}.")
    if not np.isfinite(arr).all():
        raise ValueError(f"{name} contains NaN or infinite values.")
    return arr
