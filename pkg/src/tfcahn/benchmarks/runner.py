from __future__ import annotations

import logging
import time
from collections.abc import Callable
from typing import Any

import numpy as np

from .._typing import FloatArray
from ..fracops import FractionalOrder, l1_weights, soe_build, soe_far_history, soe_init, soe_push
from ..results import BenchmarkResult
from .dgp import RandomWalkHistory, random_walk_history

logger = logging.getLogger(__name__)


def _time(fn: Callable[..., Any], *args: Any, **kwargs: Any) -> tuple[float, Any]:
    start = time.perf_counter()
    out = fn(*args, **kwargs)
    return time.perf_counter() - start, out


def direct_derivatives(order: FractionalOrder, hist: RandomWalkHistory) -> FloatArray:
    """L1 derivative at t_1..t_n, re-summing the full history at every step."""
    n_steps = hist.n_steps
    rev = np.ascontiguousarray(hist.increments[::-1])
    w = l1_weights(order, n_steps).a
    c0 = order.l1_scale(hist.tau)
    out = np.empty((n_steps, hist.width), dtype=np.float64)
    for n in range(1, n_steps + 1):
        out[n - 1] = c0 * (w[:n] @ rev[n_steps - n :])
    return out


def soe_derivatives(
    order: FractionalOrder, hist: RandomWalkHistory, tol: float
) -> tuple[FloatArray, int]:
    """Same derivatives with the far history carried by SOE accumulators."""
    n_steps, tau = hist.n_steps, hist.tau
    kernel = soe_build(order, tau, max(n_steps * tau, 2.0 * tau), tol)
    c0 = order.l1_scale(tau)
    dv = hist.increments
    state = soe_init(kernel, (hist.width,))
    out = np.empty((n_steps, hist.width), dtype=np.float64)
    for n in range(n_steps):
        out[n] = c0 * dv[n] + np.asarray(soe_far_history(kernel, state))
        state = soe_push(kernel, state, dv[n], tau)
    return out, kernel.n_modes


def run_history_benchmark(
    alpha: float,
    n_steps: int,
    *,
    tol: float = 1e-9,
    width: int = 8,
    seed: int = 0,
) -> BenchmarkResult:
    """
    Time the direct O(N^2) and SOE O(N M) L1 histories on one random walk.

    Both paths see the same seeded history; ``max_rel_diff`` is the largest
    pointwise difference relative to the largest direct value.
    """
    order = FractionalOrder.of(alpha)
    if order.is_classical:
        raise ValueError("the history benchmark needs alpha < 1 (alpha = 1 has no memory).")
    hist = random_walk_history(n_steps=n_steps, width=width, seed=seed)
    t_direct, direct = _time(direct_derivatives, order, hist)
    t_soe, (fast, n_modes) = _time(soe_derivatives, order, hist, tol)
    scale = float(np.max(np.abs(direct)))
    diff = float(np.max(np.abs(direct - fast)))
    result = BenchmarkResult(
        alpha=order.alpha,
        n_steps=hist.n_steps,
        width=hist.width,
        tol=float(tol),
        n_modes=n_modes,
        direct_seconds=t_direct,
        soe_seconds=t_soe,
        max_rel_diff=diff / scale if scale > 0.0 else diff,
    )
    logger.info(
        "bench alpha=%.3g n=%d: direct %.3fs, soe %.3fs (%d modes), speedup %.1fx",
        result.alpha,
        result.n_steps,
        t_direct,
        t_soe,
        n_modes,
        result.speedup,
    )
    return result


if __name__ == "__main__":
    out = run_history_benchmark(0.5, 10_000)
    for k, v in out.as_dict().items():
        print(f"{k}: {v}")
