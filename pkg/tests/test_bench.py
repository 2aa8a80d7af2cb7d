import json

import numpy as np
import pytest

from tfcahn.benchmarks import (
    direct_derivatives,
    random_walk_history,
    run_history_benchmark,
    soe_derivatives,
)
from tfcahn.fracops import FractionalOrder, ScalarHistory, caputo_l1
from tfcahn.rng import SplitMix64


def test_random_walk_is_seeded_and_starts_at_zero() -> None:
    hist = random_walk_history(n_steps=50, width=3, seed=42)
    assert hist.values.shape == (51, 3)
    assert np.array_equal(hist.values[0], np.zeros(3))
    assert hist.tau == pytest.approx(1.0 / 50)
    first = 2.0 * SplitMix64(42).uniform(3) - 1.0
    assert np.array_equal(hist.increments[0], first)
    again = random_walk_history(n_steps=50, width=3, seed=42)
    assert np.array_equal(hist.values, again.values)


def test_direct_derivatives_match_scalar_l1() -> None:
    order = FractionalOrder(alpha=0.35)
    hist = random_walk_history(n_steps=40, width=2, seed=1)
    out = direct_derivatives(order, hist)
    for n in (1, 17, 40):
        scalar = ScalarHistory(values=hist.values[: n + 1, 1], tau=hist.tau)
        assert np.isclose(out[n - 1, 1], caputo_l1(order, scalar, hist.tau), rtol=1e-12)


def test_soe_derivatives_track_direct() -> None:
    order = FractionalOrder(alpha=0.6)
    hist = random_walk_history(n_steps=500, width=2, seed=3)
    direct = direct_derivatives(order, hist)
    fast, n_modes = soe_derivatives(order, hist, 1e-9)
    assert n_modes > 0
    assert np.max(np.abs(fast - direct)) <= 1e-6 * np.max(np.abs(direct))


def test_benchmark_result() -> None:
    res = run_history_benchmark(0.5, 400, width=2)
    assert res.n_steps == 400
    assert res.width == 2
    assert res.max_rel_diff <= 1e-6
    assert res.direct_seconds > 0.0
    payload = json.loads(res.to_json())
    assert payload["speedup"] == pytest.approx(res.speedup)
    with pytest.raises(ValueError, match="alpha < 1"):
        run_history_benchmark(1.0, 10)


@pytest.mark.slow
def test_soe_history_is_faster_at_scale() -> None:
    res = run_history_benchmark(0.5, 10_000, width=8)
    assert res.max_rel_diff <= 1e-6
    assert res.speedup > 1.0
