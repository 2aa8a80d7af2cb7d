import numpy as np
import pytest

from tfcahn import Field, Grid2D
from tfcahn._validation import (
    as_1d_float,
    as_count,
    as_fraction_order,
    as_nonnegative_float,
    as_positive_float,
    is_power_of_two,
)


def test_scalar_validators_reject_bad_values() -> None:
    with pytest.raises(ValueError, match="tau must be finite"):
        as_positive_float(float("nan"), name="tau")
    with pytest.raises(ValueError, match="epsilon must be > 0"):
        as_positive_float(0.0, name="epsilon")
    with pytest.raises(ValueError, match="s must be >= 0"):
        as_nonnegative_float(-1e-3, name="s")
    with pytest.raises(ValueError, match=r"alpha must lie in \(0, 1\]"):
        as_fraction_order(0.0, name="alpha")
    assert as_fraction_order(1, name="alpha") == 1.0


def test_count_validation() -> None:
    assert as_count(3.0, name="n", minimum=1) == 3  # type: ignore[arg-type]
    with pytest.raises(ValueError, match="n must be an integer"):
        as_count(True, name="n")
    with pytest.raises(ValueError, match="n must be an integer"):
        as_count(2.5, name="n")  # type: ignore[arg-type]
    with pytest.raises(ValueError, match="n must be >= 1"):
        as_count(0, name="n", minimum=1)


def test_power_of_two() -> None:
    assert [n for n in range(20) if is_power_of_two(n)] == [1, 2, 4, 8, 16]


def test_array_validation() -> None:
    with pytest.raises(ValueError, match="contains NaN"):
        as_1d_float([1.0, np.nan], name="v")
    with pytest.raises(ValueError, match="must be non-empty"):
        as_1d_float([], name="v")
    with pytest.raises(ValueError, match="must be 1D"):
        as_1d_float(np.ones((2, 2)), name="v")


def test_field_rejects_nan_and_wrong_shape() -> None:
    g = Grid2D.square(8)
    values = np.zeros((8, 8))
    values[1, 2] = np.inf
    with pytest.raises(ValueError, match="contains NaN"):
        Field(grid=g, values=values)
    with pytest.raises(ValueError, match=r"must have shape \(8, 8\)"):
        Field(grid=g, values=np.zeros((8, 9)))
