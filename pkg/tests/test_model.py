import numpy as np
import pytest

from tfcahn import Field, Grid2D, Mobility, ModelParams, chemical_potential, energy
from tfcahn.initial import stripe_field
from tfcahn.model import mobility, mobility_array, potential, potential_deriv
from tfcahn.oracle import PROFILE_S
from tfcahn.utils.warnings import TFCahnWarning


def test_potential_and_derivative() -> None:
    assert potential(1.0) == 0.0
    assert potential(-1.0) == 0.0
    assert potential(0.0) == 0.25
    assert np.isclose(potential_deriv(0.5), -0.375)
    u = np.linspace(-1.5, 1.5, 7)
    assert np.allclose(potential_deriv(u), u**3 - u)


def test_mobility_laws() -> None:
    u = np.array([-1.5, -1.0, 0.0, 1.0])
    assert np.array_equal(mobility_array(u, "one_sided"), [0.0, 0.0, 1.0, 2.0])
    assert np.array_equal(mobility_array(u, Mobility.CONSTANT), np.ones(4))
    g = Grid2D.square(8)
    assert mobility(Field.constant(g, -2.0), "one_sided").max_abs == 0.0


def test_mobility_parse() -> None:
    assert Mobility.parse("constant") is Mobility.CONSTANT
    assert Mobility.parse(Mobility.ONE_SIDED) is Mobility.ONE_SIDED
    with pytest.raises(ValueError, match="mobility must be"):
        Mobility.parse("degenerate")


def test_model_params_validation() -> None:
    with pytest.raises(ValueError, match="epsilon must be > 0"):
        ModelParams(epsilon=0.0)
    with pytest.raises(ValueError, match="stabilization must be >= 0"):
        ModelParams(epsilon=0.1, stabilization=-1.0)
    p = ModelParams(epsilon=0.1, mobility="one_sided", alpha=0.5)  # type: ignore[arg-type]
    assert p.mobility is Mobility.ONE_SIDED
    assert p.order.alpha == 0.5


def test_resolution_guard_warns() -> None:
    p = ModelParams(epsilon=0.01)
    with pytest.warns(TFCahnWarning, match="under_resolved"):
        assert not p.check_resolution(Grid2D.square(64, 1.0))
    assert ModelParams(epsilon=0.05).is_resolved(Grid2D.square(64, 1.0))


def test_chemical_potential_of_flat_profile_vanishes() -> None:
    g = Grid2D.line(256, 1.0)
    p = ModelParams(epsilon=0.02)
    u = stripe_field(g, half_width=0.25, center=0.5, epsilon=p.epsilon)
    mu = chemical_potential(u, p)
    assert np.max(np.abs(mu.values)) < 1e-3


def test_energy_of_stripe_is_two_line_tensions() -> None:
    g = Grid2D.line(512, 1.0)
    p = ModelParams(epsilon=0.02)
    u = stripe_field(g, half_width=0.25, center=0.5, epsilon=p.epsilon)
    e = energy(u, p)
    assert np.isclose(e.total, 2.0 * PROFILE_S * p.epsilon, rtol=1e-3)
    assert np.isclose(e.per_area, e.total / g.area)


def test_energy_of_pure_phase_is_zero() -> None:
    g = Grid2D.square(16)
    assert abs(energy(Field.constant(g, 1.0), ModelParams(epsilon=0.1)).total) < 1e-20
    assert np.isclose(energy(Field.constant(g, 0.0), ModelParams(epsilon=0.1)).per_area, 0.25)
