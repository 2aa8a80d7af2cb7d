import numpy as np
import pytest

from tfcahn.field import (
    Field,
    Grid2D,
    SpectrumField,
    dft_forward,
    dft_inverse,
    divergence,
    gradient,
    laplacian,
    variable_flux_div,
)
from tfcahn.field.spectral import flux_div_array, forward, inverse, split_flux_div_hat
from tfcahn.initial import random_field


def _field(grid: Grid2D, fn) -> Field:  # type: ignore[no-untyped-def]
    xx, yy = grid.mesh
    return Field(grid=grid, values=fn(xx, yy))


def test_grid_validation() -> None:
    with pytest.raises(ValueError, match="power of two"):
        Grid2D(nx=12, ny=16)
    with pytest.raises(ValueError, match="power of two"):
        Grid2D(nx=4, ny=4)
    with pytest.raises(ValueError, match="lx must be > 0"):
        Grid2D(nx=8, ny=8, lx=0.0)
    line = Grid2D.line(64, 2.0)
    assert line.is_1d
    assert line.shape == (1, 64)
    assert np.isclose(line.dx, 2.0 / 64)


def test_field_rejects_nan_and_bad_shape() -> None:
    g = Grid2D.square(8)
    with pytest.raises(ValueError, match="NaN"):
        Field(grid=g, values=np.full((8, 8), np.nan))
    with pytest.raises(ValueError, match="shape"):
        Field(grid=g, values=np.zeros((8, 4)))
    flat = Field(grid=g, values=np.arange(64.0))
    assert flat.values.shape == (8, 8)
    assert flat.values[1, 0] == 8.0


def test_dft_cosine_has_two_coefficients() -> None:
    g = Grid2D(nx=16, ny=8, lx=3.0, ly=1.0)
    u = _field(g, lambda x, y: np.cos(2.0 * np.pi * x / g.lx))
    coeffs = dft_forward(u).coefficients
    nonzero = np.argwhere(np.abs(coeffs) > 1e-9)
    assert sorted(map(tuple, nonzero)) == [(0, 1), (0, 15)]
    assert np.isclose(coeffs[0, 1].real, 0.5 * g.size)


def test_dft_roundtrip_and_parseval() -> None:
    g = Grid2D(nx=32, ny=16, lx=1.0, ly=0.5)
    u = random_field(g, seed=1, mean=0.2, amplitude=0.7)
    spec = dft_forward(u)
    assert np.allclose(dft_inverse(spec).values, u.values, rtol=0.0, atol=1e-14)
    assert np.isclose(spec.power.sum(), g.size * np.sum(u.values**2), rtol=1e-12)


def test_spectrum_shape_checked() -> None:
    with pytest.raises(ValueError, match="coefficients must have shape"):
        SpectrumField(grid=Grid2D.square(8), coefficients=np.zeros((4, 4)))


def test_laplacian_eigenfunctions() -> None:
    g = Grid2D(nx=32, ny=32, lx=2.0, ly=1.0)
    kx, ky = 2.0 * np.pi / g.lx, 4.0 * np.pi / g.ly
    u = _field(g, lambda x, y: np.sin(kx * x) + np.sin(ky * y))
    expected = -(kx**2) * np.sin(kx * g.mesh[0]) - ky**2 * np.sin(ky * g.mesh[1])
    assert np.allclose(laplacian(u).values, expected, atol=1e-10)


def test_gradient_of_sine() -> None:
    g = Grid2D.square(32, 1.0)
    u = _field(g, lambda x, y: np.sin(2.0 * np.pi * x))
    gx, gy = gradient(u)
    assert np.allclose(gx.values, 2.0 * np.pi * np.cos(2.0 * np.pi * g.mesh[0]), atol=1e-10)
    assert np.allclose(gy.values, 0.0, atol=1e-10)


def test_divergence_of_gradient_is_laplacian() -> None:
    g = Grid2D(nx=32, ny=16, lx=1.0, ly=0.5)
    u = _field(g, lambda x, y: np.sin(2 * np.pi * x) * np.cos(8 * np.pi * y) + np.cos(6 * np.pi * x))
    assert np.allclose(divergence(*gradient(u)).values, laplacian(u).values, atol=1e-9)


def test_divergence_of_gradient_is_laplacian_without_nyquist_modes() -> None:
    g = Grid2D.square(64)
    coeffs = dft_forward(random_field(g, seed=9, mean=0.1, amplitude=1.0)).coefficients.copy()
    coeffs[g.ny // 2, :] = 0.0
    coeffs[:, g.nx // 2] = 0.0
    u = dft_inverse(SpectrumField(grid=g, coefficients=coeffs))
    lap = laplacian(u).values
    err = np.max(np.abs(divergence(*gradient(u)).values - lap))
    assert err <= 1e-12 * np.max(np.abs(lap))


def test_variable_flux_div_conserves_mass() -> None:
    g = Grid2D.square(32, 1.0)
    m = _field(g, lambda x, y: 1.0 + 0.5 * np.sin(2.0 * np.pi * x))
    mu = _field(g, lambda x, y: np.cos(2.0 * np.pi * x))
    out = variable_flux_div(m, mu)
    assert abs(out.integral()) < 1e-10
    assert abs(variable_flux_div(m, mu, dealias=True).integral()) < 1e-10


def test_variable_flux_div_unit_mobility_is_laplacian() -> None:
    g = Grid2D.square(32, 1.0)
    mu = _field(g, lambda x, y: np.sin(2 * np.pi * x) * np.sin(4 * np.pi * y))
    one = Field.constant(g, 1.0)
    assert np.allclose(variable_flux_div(one, mu).values, laplacian(mu).values, atol=1e-9)


def test_split_flux_operator_is_symmetric_and_dissipative() -> None:
    g = Grid2D.square(32)
    m = np.maximum(1.0 + random_field(g, seed=3, mean=0.0, amplitude=1.5).values, 0.0)
    a = random_field(g, seed=4, mean=0.0, amplitude=1.0).values
    b = random_field(g, seed=5, mean=0.0, amplitude=1.0).values

    def apply(v: np.ndarray, dealias: bool) -> np.ndarray:
        return inverse(g, split_flux_div_hat(g, m, float(m.mean()), forward(g, v), dealias=dealias))

    assert np.allclose(apply(b, False), flux_div_array(g, m, b, dealias=False), atol=1e-9)
    ab = np.sum(a * apply(b, True))
    assert np.isclose(ab, np.sum(apply(a, True) * b), rtol=1e-9)
    assert np.sum(a * apply(a, True)) < 0.0


def test_variable_flux_div_rejects_negative_mobility() -> None:
    g = Grid2D.square(8)
    with pytest.raises(ValueError, match=">= 0"):
        variable_flux_div(Field.constant(g, -0.1), Field.constant(g, 0.0))


def test_operators_reject_mixed_grids() -> None:
    a = Field.constant(Grid2D.square(8), 1.0)
    b = Field.constant(Grid2D.square(16), 1.0)
    with pytest.raises(ValueError, match="different grids"):
        divergence(a, b)


def test_one_dimensional_grid_operators() -> None:
    g = Grid2D.line(64, 1.0)
    u = _field(g, lambda x, y: np.cos(4.0 * np.pi * x))
    assert np.allclose(laplacian(u).values, -(4.0 * np.pi) ** 2 * u.values, atol=1e-9)
    _, gy = gradient(u)
    assert np.all(gy.values == 0.0)
