from __future__ import annotations

import numpy as np
from scipy import fft as sfft

from .._typing import ComplexArray, FloatArray
from .grid import Field, Grid2D, SpectrumField

# Array-level operators (half-spectrum layout). Time steppers call these
# directly on raw arrays; the Field-level API below wraps them.


def forward(grid: Grid2D, values: FloatArray) -> ComplexArray:
    return sfft.rfft2(values, s=grid.shape)


def inverse(grid: Grid2D, coeffs: ComplexArray) -> FloatArray:
    return sfft.irfft2(coeffs, s=grid.shape)


def laplacian_array(grid: Grid2D, values: FloatArray) -> FloatArray:
    return inverse(grid, -grid.rk2 * forward(grid, values))


def gradient_arrays(grid: Grid2D, values: FloatArray) -> tuple[FloatArray, FloatArray]:
    vh = forward(grid, values)
    gx = inverse(grid, 1j * grid.rkx_odd * vh)
    gy = inverse(grid, 1j * grid.rky_odd * vh)
    return gx, gy


def divergence_hat(
    grid: Grid2D, gx: FloatArray, gy: FloatArray, *, dealias: bool = False
) -> ComplexArray:
    gxh = forward(grid, gx)
    gyh = forward(grid, gy)
    if dealias:
        gxh = gxh * grid.dealias_mask
        gyh = gyh * grid.dealias_mask
    return 1j * grid.rkx_odd * gxh + 1j * grid.rky_odd * gyh


def flux_div_hat(
    grid: Grid2D, m: FloatArray, mu_hat: ComplexArray, *, dealias: bool
) -> ComplexArray:
    """
    Spectrum of div(m grad mu) given mu in spectral space.
    """
    mux = inverse(grid, 1j * grid.rkx_odd * mu_hat)
    muy = inverse(grid, 1j * grid.rky_odd * mu_hat)
    return divergence_hat(grid, m * mux, m * muy, dealias=dealias)


def split_flux_div_hat(
    grid: Grid2D, m: FloatArray, m_ref: float, mu_hat: ComplexArray, *, dealias: bool
) -> ComplexArray:
    """
    Spectrum of div(m grad mu) split as -m_ref |k|^2 mu_hat plus
    div((m - m_ref) grad mu).

    The constant part acts on every mode. With ``dealias`` the variable part
    is filtered on both its input and its output, so the operator stays
    symmetric and, for m >= 0, negative semidefinite.
    """
    var_in = mu_hat * grid.dealias_mask if dealias else mu_hat
    return -m_ref * grid.rk2 * mu_hat + flux_div_hat(grid, m - m_ref, var_in, dealias=dealias)


def flux_div_array(
    grid: Grid2D, m: FloatArray, mu: FloatArray, *, dealias: bool
) -> FloatArray:
    return inverse(grid, flux_div_hat(grid, m, forward(grid, mu), dealias=dealias))


# Field-level operators ---------------------------------------------------


def _check_field(f: Field, grid: Grid2D | None = None) -> None:
    if f.values.shape != f.grid.shape:
        raise ValueError(
            f"field values have shape {f.values.shape}, grid expects {f.grid.shape}."
        )
    if grid is not None and f.grid != grid:
        raise ValueError("fields live on different grids.")


def dft_forward(f: Field) -> SpectrumField:
    """
    Unnormalized forward DFT in the full complex layout.
    """
    _check_field(f)
    return SpectrumField(grid=f.grid, coefficients=sfft.fft2(f.values))


def dft_inverse(spectrum: SpectrumField) -> Field:
    """
    Inverse DFT (divides by nx*ny); the imaginary part is discarded.
    """
    coeffs = spectrum.coefficients
    if coeffs.shape != spectrum.grid.shape:
        raise ValueError(
            f"coefficients have shape {coeffs.shape}, grid expects {spectrum.grid.shape}."
        )
    return Field(grid=spectrum.grid, values=sfft.ifft2(coeffs).real)


def laplacian(f: Field) -> Field:
    """Spectral Laplacian (multiplication by -|k|^2)."""
    _check_field(f)
    return f.with_values(laplacian_array(f.grid, f.values))


def gradient(f: Field) -> tuple[Field, Field]:
    _check_field(f)
    gx, gy = gradient_arrays(f.grid, f.values)
    return f.with_values(gx), f.with_values(gy)


def divergence(gx: Field, gy: Field) -> Field:
    _check_field(gx)
    _check_field(gy, gx.grid)
    return gx.with_values(inverse(gx.grid, divergence_hat(gx.grid, gx.values, gy.values)))


def variable_flux_div(m: Field, mu: Field, *, dealias: bool = False) -> Field:
    """
    div(m grad mu) with spectral derivatives and pointwise products.

    Parameters
    ----------
    m
        Mobility, pointwise >= 0. Clamping overshoots is the caller's job.
    mu
        Chemical potential.
    dealias
        Filter both flux products with the 2/3 rule.
    """
    _check_field(m)
    _check_field(mu, m.grid)
    if float(np.min(m.values)) < 0.0:
        raise ValueError("mobility m must be pointwise >= 0.")
    return m.with_values(flux_div_array(m.grid, m.values, mu.values, dealias=dealias))
