from __future__ import annotations

import numpy as np

from .._validation import as_positive_float
from ..field import Field
from ..model import Mobility, ModelParams


def _wavenumbers_sq(u: Field) -> np.ndarray:
    grid = u.grid
    kx = 2.0 * np.pi * np.fft.fftfreq(grid.nx, d=grid.lx / grid.nx)
    if grid.ny > 1:
        ky = 2.0 * np.pi * np.fft.fftfreq(grid.ny, d=grid.ly / grid.ny)
    else:
        ky = np.zeros(1)
    return ky[:, None] ** 2 + kx[None, :] ** 2


def classical_ch_step(u: Field, p: ModelParams, tau: float) -> Field:
    """
    One stabilized backward-Euler Cahn-Hilliard step with M = 1.

    (1 + tau (eps^2 k^4 + s k^2)) u^n = u^{n-1} + tau (s k^2 u^{n-1} - k^2 F'(u^{n-1}))

    Written against numpy.fft with its own wavenumbers so it shares no code
    with the fractional stepper.
    """
    if p.mobility is not Mobility.CONSTANT:
        raise ValueError("classical_ch_step requires constant mobility.")
    tau = as_positive_float(tau, name="tau")
    k2 = _wavenumbers_sq(u)
    v = u.values
    vh = np.fft.fft2(v)
    fh = np.fft.fft2(v**3 - v)
    s = p.stabilization
    num = vh + tau * (s * k2 * vh - k2 * fh)
    den = 1.0 + tau * (p.epsilon**2 * k2**2 + s * k2)
    return u.with_values(np.fft.ifft2(num / den).real)


__all__ = ["classical_ch_step"]
