from __future__ import annotations

from .grid import Field, Grid2D, SpectrumField
from .spectral import (
    dft_forward,
    dft_inverse,
    divergence,
    gradient,
    laplacian,
    variable_flux_div,
)

__all__ = [
    "Field",
    "Grid2D",
    "SpectrumField",
    "dft_forward",
    "dft_inverse",
    "divergence",
    "gradient",
    "laplacian",
    "variable_flux_div",
]
