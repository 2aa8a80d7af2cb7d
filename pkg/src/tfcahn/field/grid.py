from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.fft import fftfreq, rfftfreq

from .._typing import BoolArray, ComplexArray, FloatArray
from .._validation import as_2d_float, as_count, as_positive_float, is_power_of_two


def _check_extent(n: int, *, name: str, allow_one: bool) -> int:
    n = as_count(n, name=name, minimum=1)
    if allow_one and n == 1:
        return n
    if n < 8 or not is_power_of_two(n):
        raise ValueError(f"{name} must be a power of two >= 8; got {n}.")
    return n


@dataclass(frozen=True)
class Grid2D:
    """
    Periodic rectangular grid on [0, lx) x [0, ly).

    Arrays on the grid have shape ``(ny, nx)`` (row-major, x fastest). A 1D
    run is a grid with ``ny = 1``, for which every y-wavenumber is zero.

    Spectral helpers come in two layouts: the full complex layout of
    ``scipy.fft.fft2`` (``kx``, ``ky``, ``k2``...) and the half layout of
    ``rfft2`` used by the time steppers (``rkx``, ``rky``, ``rk2``...).
    Odd-derivative wavenumbers (``*_odd``) have the Nyquist entry zeroed.
    """

    nx: int
    ny: int
    lx: float = 1.0
    ly: float = 1.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "nx", _check_extent(self.nx, name="nx", allow_one=False))
        object.__setattr__(self, "ny", _check_extent(self.ny, name="ny", allow_one=True))
        object.__setattr__(self, "lx", as_positive_float(self.lx, name="lx"))
        object.__setattr__(self, "ly", as_positive_float(self.ly, name="ly"))

    @classmethod
    def square(cls, n: int, length: float = 1.0) -> Grid2D:
        return cls(nx=n, ny=n, lx=length, ly=length)

    @classmethod
    def line(cls, n: int, length: float = 1.0) -> Grid2D:
        return cls(nx=n, ny=1, lx=length, ly=1.0)

    @property
    def dx(self) -> float:
        return self.lx / self.nx

    @property
    def dy(self) -> float:
        return self.ly / self.ny

    @property
    def shape(self) -> tuple[int, int]:
        return (self.ny, self.nx)

    @property
    def size(self) -> int:
        return self.nx * self.ny

    @property
    def area(self) -> float:
        return self.lx * self.ly

    @property
    def cell_area(self) -> float:
        return self.dx * self.dy

    @property
    def spacing(self) -> float:
        """max(dx, dy), ignoring the y direction of 1D grids."""
        return self.dx if self.ny == 1 else max(self.dx, self.dy)

    @property
    def is_1d(self) -> bool:
        return self.ny == 1

    @cached_property
    def x(self) -> FloatArray:
        return self.dx * np.arange(self.nx, dtype=np.float64)

    @cached_property
    def y(self) -> FloatArray:
        return self.dy * np.arange(self.ny, dtype=np.float64)

    @cached_property
    def mesh(self) -> tuple[FloatArray, FloatArray]:
        xx, yy = np.meshgrid(self.x, self.y, indexing="xy")
        return xx, yy

    # Full (fft2) layout -------------------------------------------------

    @cached_property
    def _full_k(self) -> tuple[FloatArray, FloatArray]:
        kx = 2.0 * np.pi * fftfreq(self.nx, d=self.dx)
        ky = 2.0 * np.pi * fftfreq(self.ny, d=self.dy) if self.ny > 1 else np.zeros(1)
        kxx, kyy = np.meshgrid(kx, ky, indexing="xy")
        return kxx, kyy

    @property
    def kx(self) -> FloatArray:
        return self._full_k[0]

    @property
    def ky(self) -> FloatArray:
        return self._full_k[1]

    @cached_property
    def k2(self) -> FloatArray:
        return self.kx**2 + self.ky**2

    @cached_property
    def kx_odd(self) -> FloatArray:
        k = self.kx.copy()
        k[:, self.nx // 2] = 0.0
        return k

    @cached_property
    def ky_odd(self) -> FloatArray:
        k = self.ky.copy()
        if self.ny > 1:
            k[self.ny // 2, :] = 0.0
        return k

    # Half (rfft2) layout ------------------------------------------------

    @property
    def spectral_shape(self) -> tuple[int, int]:
        return (self.ny, self.nx // 2 + 1)

    @cached_property
    def _half_k(self) -> tuple[FloatArray, FloatArray]:
        kx = 2.0 * np.pi * rfftfreq(self.nx, d=self.dx)
        ky = 2.0 * np.pi * fftfreq(self.ny, d=self.dy) if self.ny > 1 else np.zeros(1)
        kxx, kyy = np.meshgrid(kx, ky, indexing="xy")
        return kxx, kyy

    @property
    def rkx(self) -> FloatArray:
        return self._half_k[0]

    @property
    def rky(self) -> FloatArray:
        return self._half_k[1]

    @cached_property
    def rk2(self) -> FloatArray:
        return self.rkx**2 + self.rky**2

    @cached_property
    def rkx_odd(self) -> FloatArray:
        k = self.rkx.copy()
        k[:, -1] = 0.0
        return k

    @cached_property
    def rky_odd(self) -> FloatArray:
        k = self.rky.copy()
        if self.ny > 1:
            k[self.ny // 2, :] = 0.0
        return k

    @cached_property
    def dealias_mask(self) -> BoolArray:
        """2/3-rule mask in the half layout: keep |m_x| < nx/3 and |m_y| < ny/3."""
        mx = np.abs(np.rint(self.rkx * self.lx / (2.0 * np.pi)))
        my = np.abs(np.rint(self.rky * self.ly / (2.0 * np.pi)))
        mask: BoolArray = (mx < self.nx / 3.0) & (my < max(self.ny, 1) / 3.0)
        return mask


@dataclass(frozen=True)
class Field:
    """
    Real scalar field on a Grid2D.

    ``values`` has shape ``(ny, nx)``; a flat array of length nx*ny in
    row-major, x-fastest order is reshaped on construction. Values must be
    finite.
    """

    grid: Grid2D
    values: FloatArray

    def __post_init__(self) -> None:
        arr = np.asarray(self.values, dtype=np.float64)
        if arr.ndim == 1 and arr.size == self.grid.size:
            arr = arr.reshape(self.grid.shape)
        object.__setattr__(
            self, "values", as_2d_float(arr, name="values", shape=self.grid.shape)
        )

    @classmethod
    def constant(cls, grid: Grid2D, value: float) -> Field:
        return cls(grid=grid, values=np.full(grid.shape, float(value)))

    def with_values(self, values: FloatArray) -> Field:
        return Field(grid=self.grid, values=values)

    @property
    def mass(self) -> float:
        """Spatial mean (mass per unit area)."""
        return float(np.mean(self.values))

    @property
    def max_abs(self) -> float:
        return float(np.max(np.abs(self.values)))

    def integral(self) -> float:
        return float(np.sum(self.values) * self.grid.cell_area)


@dataclass(frozen=True)
class SpectrumField:
    """
    Full complex forward-transform coefficients of a field (unnormalized).
    """

    grid: Grid2D
    coefficients: ComplexArray

    def __post_init__(self) -> None:
        arr = np.asarray(self.coefficients, dtype=np.complex128)
        if arr.shape != self.grid.shape:
            raise ValueError(
                f"coefficients must have shape {self.grid.shape}; got {arr.shape}."
            )
        object.__setattr__(self, "coefficients", arr)

    @property
    def power(self) -> FloatArray:
        return np.abs(self.coefficients) ** 2
