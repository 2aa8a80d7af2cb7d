from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from ._typing import FloatArray
from ._validation import as_nonnegative_float, as_positive_float
from .field import Field, Grid2D, gradient, laplacian
from .fracops import FractionalOrder
from .utils.warnings import WarningCategory, warn

# Resolution guard: epsilon >= RESOLUTION_CELLS * max(dx, dy).
RESOLUTION_CELLS = 2.0
DEFAULT_STABILIZATION = 2.0


class Mobility(str, Enum):
    CONSTANT = "constant"
    ONE_SIDED = "one_sided"

    @classmethod
    def parse(cls, value: Mobility | str) -> Mobility:
        if isinstance(value, Mobility):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise ValueError(
                f"mobility must be 'constant' or 'one_sided'; got {value!r}."
            ) from None


@dataclass(frozen=True)
class ModelParams:
    """
    Constitutive parameters of the time-fractional Cahn-Hilliard model.

    Parameters
    ----------
    epsilon
        Interface width, > 0.
    mobility
        Constant (M = 1) or one-sided degenerate (M = max(1 + u, 0)).
    stabilization
        Linear stabilization constant s >= 0; the default 2 bounds |F''| on
        [-1, 1].
    alpha
        Caputo order in (0, 1].
    """

    epsilon: float
    mobility: Mobility = Mobility.CONSTANT
    stabilization: float = DEFAULT_STABILIZATION
    alpha: FractionalOrder | float = 1.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "epsilon", as_positive_float(self.epsilon, name="epsilon"))
        object.__setattr__(self, "mobility", Mobility.parse(self.mobility))
        object.__setattr__(
            self,
            "stabilization",
            as_nonnegative_float(self.stabilization, name="stabilization"),
        )
        object.__setattr__(self, "alpha", FractionalOrder.of(self.alpha))

    @property
    def order(self) -> FractionalOrder:
        assert isinstance(self.alpha, FractionalOrder)
        return self.alpha

    def is_resolved(self, grid: Grid2D) -> bool:
        return self.epsilon >= RESOLUTION_CELLS * grid.spacing

    def check_resolution(self, grid: Grid2D) -> bool:
        """Warn (not raise) when the interface is under-resolved on ``grid``."""
        ok = self.is_resolved(grid)
        if not ok:
            warn(
                WarningCategory.UNDER_RESOLVED,
                f"epsilon={self.epsilon:.4g} < {RESOLUTION_CELLS:g}*max(dx, dy)"
                f"={RESOLUTION_CELLS * grid.spacing:.4g}; interfaces are under-resolved.",
            )
        return ok


@dataclass(frozen=True)
class EnergyValue:
    total: float
    per_area: float


def potential(u: FloatArray | float) -> FloatArray | float:
    """Double well F(u) = (u^2 - 1)^2 / 4."""
    uu = np.asarray(u, dtype=np.float64)
    out = 0.25 * (uu * uu - 1.0) ** 2
    return float(out) if out.ndim == 0 else out


def potential_deriv(u: FloatArray | float) -> FloatArray | float:
    """F'(u) = u^3 - u."""
    uu = np.asarray(u, dtype=np.float64)
    out = uu * uu * uu - uu
    return float(out) if out.ndim == 0 else out


def mobility_array(u: FloatArray, kind: Mobility | str) -> FloatArray:
    kind = Mobility.parse(kind)
    if kind is Mobility.CONSTANT:
        return np.ones_like(u, dtype=np.float64)
    # Overshoots below -1 are clamped to zero mobility.
    return np.maximum(1.0 + u, 0.0)


def mobility(u: Field, kind: Mobility | str) -> Field:
    return u.with_values(mobility_array(u.values, kind))


def chemical_potential(u: Field, p: ModelParams) -> Field:
    """mu = -epsilon^2 * laplacian(u) + F'(u)."""
    lap = laplacian(u).values
    return u.with_values(-(p.epsilon**2) * lap + np.asarray(potential_deriv(u.values)))


def energy(u: Field, p: ModelParams) -> EnergyValue:
    """
    Discrete Ginzburg-Landau energy sum[(eps^2/2)|grad u|^2 + F(u)] dx dy.

    The gradient is spectral, so the gradient term equals the Parseval sum
    of |k|^2 |u_k|^2 (up to the Nyquist mode, which carries no gradient).
    """
    gx, gy = gradient(u)
    density = 0.5 * p.epsilon**2 * (gx.values**2 + gy.values**2) + np.asarray(
        potential(u.values)
    )
    total = float(np.sum(density) * u.grid.cell_area)
    return EnergyValue(total=total, per_area=total / u.grid.area)


__all__ = [
    "DEFAULT_STABILIZATION",
    "RESOLUTION_CELLS",
    "EnergyValue",
    "Mobility",
    "ModelParams",
    "chemical_potential",
    "energy",
    "mobility",
    "mobility_array",
    "potential",
    "potential_deriv",
]
