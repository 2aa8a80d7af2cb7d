from __future__ import annotations


class TFCahnError(Exception):
    """Base class for tfcahn errors that are not plain argument errors."""


class UndefinedLengthError(TFCahnError, ValueError):
    """A characteristic length is undefined (spatially constant field)."""


class InsufficientDataError(TFCahnError, ValueError):
    """Too few samples, points or snapshots for the requested estimate."""


class InterfaceGeometryError(TFCahnError, ValueError):
    """The interface is missing, unresolved, or too close to the boundary."""


class SOEConstructionError(TFCahnError, ValueError):
    """A sum-of-exponentials kernel could not reach the requested tolerance."""

    def __init__(self, message: str, *, achieved_error: float, n_modes: int) -> None:
        super().__init__(message)
        self.achieved_error = achieved_error
        self.n_modes = n_modes


class SimulationError(TFCahnError, RuntimeError):
    """Numerical failure while advancing a simulation."""

    def __init__(
        self, message: str, *, step_index: int | None = None, t: float | None = None
    ) -> None:
        super().__init__(message)
        self.step_index = step_index
        self.t = t

    def at_time(self, t: float) -> SimulationError:
        self.t = t
        return self

    def __str__(self) -> str:
        base = super().__str__()
        if self.t is None:
            return base
        return f"{base} (t={self.t:.6g})"


class DivergenceError(SimulationError):
    """The solution developed non-finite values."""


class KrylovConvergenceError(SimulationError):
    """The Krylov solve of a degenerate-mobility step did not converge."""

    def __init__(
        self,
        message: str,
        *,
        residual: float,
        iterations: int,
        step_index: int | None = None,
    ) -> None:
        super().__init__(message, step_index=step_index)
        self.residual = residual
        self.iterations = iterations


__all__ = [
    "DivergenceError",
    "InsufficientDataError",
    "InterfaceGeometryError",
    "KrylovConvergenceError",
    "SOEConstructionError",
    "SimulationError",
    "TFCahnError",
    "UndefinedLengthError",
]
