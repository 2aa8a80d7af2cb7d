from __future__ import annotations

from .krylov import KrylovResult, MatVec, gmres_solve, relative_residual

__all__ = ["KrylovResult", "MatVec", "gmres_solve", "relative_residual"]
