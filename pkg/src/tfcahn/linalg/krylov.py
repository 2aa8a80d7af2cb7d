from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
from scipy.sparse.linalg import LinearOperator, gmres

from .._typing import FloatArray

MatVec = Callable[[FloatArray], FloatArray]


@dataclass(frozen=True)
class KrylovResult:
    """
    Outcome of a preconditioned GMRES solve.

    ``residual`` is the relative residual of the returned iterate on the
    system actually solved (left-preconditioned when a preconditioner is
    given), recomputed after the solve.
    """

    x: FloatArray
    residual: float
    iterations: int
    converged: bool


def _as_operator(fn: MatVec, n: int) -> LinearOperator:
    return LinearOperator((n, n), matvec=fn, dtype=np.float64)


def _left_preconditioned(precond: MatVec, matvec: MatVec) -> MatVec:
    def op(v: FloatArray) -> FloatArray:
        return precond(matvec(v))

    return op


def relative_residual(matvec: MatVec, x: FloatArray, b: FloatArray) -> float:
    bnorm = float(np.linalg.norm(b))
    r = float(np.linalg.norm(b - matvec(x)))
    return r / bnorm if bnorm > 0.0 else r


def gmres_solve(
    matvec: MatVec,
    b: FloatArray,
    *,
    precond: MatVec | None = None,
    x0: FloatArray | None = None,
    tol: float = 1e-10,
    maxiter: int = 400,
    restart: int = 100,
) -> KrylovResult:
    """
    Solve A x = b with restarted GMRES on flat real vectors.

    With a preconditioner P the solve runs on the left-preconditioned system
    P A x = P b, and both the stopping test and the reported residual are
    ||P (b - A x)|| / ||P b||.

    Parameters
    ----------
    matvec
        Action of A on a flat vector.
    b
        Right-hand side (flat).
    precond
        Action of an approximate inverse of A, applied from the left.
    x0
        Initial guess; zeros by default.
    tol
        Relative residual target.
    maxiter
        Maximum number of inner iterations across all restarts.
    restart
        Krylov subspace size between restarts.
    """
    b = np.asarray(b, dtype=np.float64).ravel()
    n = b.size
    if float(np.linalg.norm(b)) == 0.0:
        return KrylovResult(x=np.zeros(n), residual=0.0, iterations=0, converged=True)

    op = matvec
    if precond is not None:
        op = _left_preconditioned(precond, matvec)
        b = np.asarray(precond(b), dtype=np.float64).ravel()

    A = _as_operator(op, n)
    count = [0]

    def _count(_: object) -> None:
        count[0] += 1

    restart = max(1, min(int(restart), n))
    x = np.zeros(n) if x0 is None else np.asarray(x0, dtype=np.float64).ravel()
    res = relative_residual(op, x, b)
    # gmres stops on its own residual estimate; restart from the iterate until
    # the recomputed residual meets tol or the iteration budget is spent.
    while res > tol and count[0] < maxiter:
        before = count[0]
        left = int(maxiter) - count[0]
        x, _info = gmres(
            A,
            b,
            x0=x,
            rtol=tol,
            atol=0.0,
            restart=min(restart, left),
            maxiter=max(1, -(-left // restart)),
            callback=_count,
            callback_type="pr_norm",
        )
        x = np.asarray(x, dtype=np.float64)
        res = relative_residual(op, x, b)
        if count[0] == before:
            break
    return KrylovResult(x=x, residual=res, iterations=count[0], converged=bool(res <= tol))


__all__ = ["KrylovResult", "MatVec", "gmres_solve", "relative_residual"]
