from __future__ import annotations

import logging

import numpy as np

from .._typing import ComplexArray, FloatArray
from ..errors import DivergenceError, KrylovConvergenceError
from ..field import Field
from ..field.spectral import forward, inverse, split_flux_div_hat
from ..linalg import gmres_solve
from ..model import Mobility, mobility_array
from .state import SolverState

logger = logging.getLogger(__name__)


def _finish(state: SolverState, u_new: FloatArray) -> SolverState:
    n = state.step_index + 1
    if not np.isfinite(u_new).all():
        raise DivergenceError(
            f"non-finite values at step {n}.", step_index=n, t=n * state.tau
        )
    grid = state.grid
    state.history.push(forward(grid, u_new))
    return state.advanced(Field(grid=grid, values=u_new))


def _explicit_terms(state: SolverState) -> tuple[FloatArray, ComplexArray, ComplexArray]:
    u_prev = state.u_current.values
    uh_prev = state.history.last
    fprime = u_prev * u_prev * u_prev - u_prev
    return fprime, uh_prev, state.history.history_term()


def step_constant(state: SolverState) -> SolverState:
    """
    One L1 step with constant mobility, solved mode by mode.

    (c0 + eps^2 k^4 + s k^2) u^n = c0 u^{n-1} - H^n - k^2 F'(u^{n-1}) + s k^2 u^{n-1}
    """
    p = state.params
    if p.mobility is not Mobility.CONSTANT:
        raise ValueError("step_constant requires constant mobility.")
    grid = state.grid
    c0 = state.history.c0
    k2 = grid.rk2
    s = p.stabilization
    fprime, uh_prev, h = _explicit_terms(state)

    denom = c0 + p.epsilon**2 * k2 * k2 + s * k2
    uh = (c0 * uh_prev - h - k2 * forward(grid, fprime) + s * k2 * uh_prev) / denom
    return _finish(state, inverse(grid, uh))


def step_degenerate(state: SolverState) -> SolverState:
    """
    One L1 step with one-sided mobility frozen at M = max(1 + u^{n-1}, 0).

    Solves

        c0 u^n - div(M grad(-eps^2 lap u^n + s u^n))
            = c0 u^{n-1} - H^n + div(M grad(F'(u^{n-1}) - s u^{n-1}))

    with GMRES, preconditioned by the inverse of the constant-coefficient
    operator c0 + mean(M) (eps^2 k^4 + s k^2). The flux is split into that
    mean-mobility part, applied on every mode, and the variable remainder,
    which is the only product that gets dealiased. The mean decouples from
    the flux term and is set from the k = 0 equation directly.

    Raises
    ------
    KrylovConvergenceError
        If the preconditioned relative residual stays above ``krylov_tol``.
    """
    p = state.params
    if p.mobility is not Mobility.ONE_SIDED:
        raise ValueError("step_degenerate requires one-sided mobility.")
    cfg = state.config
    grid = state.grid
    n = state.step_index + 1
    c0 = state.history.c0
    k2 = grid.rk2
    s = p.stabilization
    eps2 = p.epsilon**2
    dealias = cfg.dealias_for(p.mobility)

    u_prev = state.u_current.values
    fprime, uh_prev, h = _explicit_terms(state)
    m = mobility_array(u_prev, Mobility.ONE_SIDED)
    m0 = float(np.mean(m))

    def flux(mu_hat: ComplexArray) -> ComplexArray:
        return split_flux_div_hat(grid, m, m0, mu_hat, dealias=dealias)

    rhs_hat = c0 * uh_prev - h + flux(forward(grid, fprime - s * u_prev))
    mean_new = float(rhs_hat[0, 0].real) / (c0 * grid.size)
    b = inverse(grid, rhs_hat).ravel()

    lin = eps2 * k2 + s
    shape = grid.shape

    def matvec(x: FloatArray) -> FloatArray:
        v = x.reshape(shape)
        return (c0 * v - inverse(grid, flux(lin * forward(grid, v)))).ravel()

    precond_denom = c0 + m0 * k2 * lin

    def precond(r: FloatArray) -> FloatArray:
        return inverse(grid, forward(grid, r.reshape(shape)) / precond_denom).ravel()

    result = gmres_solve(
        matvec,
        b,
        precond=precond,
        x0=u_prev.ravel(),
        tol=cfg.krylov_tol,
        maxiter=cfg.krylov_maxiter,
        restart=cfg.krylov_restart,
    )
    if not result.converged:
        raise KrylovConvergenceError(
            f"GMRES stalled at relative residual {result.residual:.3e} after "
            f"{result.iterations} iterations (step {n}).",
            residual=result.residual,
            iterations=result.iterations,
            step_index=n,
        )
    logger.debug("step %d: gmres %d iterations, residual %.2e", n, result.iterations, result.residual)
    u_new = result.x.reshape(shape)
    u_new = u_new + (mean_new - float(np.mean(u_new)))
    return _finish(state, u_new)


def step(state: SolverState) -> SolverState:
    """Dispatch on the mobility law."""
    if state.params.mobility is Mobility.CONSTANT:
        return step_constant(state)
    return step_degenerate(state)


__all__ = ["step", "step_constant", "step_degenerate"]
