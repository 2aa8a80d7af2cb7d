from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.special import gamma as gamma_fn
from scipy.special import roots_jacobi

from .._typing import FloatArray
from .._validation import as_positive_float
from ..errors import SOEConstructionError
from .order import FractionalOrder

logger = logging.getLogger(__name__)

# Mode budget: n_modes <= SOE_MODE_CONSTANT * max(1, ln(t_max/t_min)) * ln(1/tol).
SOE_MODE_CONSTANT = 6.0
SOE_PRUNE_RTOL = 1e-18
SOE_CHECK_POINTS = 4096

_TOL_RANGE = (1e-12, 1e-3)
_MAX_PANEL_ORDER = 48


@dataclass(frozen=True)
class SOEKernel:
    """
    Sum-of-exponentials approximation sum_i w_i exp(-s_i t) of t^(-alpha).

    The relative error is certified on ``SOE_CHECK_POINTS`` log-spaced
    samples of [t_min, t_max]; ``achieved_error`` stores the measured value.
    """

    weights: FloatArray
    exponents: FloatArray
    alpha: float
    t_min: float
    t_max: float
    tol: float
    achieved_error: float = field(default=float("nan"))

    @property
    def n_modes(self) -> int:
        return int(self.weights.size)

    def evaluate(self, t: FloatArray | float) -> FloatArray:
        tt = np.atleast_1d(np.asarray(t, dtype=np.float64))
        return np.exp(-np.outer(tt, self.exponents)) @ self.weights

    def relative_error(self, t: FloatArray | float) -> FloatArray:
        tt = np.atleast_1d(np.asarray(t, dtype=np.float64))
        return np.abs(self.evaluate(tt) * tt**self.alpha - 1.0)


@dataclass
class SOEState:
    """
    Exponential accumulators of an L1 history, one leading row per SOE mode.

    ``acc[i]`` holds sum_k dv_k * (1/tau) * int_{t_{k-1}}^{t_k} exp(-s_i (t_n - s)) ds
    over all increments older than the current step.
    """

    acc: np.ndarray
    steps: int = 0


def mode_budget(t_min: float, t_max: float, tol: float) -> int:
    ratio = max(1.0, math.log(t_max / t_min))
    return int(math.ceil(SOE_MODE_CONSTANT * ratio * math.log(1.0 / tol)))


def _nodes(alpha: float, h: float, n_panels: int, p: int) -> tuple[FloatArray, FloatArray]:
    # t^-alpha = (1/Gamma(alpha)) int_0^inf s^(alpha-1) exp(-s t) ds, split as
    # [0, h] (Gauss-Jacobi, absorbs s^(alpha-1)) plus dyadic [h 2^j, h 2^(j+1)].
    inv_gamma = 1.0 / float(gamma_fn(alpha))
    xj, wj = roots_jacobi(p, 0.0, alpha - 1.0)
    s_parts = [0.5 * h * (1.0 + xj)]
    w_parts = [(0.5 * h) ** alpha * wj * inv_gamma]

    xg, wg = leggauss(p)
    for j in range(n_panels):
        a = h * 2.0**j
        s = a + 0.5 * a * (1.0 + xg)
        s_parts.append(s)
        w_parts.append(0.5 * a * wg * s ** (alpha - 1.0) * inv_gamma)

    s_all = np.concatenate(s_parts)
    w_all = np.concatenate(w_parts)
    keep = w_all > SOE_PRUNE_RTOL * float(np.max(w_all))
    return w_all[keep], s_all[keep]


def soe_build(
    order: FractionalOrder | float,
    t_min: float,
    t_max: float,
    tol: float,
    *,
    max_modes: int | None = None,
) -> SOEKernel:
    """
    Build a certified sum-of-exponentials approximation of t^(-alpha).

    Parameters
    ----------
    order
        Fractional order alpha.
    t_min, t_max
        Validity window, 0 < t_min < t_max.
    tol
        Target sup relative error on the window, in [1e-12, 1e-3].
    max_modes
        Mode budget; defaults to ``mode_budget(t_min, t_max, tol)``.

    Raises
    ------
    SOEConstructionError
        If the tolerance cannot be met within the mode budget.
    """
    order = FractionalOrder.of(order)
    t_min = as_positive_float(t_min, name="t_min")
    t_max = as_positive_float(t_max, name="t_max")
    if not t_min < t_max:
        raise ValueError(f"t_min must be < t_max; got [{t_min!r}, {t_max!r}].")
    tol = float(tol)
    if not (_TOL_RANGE[0] <= tol <= _TOL_RANGE[1]):
        raise ValueError(f"tol must lie in [1e-12, 1e-3]; got {tol!r}.")
    budget = mode_budget(t_min, t_max, tol) if max_modes is None else int(max_modes)

    alpha = order.alpha
    h = 1.0 / t_max
    s_max = (math.log(10.0 / tol) + 2.0) / t_min
    n_panels = max(1, math.ceil(math.log2(s_max / h)))
    t_check = np.logspace(math.log10(t_min), math.log10(t_max), SOE_CHECK_POINTS)

    best_err = math.inf
    best_modes = 0
    for p in range(4, _MAX_PANEL_ORDER + 1, 2):
        weights, exponents = _nodes(alpha, h, n_panels, p)
        if weights.size > budget:
            break
        approx = np.exp(-np.outer(t_check, exponents)) @ weights
        err = float(np.max(np.abs(approx * t_check**alpha - 1.0)))
        best_err, best_modes = err, int(weights.size)
        if err <= 0.5 * tol:
            logger.debug(
                "soe kernel alpha=%.3f window=[%.3g, %.3g] tol=%.1e: %d modes (err %.2e)",
                alpha,
                t_min,
                t_max,
                tol,
                weights.size,
                err,
            )
            return SOEKernel(
                weights=weights,
                exponents=exponents,
                alpha=alpha,
                t_min=t_min,
                t_max=t_max,
                tol=tol,
                achieved_error=err,
            )
    raise SOEConstructionError(
        f"could not reach tol={tol:.1e} within {budget} modes "
        f"(achieved {best_err:.2e} with {best_modes} modes).",
        achieved_error=best_err,
        n_modes=best_modes,
    )


def soe_coefficients(kernel: SOEKernel, tau: float) -> tuple[FloatArray, FloatArray]:
    """
    Per-mode recurrence factors (exp(-s tau), (1 - exp(-s tau)) / (s tau)).
    """
    z = kernel.exponents * tau
    return np.exp(-z), -np.expm1(-z) / z


def soe_init(
    kernel: SOEKernel, shape: tuple[int, ...] = (), dtype: type = np.float64
) -> SOEState:
    return SOEState(acc=np.zeros((kernel.n_modes, *shape), dtype=dtype))


def _expand(coef: FloatArray, ndim: int) -> FloatArray:
    return coef.reshape(coef.shape + (1,) * (ndim - 1))


def soe_push(kernel: SOEKernel, state: SOEState, dv: object, tau: float) -> SOEState:
    """
    Fold the increment of the step just completed into the accumulators.
    """
    decay, phi = soe_coefficients(kernel, tau)
    ndim = state.acc.ndim
    acc = _expand(decay, ndim) * (state.acc + _expand(phi, ndim) * np.asarray(dv))
    return SOEState(acc=acc, steps=state.steps + 1)


def soe_far_history(kernel: SOEKernel, state: SOEState) -> object:
    """
    Far-history part of the L1 sum (all increments before the current step).
    """
    rg = float(FractionalOrder(kernel.alpha).rgamma_1ma)
    far = np.tensordot(kernel.weights, state.acc, axes=1)
    if np.ndim(far) == 0:
        return rg * float(far)
    return rg * far


def caputo_fast_step(
    kernel: SOEKernel,
    state: SOEState,
    v_new: float,
    v_prev: float,
    tau: float,
) -> tuple[float, SOEState]:
    """
    One step of the SOE-accelerated L1 Caputo derivative.

    The last increment is weighted directly (c0 * a_0 * (v_new - v_prev));
    older increments come from the exponential accumulators in ``state``.

    Returns
    -------
    (value, state)
        The derivative at the new time and the state for the next step.
    """
    order = FractionalOrder(kernel.alpha)
    local = order.l1_scale(tau) * (float(v_new) - float(v_prev))
    far = float(soe_far_history(kernel, state))  # type: ignore[arg-type]
    new_state = soe_push(kernel, state, float(v_new) - float(v_prev), tau)
    return local + far, new_state
