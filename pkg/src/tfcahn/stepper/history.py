from __future__ import annotations

import logging

import numpy as np

from .._typing import ComplexArray, FloatArray
from ..fracops import (
    FractionalOrder,
    SOEKernel,
    l1_weights,
    soe_build,
    soe_far_history,
    soe_init,
    soe_push,
)
from ..utils.warnings import WarningCategory, warn
from .config import HistoryMode

logger = logging.getLogger(__name__)

_MIN_CAPACITY = 16


class HistoryStore:
    """
    Memory of an L1 time stepper, one complex array per spectral mode.

    After ``push`` has been called for u^1..u^{n-1}, ``history_term()``
    returns the far-history part of the L1 sum at t_n:

        H^n = c0 * sum_{j=1}^{n-1} a_j (u^{n-j} - u^{n-j-1})

    (c0 = tau^-alpha / Gamma(2-alpha)). Direct mode keeps every past
    spectrum and evaluates the sum exactly; SOE mode folds increments into
    exponential accumulators and keeps only the last state.

    The store is mutated in place by ``push``.
    """

    def __init__(
        self,
        mode: HistoryMode | str,
        order: FractionalOrder | float,
        tau: float,
        initial: ComplexArray,
        *,
        kernel: SOEKernel | None = None,
        soe_tol: float = 1e-9,
        capacity: int = _MIN_CAPACITY,
    ) -> None:
        self.mode = HistoryMode.parse(mode)
        self.order = FractionalOrder.of(order)
        self.tau = float(tau)
        self.c0 = self.order.l1_scale(self.tau)
        self.soe_tol = float(soe_tol)
        initial = np.asarray(initial, dtype=np.complex128)
        self._shape = initial.shape
        self._steps = 0
        self._last = initial.copy()
        self._overrun = False

        self.kernel: SOEKernel | None = None
        if self.mode is HistoryMode.DIRECT:
            cap = max(_MIN_CAPACITY, int(capacity))
            self._states = np.empty((cap, *self._shape), dtype=np.complex128)
            self._states[0] = initial
            self._weights = l1_weights(self.order, cap).a
        elif not self.order.is_classical:
            # alpha = 1 has no memory; the accumulators would be multiplied by 0.
            if kernel is None:
                raise ValueError("SOE history needs a kernel; see HistoryStore.soe().")
            self.kernel = kernel
            self._soe = soe_init(kernel, self._shape, np.complex128)

    @classmethod
    def direct(
        cls,
        order: FractionalOrder | float,
        tau: float,
        initial: ComplexArray,
        *,
        capacity: int = _MIN_CAPACITY,
    ) -> HistoryStore:
        return cls(HistoryMode.DIRECT, order, tau, initial, capacity=capacity)

    @classmethod
    def soe(
        cls,
        order: FractionalOrder | float,
        tau: float,
        initial: ComplexArray,
        *,
        t_end: float,
        tol: float = 1e-9,
    ) -> HistoryStore:
        """
        SOE store whose kernel covers far-history lags [tau, max(t_end, 2 tau)].
        """
        order = FractionalOrder.of(order)
        kernel = None
        if not order.is_classical:
            kernel = soe_build(order, tau, max(float(t_end), 2.0 * tau), tol)
            logger.info("SOE history: %d modes for tol=%.1e", kernel.n_modes, tol)
        return cls(HistoryMode.SOE, order, tau, initial, kernel=kernel, soe_tol=tol)

    @property
    def steps(self) -> int:
        """Number of completed steps pushed so far."""
        return self._steps

    def __len__(self) -> int:
        """Number of stored states (steps + 1 in direct mode, 2 at most in SOE mode)."""
        if self.mode is HistoryMode.DIRECT:
            return self._steps + 1
        return min(self._steps + 1, 2)

    @property
    def last(self) -> ComplexArray:
        return self._last

    @property
    def n_modes(self) -> int:
        return 0 if self.kernel is None else self.kernel.n_modes

    def states(self) -> ComplexArray:
        """Stored spectra u^0..u^n (direct mode only)."""
        if self.mode is not HistoryMode.DIRECT:
            raise ValueError("only direct histories keep every state.")
        return self._states[: self._steps + 1]

    def _grow(self, needed: int) -> None:
        cap = self._states.shape[0]
        if needed <= cap:
            return
        new_cap = max(needed, 2 * cap)
        states = np.empty((new_cap, *self._shape), dtype=np.complex128)
        states[:cap] = self._states
        self._states = states
        self._weights = l1_weights(self.order, new_cap).a

    def push(self, new: ComplexArray) -> None:
        """Record the spectrum of the state just computed."""
        new = np.asarray(new, dtype=np.complex128)
        if new.shape != self._shape:
            raise ValueError(f"expected spectrum of shape {self._shape}; got {new.shape}.")
        if self.mode is HistoryMode.DIRECT:
            self._grow(self._steps + 2)
            self._states[self._steps + 1] = new
        elif self.kernel is not None:
            self._soe = soe_push(self.kernel, self._soe, new - self._last, self.tau)
        self._last = new.copy()
        self._steps += 1

    def history_term(self) -> ComplexArray:
        """H^n for the next step n = steps + 1."""
        n = self._steps + 1
        if n <= 1:
            return np.zeros(self._shape, dtype=np.complex128)
        if self.mode is HistoryMode.DIRECT:
            return self.c0 * np.tensordot(self._direct_weights(n), self._states[:n], axes=1)
        if self.kernel is None:
            return np.zeros(self._shape, dtype=np.complex128)
        # The oldest increment sits at lag t_n from the step being taken.
        lag = n * self.tau
        if not self._overrun and lag > self.kernel.t_max * (1.0 + 1e-12):
            self._overrun = True
            warn(
                WarningCategory.SOE_WINDOW,
                f"history lag {lag:.4g} exceeds the SOE window t_max={self.kernel.t_max:.4g}.",
            )
        return np.asarray(soe_far_history(self.kernel, self._soe), dtype=np.complex128)

    def _direct_weights(self, n: int) -> FloatArray:
        # Coefficients of u^0..u^{n-1} in sum_{j=1}^{n-1} a_j (u^{n-j} - u^{n-j-1}).
        a = self._weights
        w = np.zeros(n, dtype=np.float64)
        w[n - 1] = a[1]
        if n > 2:
            j = np.arange(2, n)
            w[n - j] = a[j] - a[j - 1]
        w[0] -= a[n - 1]
        return w


__all__ = ["HistoryStore"]
