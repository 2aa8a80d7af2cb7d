from __future__ import annotations

import logging
from collections.abc import Callable

import numpy as np

from ..errors import SimulationError
from ..field import Field
from ..field.spectral import forward
from ..model import ModelParams
from ..utils.warnings import WarningCategory, warn
from .config import HistoryMode, SchemeConfig
from .history import HistoryStore
from .schemes import step
from .state import SolverState

logger = logging.getLogger(__name__)

Sink = Callable[[SolverState], None]


def init_state(config: SchemeConfig, init: Field, params: ModelParams) -> SolverState:
    """Step-0 state for ``init`` with an empty history of the configured kind."""
    uh0 = forward(init.grid, init.values)
    if config.history_mode is HistoryMode.DIRECT:
        history = HistoryStore.direct(
            params.order, config.tau, uh0, capacity=min(config.n_steps + 1, 1024)
        )
    else:
        history = HistoryStore.soe(
            params.order, config.tau, uh0, t_end=config.t_end, tol=config.soe_tol
        )
    return SolverState(
        u_current=init,
        history=history,
        step_index=0,
        tau=config.tau,
        params=params,
        config=config,
    )


def run(
    config: SchemeConfig,
    init: Field,
    params: ModelParams,
    sink: Sink | None = None,
) -> SolverState:
    """
    Advance ``init`` to ``config.t_end``.

    The sink sees the initial state, every ``config.sink_every``-th state and
    the final state. Step errors are re-raised with the simulation time set.
    """
    params.check_resolution(init.grid)
    state = init_state(config, init, params)
    n_steps = config.n_steps
    logger.info(
        "run: alpha=%.3g eps=%.3g mobility=%s grid=%dx%d tau=%.3g steps=%d history=%s",
        params.order.alpha,
        params.epsilon,
        params.mobility.value,
        init.grid.nx,
        init.grid.ny,
        config.tau,
        n_steps,
        config.history_mode.value,
    )
    if sink is not None:
        sink(state)

    flagged = False
    report_every = max(1, n_steps // 10)
    for n in range(1, n_steps + 1):
        try:
            state = step(state)
        except SimulationError as exc:
            raise exc.at_time(n * config.tau) from None
        if not flagged and state.u_current.max_abs > config.bound:
            flagged = True
            warn(
                WarningCategory.UNBOUNDED,
                f"max|u|={state.u_current.max_abs:.4g} exceeds {config.bound:g} "
                f"at t={state.t:.4g}.",
            )
        if sink is not None and (n % config.sink_every == 0 or n == n_steps):
            sink(state)
        if n % report_every == 0:
            logger.debug("step %d/%d t=%.4g mass=%.3e", n, n_steps, state.t, state.u_current.mass)

    logger.info("run finished at t=%.4g (mass %.12g)", state.t, float(np.mean(state.u_current.values)))
    return state


__all__ = ["Sink", "init_state", "run"]
