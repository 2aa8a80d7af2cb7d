from __future__ import annotations

from .l1 import (
    L1Weights,
    ScalarHistory,
    caputo_l1,
    caputo_l1_all,
    l1_weights,
    rescale_check,
    rl_integral,
)
from .order import FractionalOrder
from .soe import (
    SOEKernel,
    SOEState,
    caputo_fast_step,
    mode_budget,
    soe_build,
    soe_coefficients,
    soe_far_history,
    soe_init,
    soe_push,
)

__all__ = [
    "FractionalOrder",
    "L1Weights",
    "SOEKernel",
    "SOEState",
    "ScalarHistory",
    "caputo_fast_step",
    "caputo_l1",
    "caputo_l1_all",
    "l1_weights",
    "mode_budget",
    "rescale_check",
    "rl_integral",
    "soe_build",
    "soe_coefficients",
    "soe_far_history",
    "soe_init",
    "soe_push",
]
