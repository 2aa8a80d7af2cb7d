from __future__ import annotations

import warnings
from enum import Enum


class TFCahnWarning(RuntimeWarning):
    pass


class WarningCategory(str, Enum):
    UNDER_RESOLVED = "under_resolved"
    UNBOUNDED = "unbounded"
    SOE_WINDOW = "soe_window"
    NON_CIRCULAR = "non_circular"


def warn(category: WarningCategory, message: str) -> None:
    warnings.warn(f"{category.value}: {message}", TFCahnWarning, stacklevel=2)
