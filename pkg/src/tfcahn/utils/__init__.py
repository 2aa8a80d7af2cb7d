from __future__ import annotations

from .warnings import TFCahnWarning, WarningCategory, warn

__all__ = ["TFCahnWarning", "WarningCategory", "warn"]
