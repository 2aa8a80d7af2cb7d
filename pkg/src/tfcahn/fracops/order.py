from __future__ import annotations

from dataclasses import dataclass, field

from scipy.special import gamma, rgamma

from .._validation import as_fraction_order, as_positive_float


@dataclass(frozen=True)
class FractionalOrder:
    """
    Caputo order alpha in (0, 1] with cached Gamma factors.

    ``gamma_1ma`` is infinite at alpha = 1; use ``rgamma_1ma`` (= 0 there)
    in expressions that divide by it.
    """

    alpha: float
    gamma_2ma: float = field(init=False)
    gamma_1ma: float = field(init=False)
    rgamma_1ma: float = field(init=False)

    def __post_init__(self) -> None:
        alpha = as_fraction_order(self.alpha, name="alpha")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "gamma_2ma", float(gamma(2.0 - alpha)))
        object.__setattr__(self, "gamma_1ma", float(gamma(1.0 - alpha)))
        object.__setattr__(self, "rgamma_1ma", float(rgamma(1.0 - alpha)))

    @classmethod
    def of(cls, order: FractionalOrder | float) -> FractionalOrder:
        if isinstance(order, FractionalOrder):
            return order
        return cls(alpha=float(order))

    @property
    def is_classical(self) -> bool:
        return self.alpha == 1.0

    def l1_scale(self, tau: float) -> float:
        """c0 = tau^(-alpha) / Gamma(2 - alpha)."""
        tau = as_positive_float(tau, name="tau")
        return float(tau ** (-self.alpha) / self.gamma_2ma)
