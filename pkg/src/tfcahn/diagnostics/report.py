from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .powerlaw import SlopeFit
from .series import TimeSeries


@dataclass(frozen=True)
class CoarseningReport:
    """
    Energy and length-scale slopes over one window.

    With E/|Omega| ~ 1/l the energy slope is minus the growth exponent, so
    ``growth_rate`` averages -energy.slope with the two length slopes that
    could be fitted.
    """

    energy: SlopeFit
    length_sf: SlopeFit | None
    length_energy: SlopeFit | None

    @property
    def growth_rate(self) -> float:
        rates = [-self.energy.slope]
        rates += [f.slope for f in (self.length_sf, self.length_energy) if f is not None]
        return float(np.mean(rates))

    def to_dict(self) -> dict[str, object]:
        return {
            "energy": self.energy.to_dict(),
            "length_sf": None if self.length_sf is None else self.length_sf.to_dict(),
            "length_energy": None if self.length_energy is None else self.length_energy.to_dict(),
            "growth_rate": self.growth_rate,
        }


def coarsening_report(series: TimeSeries, window: tuple[float, float]) -> CoarseningReport:
    """
    Fit energy per area and both length scales on ``window``.

    Length fits that fail (NaN lengths, too few points) are reported as None;
    the energy fit must succeed.
    """
    energy = series.fit("energy_per_area", window)

    def _maybe(column: str) -> SlopeFit | None:
        try:
            return series.fit(column, window)
        except ValueError:
            return None

    return CoarseningReport(
        energy=energy,
        length_sf=_maybe("length_sf"),
        length_energy=_maybe("length_energy"),
    )


__all__ = ["CoarseningReport", "coarsening_report"]
