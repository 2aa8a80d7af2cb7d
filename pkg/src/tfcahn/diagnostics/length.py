from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np

from ..errors import UndefinedLengthError
from ..field import Field, dft_forward
from ..model import ModelParams, energy
from ..oracle.profile import PROFILE

# Fraction of the total power below which a field counts as constant.
_CONSTANT_POWER_RTOL = 1e-24


@dataclass(frozen=True)
class CharacteristicLength:
    length_sf: float
    length_energy: float

    def __iter__(self) -> Iterator[float]:
        yield self.length_sf
        yield self.length_energy

    @property
    def ratio(self) -> float:
        return self.length_sf / self.length_energy


def structure_factor_length(u: Field) -> float:
    """
    First-moment wavelength 2 pi sum S(k) / sum |k| S(k) over k != 0.

    Raises
    ------
    UndefinedLengthError
        If u is spatially constant.
    """
    power = dft_forward(u).power
    total = float(power.sum())
    power[0, 0] = 0.0
    kmag = np.sqrt(u.grid.k2)
    num = float(power.sum())
    if num <= _CONSTANT_POWER_RTOL * total:
        raise UndefinedLengthError("structure-factor length is undefined for a constant field.")
    return 2.0 * np.pi * num / float(np.sum(kmag * power))


def energy_length(u: Field, p: ModelParams) -> float:
    """sigma_int * |Omega| / E with sigma_int = S * epsilon."""
    e = energy(u, p).total
    if e <= 0.0:
        raise UndefinedLengthError("energy length is undefined for a zero-energy field.")
    return PROFILE.sigma_int(p.epsilon) * u.grid.area / e


def characteristic_length(u: Field, p: ModelParams) -> CharacteristicLength:
    return CharacteristicLength(
        length_sf=structure_factor_length(u), length_energy=energy_length(u, p)
    )


__all__ = [
    "CharacteristicLength",
    "characteristic_length",
    "energy_length",
    "structure_factor_length",
]
