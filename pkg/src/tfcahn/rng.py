from __future__ import annotations

import numpy as np

from ._typing import FloatArray, UIntArray

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_TWO_M53 = 2.0**-53


def _as_seed(seed: int) -> int:
    if isinstance(seed, bool) or int(seed) != seed:
        raise ValueError(f"seed must be an integer; got {seed!r}.")
    val = int(seed)
    if not 0 <= val <= MASK64:
        raise ValueError(f"seed must be an unsigned 64-bit integer; got {val}.")
    return val


def _mix(z: UIntArray) -> UIntArray:
    # uint64 array arithmetic wraps modulo 2**64 without warnings.
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


class SplitMix64:
    """
    SplitMix64 generator, vectorized over consecutive draws.

    Draw i (1-based) mixes the state seed + i * 0x9E3779B97F4A7C15, so blocks
    of any size reproduce the scalar sequence exactly.
    """

    def __init__(self, seed: int) -> None:
        self.state = _as_seed(seed)

    def next_u64(self, n: int) -> UIntArray:
        n = int(n)
        if n < 0:
            raise ValueError(f"n must be >= 0; got {n}.")
        steps = np.arange(1, n + 1, dtype=np.uint64)
        x = np.uint64(self.state) + steps * np.uint64(GOLDEN_GAMMA)
        self.state = (self.state + n * GOLDEN_GAMMA) & MASK64
        return _mix(x)

    def uniform(self, n: int) -> FloatArray:
        """Doubles in [0, 1): (output >> 11) * 2**-53."""
        return (self.next_u64(n) >> np.uint64(11)).astype(np.float64) * _TWO_M53


__all__ = ["GOLDEN_GAMMA", "MASK64", "SplitMix64"]
