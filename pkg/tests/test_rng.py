import numpy as np
import pytest

from tfcahn.rng import MASK64, SplitMix64


def test_reference_outputs() -> None:
    out = SplitMix64(42).next_u64(3)
    assert [int(v) for v in out] == [
        13679457532755275413,
        2949826092126892291,
        5139283748462763858,
    ]
    assert int(SplitMix64(0).next_u64(1)[0]) == 0xE220A8397B1DCDAF


def test_blocks_reproduce_the_scalar_sequence() -> None:
    whole = SplitMix64(7).next_u64(10)
    gen = SplitMix64(7)
    pieces = np.concatenate([gen.next_u64(1), gen.next_u64(4), gen.next_u64(0), gen.next_u64(5)])
    assert np.array_equal(whole, pieces)


def test_uniform_draws() -> None:
    xi = SplitMix64(42).uniform(1000)
    assert xi[0] == 6679422623415661 * 2.0**-53
    assert np.all((xi >= 0.0) & (xi < 1.0))
    assert abs(float(xi.mean()) - 0.5) < 0.05


def test_state_wraps_at_64_bits() -> None:
    gen = SplitMix64(MASK64)
    gen.next_u64(3)
    assert 0 <= gen.state <= MASK64


def test_seed_validation() -> None:
    with pytest.raises(ValueError, match="unsigned 64-bit"):
        SplitMix64(-1)
    with pytest.raises(ValueError, match="unsigned 64-bit"):
        SplitMix64(1 << 64)
    with pytest.raises(ValueError, match="must be an integer"):
        SplitMix64(True)
    with pytest.raises(ValueError, match="n must be >= 0"):
        SplitMix64(1).next_u64(-2)
