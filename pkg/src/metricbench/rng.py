"""Deterministic 64-bit PRNG (SplitMix64) for reproducible experiments.

Every random decision in this package (train/test splits, axiom-check
sampling) flows through this generator so that identical seeds produce
bit-identical results on every platform.  The algorithm is the standard
SplitMix64: a 64-bit Weyl sequence with increment 0x9E3779B97F4A7C15,
finalized by two xor-shift-multiply rounds.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """SplitMix64 generator.  State advances by a fixed Weyl increment;
    each output is a bijective mix of the new state.

    First outputs for seed 0 are 0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4,
    0x06C45D188009454F (the published reference sequence).
    """

    __slots__ = ("_state",)

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK

    def next_u64(self) -> int:
        """Next raw 64-bit output."""
        self._state = (self._state + _GAMMA) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK
        return z ^ (z >> 31)

    def next_float(self) -> float:
        """Uniform float in [0, 1) using the top 53 bits."""
        return (self.next_u64() >> 11) * 2.0**-53

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) via modulo reduction.

        Modulo bias is below 2**-40 for every n used in this package;
        determinism matters more here than removing it.
        """
        if n < 1:
            raise ValueError(f"below() requires n >= 1, got {n}")
        return self.next_u64() % n

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle, iterating from the last index down."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
