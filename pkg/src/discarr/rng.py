"""Deterministic 64-bit random number generation.

The toolkit's only source of randomness is SplitMix64: a counter-based
generator that advances a 64-bit Weyl sequence by the golden-ratio gamma
and finalizes each counter value with an avalanching mix.  Substreams are
cheap (any 64-bit value is a valid state), which is what makes per-trial
seeding `seed XOR trial-index` reproducible independent of execution
order or thread count.

The compiled kernel module carries a C copy of the same generator; the
two are kept bit-identical and parity-tested.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next64(self) -> int:
        self.state = (self.state + _GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & MASK64
        return z ^ (z >> 31)

    def randbelow(self, bound: int) -> int:
        """Uniform integer in [0, bound) by masked rejection; bound >= 1."""
        if bound <= 1:
            return 0
        mask = (1 << (bound - 1).bit_length()) - 1
        while True:
            v = self.next64() & mask
            if v < bound:
                return v

    def randint_symmetric(self, bound: int) -> int:
        """Uniform integer in [-bound, bound]."""
        return self.randbelow(2 * bound + 1) - bound
