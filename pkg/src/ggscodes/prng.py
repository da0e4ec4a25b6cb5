"""Counter-based SplitMix64 stream, reproducible bit-for-bit in any language.

Output ``k`` of the stream for ``seed`` is ``mix(seed + (k + 1) * GOLDEN)``
with all arithmetic mod 2^64, where::

    GOLDEN = 0x9E3779B97F4A7C15
    mix(z):  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
             z = (z ^ (z >> 27)) * 0x94D049BB133111EB
             return z ^ (z >> 31)

This is the sequential SplitMix64 generator written as a function of the
counter, so blocks can be drawn with numpy without a Python loop.
"""

from __future__ import annotations

import numpy as np

GOLDEN = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB
_MASK = (1 << 64) - 1


def mix64(z: int) -> int:
    z &= _MASK
    z = ((z ^ (z >> 30)) * MIX1) & _MASK
    z = ((z ^ (z >> 27)) * MIX2) & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    def __init__(self, seed: int):
        self.seed = seed & _MASK
        self.counter = 0

    def next(self) -> int:
        self.counter += 1
        return mix64(self.seed + self.counter * GOLDEN)

    def block(self, size: int) -> np.ndarray:
        """The next ``size`` outputs as a uint64 array."""
        k = np.arange(self.counter + 1, self.counter + 1 + size, dtype=np.uint64)
        self.counter += size
        with np.errstate(over="ignore"):
            z = np.uint64(self.seed) + k * np.uint64(GOLDEN)
            z = (z ^ (z >> np.uint64(30))) * np.uint64(MIX1)
            z = (z ^ (z >> np.uint64(27))) * np.uint64(MIX2)
        return z ^ (z >> np.uint64(31))

    def integers(self, size: int, bound) -> np.ndarray:
        """``size`` values reduced modulo ``bound`` (scalar or broadcastable array)."""
        return (self.block(size) % np.asarray(bound, dtype=np.uint64)).astype(np.int64)
