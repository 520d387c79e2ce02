"""Deterministic pseudo-random numbers for seeded generators.

SplitMix64 with the canonical constant set, so that streams are reproducible
bit-exactly across platforms and languages:

    state    += 0x9E3779B97F4A7C15                 (golden gamma)
    z         = state
    z         = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z         = (z ^ (z >> 27)) * 0x94D049BB133111EB
    output    = z ^ (z >> 31)

all arithmetic mod 2^64.  Floats take the top 53 bits of an output word.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """Seeded deterministic generator; not for cryptographic use."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_uint64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 bits of precision."""
        return (self.next_uint64() >> 11) * (2.0**-53)

    def uniform(self, lo: float, hi: float) -> float:
        """Uniform float in [lo, hi)."""
        return lo + (hi - lo) * self.random()
