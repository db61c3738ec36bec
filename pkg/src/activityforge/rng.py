"""Deterministic RNG used everywhere an operation takes a seed.

SplitMix64 instead of the stdlib Mersenne Twister so that identical seeds
give byte-identical output across Python versions and across the compiled
and pure-Python grid kernels (which embed the same generator).
"""

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


class Rng:
    """SplitMix64 stream. Seeds may be any int; they are masked to 64 bits."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform int in [0, n). n must be positive."""
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        return self.next_u64() % n

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]

    def choice(self, items):
        return items[self.below(len(items))]


def derive_seed(seed: int, stream: int) -> int:
    """Independent child seed for sub-streams (e.g. retry attempts)."""
    return (seed + stream * _GOLDEN) & _MASK64
