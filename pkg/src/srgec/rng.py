"""Portable deterministic randomness.

Everything random in this package draws from a single fixed generator so
that certificates re-verify bit-for-bit on any platform:

* generator: splitmix64 (Steele, Lea, Flood 2014). State advances by the
  64-bit golden-ratio constant; each output is the mixed state.
* bounded draws: ``next_u64() % bound`` (the small modulo bias is
  irrelevant here and keeping the rule trivial makes it portable).
* shuffles: Fisher-Yates from the top index down, one bounded draw per
  swap.
* task derivation: independent task i (parallel search lane, batch entry)
  is seeded with the i-th output of the stream seeded by the base seed,
  i.e. ``derive_seed(base, i) = RngState(base)`` advanced i+1 times.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


class RngState:
    """splitmix64 stream with a recorded initial seed."""

    __slots__ = ("seed", "_state")

    def __init__(self, seed: int):
        self.seed = seed & _MASK64
        self._state = self.seed

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        return _mix(self._state)

    def randrange(self, bound: int) -> int:
        """Uniform-ish integer in [0, bound); bound >= 1."""
        return self.next_u64() % bound

    def shuffle(self, xs: list) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(xs) - 1, 0, -1):
            j = self.randrange(i + 1)
            xs[i], xs[j] = xs[j], xs[i]


def derive_seed(base: int, i: int) -> int:
    """Seed for independent task ``i`` under base seed ``base``.

    Equals the (i+1)-th output of the base stream; constant-time via the
    splitmix64 state recurrence.
    """
    state = (base + (i + 1) * _GOLDEN) & _MASK64
    return _mix(state)
