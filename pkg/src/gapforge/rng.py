"""Counter-based 64-bit generator used for every random choice in gapforge.

The i-th raw output (i = 0, 1, 2, ...) for a seed ``s`` is::

    x   = (s + (i + 1) * 0x9E3779B97F4A7C15) mod 2**64
    x   = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) mod 2**64
    x   = ((x ^ (x >> 27)) * 0x94D049BB133111EB) mod 2**64
    out = x ^ (x >> 31)

which is the SplitMix64 sequence. A bounded draw in ``[0, n)`` consumes raw
outputs until one falls below ``2**64 - (2**64 mod n)`` and returns it mod
``n``; rejected outputs are consumed. Every output depends only on
``(seed, counter)``, so results are identical on every platform.
"""
from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
_M1 = 0xBF58476D1CE4E5B9
_M2 = 0x94D049BB133111EB


def mix64(z: int) -> int:
    z &= MASK64
    z = ((z ^ (z >> 30)) * _M1) & MASK64
    z = ((z ^ (z >> 27)) * _M2) & MASK64
    return z ^ (z >> 31)


def _mix64_array(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_M1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_M2)
    return z ^ (z >> np.uint64(31))


class CounterRng:
    """Stateful cursor over the counter-based stream for one seed."""

    def __init__(self, seed: int, counter: int = 0):
        self.seed = int(seed) & MASK64
        self.counter = counter

    def raw(self, count: int) -> np.ndarray:
        idx = np.arange(self.counter + 1, self.counter + 1 + count, dtype=np.uint64)
        with np.errstate(over="ignore"):
            x = np.uint64(self.seed) + idx * np.uint64(GOLDEN_GAMMA)
            out = _mix64_array(x)
        self.counter += count
        return out

    def next64(self) -> int:
        self.counter += 1
        return mix64(self.seed + self.counter * GOLDEN_GAMMA)

    def randbelow(self, n: int) -> int:
        if n <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next64()
            if x < limit:
                return x % n

    def integers(self, n: int, size: int) -> np.ndarray:
        """``size`` bounded draws in [0, n); same values as repeated randbelow."""
        if n <= 0:
            raise ValueError("bound must be positive")
        if size == 0:
            return np.zeros(0, dtype=np.int64)
        limit = (1 << 64) - ((1 << 64) % n)
        out = np.empty(size, dtype=np.int64)
        filled = 0
        while filled < size:
            need = size - filled
            start = self.counter
            block = self.raw(need)
            if limit == 1 << 64:
                ok = np.ones(need, dtype=bool)
            else:
                ok = block < np.uint64(limit)
            accepted = np.flatnonzero(ok)
            take = accepted[:need]
            out[filled:filled + len(take)] = (block[take] % np.uint64(n)).astype(np.int64)
            filled += len(take)
            if len(take) == need and len(take) > 0:
                # rewind past the unused tail so consumption matches randbelow
                self.counter = start + int(take[-1]) + 1
        return out
