from __future__ import annotations

import math
import os
from fractions import Fraction

DEFAULT_BUDGET = 10**7


def as_fraction(x) -> Fraction:
    """Exact rational for a user-facing real such as 0.9 or 6/7.

    Floats are snapped to the nearest fraction with a small denominator so that
    ``0.9 * 7`` compares as ``63/10`` rather than a binary approximation.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    return Fraction(x).limit_denominator(10**9)


def ceil_frac(x) -> int:
    f = as_fraction(x)
    return -((-f.numerator) // f.denominator)


def floor_frac(x) -> int:
    f = as_fraction(x)
    return f.numerator // f.denominator


def default_budget() -> int:
    env = os.environ.get("GAPFORGE_BUDGET")
    if env:
        return int(env)
    return DEFAULT_BUDGET


def comb_sum(n: int, cap: int, weight: int = 1) -> int:
    """sum_{s=0..cap} C(n, s) * weight**s"""
    return sum(math.comb(n, s) * weight**s for s in range(min(cap, n) + 1))
