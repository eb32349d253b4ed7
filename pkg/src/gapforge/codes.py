"""Codes with large epsilon-collision number, and exact collision analysis."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from ._util import as_fraction, ceil_frac, comb_sum, default_budget
from .errors import BudgetError, InputError
from .field import is_prime
from .rng import CounterRng


@dataclass(frozen=True)
class Code:
    """``n`` distinct words of length ``m`` over symbols 0..sigma-1."""

    sigma: int
    m: int
    words: tuple

    def __post_init__(self):
        words = tuple(tuple(int(x) for x in w) for w in self.words)
        object.__setattr__(self, "words", words)
        if self.sigma < 1:
            raise InputError("sigma must be positive")
        if self.m < 1:
            raise InputError("code length m must be positive")
        for i, w in enumerate(words):
            if len(w) != self.m:
                raise InputError(f"words[{i}]: length {len(w)}, expected {self.m}")
            if any(not 0 <= x < self.sigma for x in w):
                raise InputError(f"words[{i}]: symbol outside [0, {self.sigma})")
        if len(set(words)) != len(words):
            raise InputError("code words must be pairwise distinct")

    def __len__(self):
        return len(self.words)

    def as_array(self) -> np.ndarray:
        return np.array(self.words, dtype=np.int64).reshape(len(self.words), self.m)


@dataclass(frozen=True)
class CodeParams:
    sigma: int
    r: int
    m: int
    epsilon: float
    c: float

    def __post_init__(self):
        if self.sigma < 2 or self.r < 1 or self.m < 1:
            raise InputError("need sigma >= 2, r >= 1, m >= 1")
        if not 0 < self.epsilon < 1:
            raise InputError("epsilon must lie in (0, 1)")
        if self.c < 1:
            raise InputError("c must be at least 1")


def agreement_counts(code: Code) -> np.ndarray:
    """n x n matrix of coordinates on which two words agree."""
    a = code.as_array()
    n = len(a)
    onehot = np.zeros((n, code.m * code.sigma), dtype=np.int32)
    cols = np.arange(code.m) * code.sigma
    onehot[np.arange(n)[:, None], cols[None, :] + a] = 1
    return onehot @ onehot.T


def _pair_masks(code: Code) -> dict:
    a = code.as_array()
    masks = {}
    for i, j in itertools.combinations(range(len(a)), 2):
        eq = np.packbits(a[i] == a[j], bitorder="little")
        masks[(i, j)] = int.from_bytes(eq.tobytes(), "little")
    return masks


def collision_number_exact(code: Code, epsilon, s_max: int,
                           budget: Optional[int] = None) -> Optional[int]:
    """Smallest s <= s_max such that some s words collide on > epsilon*m coordinates.

    None certifies Col_eps(code) > s_max. Sizes beyond len(code) have no
    subsets, so s_max is clamped to the code size.
    """
    budget = default_budget() if budget is None else budget
    n = len(code)
    s_max = min(s_max, n)
    if s_max < 2:
        return None
    cost = comb_sum(n, s_max) - 1 - n
    if cost > budget:
        raise BudgetError(f"collision search needs {cost} subsets, budget {budget}",
                          required=cost, budget=budget)
    threshold = as_fraction(epsilon) * code.m
    counts = agreement_counts(code)
    iu = np.triu_indices(n, 1)
    if any(as_fraction(int(c)) > threshold for c in np.unique(counts[iu])):
        return 2
    if s_max < 3:
        return None
    masks = _pair_masks(code)
    for s in range(3, s_max + 1):
        for sub in itertools.combinations(range(n), s):
            u = 0
            for pair in itertools.combinations(sub, 2):
                u |= masks[pair]
            if u.bit_count() > threshold:
                return s
    return None


def relative_distance(code: Code) -> Fraction:
    """Minimum pairwise relative Hamming distance, exactly."""
    if len(code) < 2:
        raise InputError("distance needs at least two words")
    counts = agreement_counts(code)
    iu = np.triu_indices(len(code), 1)
    agree = int(counts[iu].max())
    return as_fraction(code.m - agree) / code.m


def build_random_code(n: int, sigma: int, m: int, seed: int) -> Code:
    """n distinct uniform words; a duplicate is redrawn from the same stream."""
    if n < 1:
        raise InputError("n must be positive")
    if sigma**m < n:
        raise InputError(f"sigma^m = {sigma}^{m} < n = {n}: distinct words impossible")
    rng = CounterRng(seed)
    words = []
    seen = set()
    while len(words) < n:
        w = tuple(rng.integers(sigma, m).tolist())
        if w in seen:
            continue
        seen.add(w)
        words.append(w)
    return Code(sigma, m, tuple(words))


def _icbrt(x: int) -> int:
    r = round(x ** (1 / 3))
    while r**3 > x:
        r -= 1
    while (r + 1) ** 3 <= x:
        r += 1
    return r


def random_code_params(n: int, k: int, c: float, epsilon) -> CodeParams:
    """sigma = (ck)^3, r = ceil(log n / log sigma), m = ceil(16 eps^-2 sigma^(1/3) ln(sigma) r) rounded up to a multiple of k."""
    if n < 2 or k < 1:
        raise InputError("need n >= 2 and k >= 1")
    eps = float(epsilon)
    sigma = ceil_frac(as_fraction(c) * k) ** 3
    r = 1
    while sigma**r < n:
        r += 1
    root = _icbrt(sigma)
    cube_root = root if root**3 == sigma else sigma ** (1 / 3)
    raw = math.ceil(16 / eps**2 * cube_root * math.log(sigma) * r)
    m = -(-raw // k) * k
    return CodeParams(sigma=sigma, r=r, m=m, epsilon=eps, c=c)


def merge_code(code: Code, g: int) -> Code:
    """Pack every g consecutive symbols into one base-sigma digit string (MSB first)."""
    if g < 1 or code.m % g:
        raise InputError(f"g={g} does not divide m={code.m}")
    if g == 1:
        return code
    weights = [code.sigma ** (g - 1 - t) for t in range(g)]
    words = []
    for w in code.words:
        words.append(tuple(sum(w[i * g + t] * weights[t] for t in range(g))
                           for i in range(code.m // g)))
    return Code(code.sigma**g, code.m // g, tuple(words))


def build_rs_code(q: int, r: int, m: int, n: Optional[int] = None) -> Code:
    """Evaluations of the first n polynomials of degree < r at 0..m-1 over F_q."""
    if not is_prime(q):
        raise InputError(f"q must be prime, got {q}")
    if not 1 <= r < m <= q:
        raise InputError(f"need 1 <= r < m <= q, got r={r}, m={m}, q={q}")
    n = q**r if n is None else n
    if not 1 <= n <= q**r:
        raise InputError(f"n must lie in [1, q^r = {q**r}]")
    words = []
    for coeffs in itertools.islice(itertools.product(range(q), repeat=r), n):
        word = []
        for x in range(m):
            acc = 0
            for a in reversed(coeffs):
                acc = (acc * x + a) % q
            word.append(acc)
        words.append(tuple(word))
    return Code(q, m, tuple(words))


def distance_based_bounds(delta, epsilon, m: int, r: int) -> dict:
    """Collision lower bound sqrt(2 eps / (1 - delta)) and the Singleton check r <= m - delta*m + 1."""
    d = as_fraction(delta)
    if not 0 < d < 1:
        raise InputError("delta must lie in (0, 1)")
    bound = math.sqrt(2 * float(as_fraction(epsilon)) / float(1 - d))
    return {"col_lower_bound": bound, "singleton_feasible": r <= m - d * m + 1}


def rs_collision_bound(epsilon, m: int, r: int) -> float:
    return math.sqrt(2 * float(as_fraction(epsilon)) * m / r)
