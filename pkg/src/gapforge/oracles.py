"""Exact brute-force solvers used as ground truth for every reduction.

All searches run size-major, then over index tuples in lexicographic order,
then over coefficient tuples in lexicographic order, so the first witness
found is the lexicographically smallest among minimum-weight ones.
"""
from __future__ import annotations

import hashlib
import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from ._util import as_fraction, comb_sum, default_budget, floor_frac
from .errors import BudgetError, InputError
from .field import FpMatrix, independent_rows
from .instances import (ColoredMldInstance, MldInstance, NcpInstance, Pick,
                        Witness, verify_witness)

_CHUNK_ELEMS = 1 << 21


def _matrix(vectors) -> np.ndarray:
    if not vectors:
        return np.zeros((0, 0), dtype=np.int64)
    return np.array([v.entries for v in vectors], dtype=np.int64).reshape(len(vectors), -1)


def _coeff_table(p: int, s: int) -> np.ndarray:
    return np.array(list(itertools.product(range(1, p), repeat=s)), dtype=np.int64).reshape(-1, s)


def _size_matches(vecs: np.ndarray, target: np.ndarray, p: int, s: int,
                  index_pool=None) -> Iterator[tuple]:
    """Yield (indices, coeffs) with sum coeffs*vecs[indices] == target, for |indices| == s."""
    n, d = vecs.shape
    pool = range(n) if index_pool is None else index_pool
    coefs = _coeff_table(p, s)
    big = p * p * max(s, 1) >= 2**62
    chunk = max(1, _CHUNK_ELEMS // max(1, len(coefs) * max(d, 1)))
    combos = itertools.combinations(pool, s)
    while True:
        block = list(itertools.islice(combos, chunk))
        if not block:
            return
        idx = np.array(block, dtype=np.int64).reshape(len(block), s)
        if big:
            sel = vecs[idx].astype(object)
            sums = np.einsum("ks,csd->ckd", coefs.astype(object), sel) % p
        else:
            sums = np.einsum("ks,csd->ckd", coefs, vecs[idx]) % p
        hit = (sums == target).all(axis=2)
        for ci in np.flatnonzero(hit.any(axis=1)):
            for ki in np.flatnonzero(hit[ci]):
                yield tuple(block[ci]), tuple(int(c) for c in coefs[ki])


@dataclass(frozen=True)
class MldSolution:
    weight: int
    witness: Witness


def search_cost(num_vectors: int, p: int, size_cap: int) -> int:
    """Coefficient-weighted subsets examined by a flat search up to size_cap."""
    return comb_sum(num_vectors, size_cap, p - 1)


def colored_search_cost(inst: ColoredMldInstance, unit_coeffs: bool) -> int:
    per = 1 if unit_coeffs else inst.p - 1
    return math.prod(inst.class_sizes()) * per**inst.k


def iter_mld_solutions(inst: MldInstance, max_size: Optional[int] = None,
                       budget: Optional[int] = None, min_size: int = 1) -> Iterator[tuple]:
    """Every (indices, coeffs) solution with min_size <= size <= max_size, in search order."""
    budget = default_budget() if budget is None else budget
    n = inst.num_vectors()
    cap = n if max_size is None else min(max_size, n)
    cost = search_cost(n, inst.p, cap)
    if cost > budget:
        raise BudgetError(f"search needs {cost} combinations, budget {budget}",
                          required=cost, budget=budget)
    vecs = _matrix(inst.vectors)
    target = np.array(inst.target.entries, dtype=np.int64)
    for s in range(max(min_size, 1), cap + 1):
        yield from _size_matches(vecs, target, inst.p, s)


def iter_colored_solutions(inst: ColoredMldInstance, unit_coeffs: bool = False,
                           budget: Optional[int] = None) -> Iterator[tuple]:
    """One vector per class with coefficients in F_p^+ (or all 1) summing to target.

    Yields (index per class, coefficient per class).
    """
    budget = default_budget() if budget is None else budget
    cost = colored_search_cost(inst, unit_coeffs)
    if cost > budget:
        raise BudgetError(f"colored search needs {cost} combinations, budget {budget}",
                          required=cost, budget=budget)
    p = inst.p
    mats = [_matrix(c) for c in inst.classes]
    target = np.array(inst.target.entries, dtype=np.int64)
    coef_sets = [(1,)] * inst.k if unit_coeffs else [tuple(range(1, p))] * inst.k
    head = [range(len(c)) for c in inst.classes[:-1]]
    last = mats[-1]
    for prefix in itertools.product(*head):
        for cpre in itertools.product(*coef_sets[:-1]):
            partial = np.zeros_like(target)
            for i, (j, c) in enumerate(zip(prefix, cpre)):
                partial = partial + c * mats[i][j]
            for c_last in coef_sets[-1]:
                hits = np.flatnonzero(((partial + c_last * last) % p == target).all(axis=1))
                for j_last in hits:
                    yield prefix + (int(j_last),), cpre + (c_last,)


def has_colored_solution(inst: ColoredMldInstance, unit_coeffs: bool = False,
                         budget: Optional[int] = None) -> bool:
    return next(iter_colored_solutions(inst, unit_coeffs, budget), None) is not None


def exact_mld_min(inst, size_cap: Optional[int] = None, budget: Optional[int] = None,
                  allow_empty: bool = False) -> Optional[MldSolution]:
    """Minimum-weight witness, or None if nothing of size <= size_cap exists.

    Flat instances: distinct indices with F_p^+ coefficients. Colored instances
    are searched in the restricted shape only (one coefficient-1 pick per class,
    size exactly k); flatten them first for the unrestricted minimum.
    With ``allow_empty`` a zero target is matched by the empty selection.
    """
    budget = default_budget() if budget is None else budget
    if isinstance(inst, ColoredMldInstance):
        for idx, coeffs in iter_colored_solutions(inst, unit_coeffs=True, budget=budget):
            w = Witness(tuple(Pick(i, j, c) for i, (j, c) in enumerate(zip(idx, coeffs))))
            return MldSolution(inst.k, w)
        return None
    if not isinstance(inst, MldInstance):
        raise InputError(f"unsupported instance type {type(inst).__name__}")
    if allow_empty and inst.target.is_zero():
        return MldSolution(0, Witness(()))
    for idx, coeffs in iter_mld_solutions(inst, size_cap, budget):
        w = Witness(tuple(Pick(None, i, c) for i, c in zip(idx, coeffs)))
        if not verify_witness(inst, w).valid:
            raise AssertionError("oracle produced a non-verifying witness")
        return MldSolution(len(idx), w)
    return None


@dataclass(frozen=True)
class NcpSolution:
    distance: int
    coeffs: tuple


def exact_ncp_min(inst: NcpInstance, budget: Optional[int] = None) -> NcpSolution:
    """Minimum Hamming distance from target to the span of the generators.

    Generators are first reduced to an independent subset; dropped generators
    get coefficient 0 in the returned optimum.
    """
    budget = default_budget() if budget is None else budget
    p = inst.p
    keep = independent_rows(FpMatrix(inst.field, inst.generators, inst.m))
    r = len(keep)
    cost = p**r
    if cost > budget:
        raise BudgetError(f"codeword enumeration needs {cost}, budget {budget}",
                          required=cost, budget=budget)
    t = np.array(inst.target.entries, dtype=np.int64)
    if r == 0:
        return NcpSolution(int(np.count_nonzero(t)), (0,) * inst.n)
    g = _matrix([inst.generators[i] for i in keep])
    best = None
    best_c = None
    allc = itertools.product(range(p), repeat=r)
    chunk = max(1, _CHUNK_ELEMS // max(1, inst.m))
    while True:
        block = list(itertools.islice(allc, chunk))
        if not block:
            break
        c = np.array(block, dtype=np.int64)
        dist = np.count_nonzero((t - c @ g) % p, axis=1)
        i = int(np.argmin(dist))
        if best is None or dist[i] < best:
            best = int(dist[i])
            best_c = block[i]
    full = [0] * inst.n
    for pos, i in enumerate(keep):
        full[i] = int(best_c[pos])
    return NcpSolution(best, tuple(full))


YES = "YES"
NO_AT_GAMMA = "NO_AT_GAMMA"
NEITHER = "NEITHER"
BUDGET_EXCEEDED = "BUDGET_EXCEEDED"


@dataclass(frozen=True)
class GapReportCard:
    instance_id: str
    k: int
    gamma: float
    exact_min: Optional[int]
    classification: str
    witness: Optional[Witness]
    size_cap: int
    # True when size_cap covers every vector, so "no solution" is global
    exhaustive: bool


def instance_id(inst) -> str:
    from .io import canonical_bytes

    return hashlib.sha256(canonical_bytes(inst)).hexdigest()[:16]


def certify_gap(inst, k: int, gamma, budget: Optional[int] = None) -> GapReportCard:
    """Classify an instance against the (k, gamma) promise by exact search.

    Colored instances are flattened first: the NO condition quantifies over
    arbitrary nonzero-coefficient selections.
    """
    from .gap import colored_to_uncolored

    flat = colored_to_uncolored(inst) if isinstance(inst, ColoredMldInstance) else inst
    g = as_fraction(gamma)
    cap = min(floor_frac(g * k) + 1, flat.num_vectors())
    iid = instance_id(inst)
    exhaustive = cap >= flat.num_vectors()
    try:
        sol = exact_mld_min(flat, size_cap=cap, budget=budget)
    except BudgetError:
        return GapReportCard(iid, k, gamma, None, BUDGET_EXCEEDED, None, cap, exhaustive)
    if sol is None:
        return GapReportCard(iid, k, gamma, None, NO_AT_GAMMA, None, cap, exhaustive)
    if sol.weight <= k:
        cls = YES
    elif sol.weight > g * k:
        cls = NO_AT_GAMMA
    else:
        cls = NEITHER
    return GapReportCard(iid, k, gamma, sol.weight, cls, sol.witness, cap, exhaustive)
