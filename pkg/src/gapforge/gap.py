"""Gap-creating reduction for colored MLD.

``build_gap_bipartite`` attaches a codeword one-hot pattern to every input
vector (A side) and enumerates, per code coordinate, every k-tuple of symbols
with negated one-hots (B side). ``duplicate_stretch`` then copies the A side
into w = m/k disjoint dimension blocks so that a YES solution costs exactly
2m picks while any NO solution costs at least (3/2 - eps) * 2m.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field
from typing import Optional

from .codes import Code, build_random_code, merge_code, random_code_params
from .errors import BudgetError, InputError
from .field import FpVector
from .instances import ColoredMldInstance, MldInstance, Pick, Witness

B_SIDE_LIMIT = 10**6
ENTRY_LIMIT = 5 * 10**7


@dataclass(frozen=True)
class Layout:
    """Block offsets of the bipartite output (all indices 0-based)."""

    d: int
    k: int
    m: int
    sigma: int

    @property
    def D(self) -> int:
        return self.d + self.m * self.k * self.sigma + self.k + self.m

    @property
    def block2(self) -> int:
        return self.d

    def sub_block(self, j: int) -> int:
        return self.d + j * self.k * self.sigma

    def mini_block(self, j: int, i: int) -> int:
        return self.sub_block(j) + i * self.sigma

    @property
    def block3(self) -> int:
        return self.d + self.m * self.k * self.sigma

    @property
    def block4(self) -> int:
        return self.block3 + self.k


@dataclass(frozen=True)
class BipartiteGapOutput:
    layout: Layout
    a_classes: tuple
    b_classes: tuple
    target: FpVector
    code: Code
    # assignment[i][v] = index of the codeword given to vector v of class i
    assignment: tuple

    def as_instance(self) -> ColoredMldInstance:
        """Classes A_1..A_k followed by B_1..B_m."""
        lay = self.layout
        return ColoredMldInstance(self.target.field, lay.D, lay.k + lay.m,
                                  self.a_classes + self.b_classes, self.target)


def sigma_tuple_index(sig, sigma: int) -> int:
    """Position of a symbol tuple in lexicographic enumeration of [sigma]^k."""
    idx = 0
    for s in sig:
        idx = idx * sigma + s
    return idx


def build_gap_bipartite(inst: ColoredMldInstance, code: Code) -> BipartiteGapOutput:
    field = inst.field
    p = field.p
    k, d = inst.k, inst.d
    sigma, m = code.sigma, code.m
    need = max(inst.class_sizes())
    if len(code) < need:
        raise InputError(f"code has {len(code)} words but the largest class has {need} vectors")
    if sigma**k > B_SIDE_LIMIT:
        raise BudgetError(f"sigma^k = {sigma**k} exceeds {B_SIDE_LIMIT}",
                          required=sigma**k, budget=B_SIDE_LIMIT)
    lay = Layout(d, k, m, sigma)
    D = lay.D
    total = (inst.num_vectors() + m * sigma**k) * D
    if total > ENTRY_LIMIT:
        raise BudgetError(f"bipartite output needs {total} entries, limit {ENTRY_LIMIT}",
                          required=total, budget=ENTRY_LIMIT)
    a_classes = []
    assignment = []
    for i, cls in enumerate(inst.classes):
        vecs = []
        for vi, v in enumerate(cls):
            x = [0] * D
            x[:d] = v.entries
            word = code.words[vi]
            for j in range(m):
                x[lay.mini_block(j, i) + word[j]] = 1
            x[lay.block3 + i] = 1
            vecs.append(FpVector(field, tuple(x)))
        a_classes.append(tuple(vecs))
        assignment.append(tuple(range(len(cls))))
    minus_one = p - 1
    b_classes = []
    for j in range(m):
        vecs = []
        for sig in itertools.product(range(sigma), repeat=k):
            x = [0] * D
            for i, s in enumerate(sig):
                x[lay.mini_block(j, i) + s] = minus_one
            x[lay.block4 + j] = 1
            vecs.append(FpVector(field, tuple(x)))
        b_classes.append(tuple(vecs))
    t = [0] * D
    t[:d] = inst.target.entries
    for i in range(k):
        t[lay.block3 + i] = 1
    for j in range(m):
        t[lay.block4 + j] = 1
    return BipartiteGapOutput(lay, tuple(a_classes), tuple(b_classes),
                              FpVector(field, tuple(t)), code, tuple(assignment))


def canonical_witness(bip: BipartiteGapOutput, yes_witness: Witness) -> Witness:
    """Lift a one-per-class coefficient-1 input witness to the bipartite output.

    Classes are numbered as in ``BipartiteGapOutput.as_instance``.
    """
    lay = bip.layout
    chosen = _restricted_choice(yes_witness, lay.k)
    words = [bip.code.words[bip.assignment[i][chosen[i]]] for i in range(lay.k)]
    picks = [Pick(i, chosen[i], 1) for i in range(lay.k)]
    for j in range(lay.m):
        sig = tuple(words[i][j] for i in range(lay.k))
        picks.append(Pick(lay.k + j, sigma_tuple_index(sig, lay.sigma), 1))
    return Witness(tuple(picks))


def _restricted_choice(w: Witness, k: int) -> list:
    chosen = [None] * k
    for pk in w.picks:
        if pk.cls is None or not 0 <= pk.cls < k or pk.coeff != 1 or chosen[pk.cls] is not None:
            raise InputError("witness must pick one vector per class with coefficient 1")
        chosen[pk.cls] = pk.index
    if any(c is None for c in chosen):
        raise InputError("witness must pick one vector per class with coefficient 1")
    return chosen


def duplicate_stretch(bip: BipartiteGapOutput) -> ColoredMldInstance:
    """Copy the A side into w = m/k disjoint D-blocks; repeat B vectors and target w times."""
    lay = bip.layout
    k, m, D = lay.k, lay.m, lay.D
    if m % k:
        raise InputError(f"k={k} does not divide m={m}")
    w = m // k
    total = (sum(len(c) for c in bip.a_classes) * w + sum(len(c) for c in bip.b_classes)) * w * D
    if total > ENTRY_LIMIT:
        raise BudgetError(f"stretched output needs {total} entries, limit {ENTRY_LIMIT}",
                          required=total, budget=ENTRY_LIMIT)
    field = bip.target.field
    classes = []
    for l in range(w):
        pre = (0,) * (l * D)
        post = (0,) * ((w - l - 1) * D)
        for i in range(k):
            classes.append(tuple(FpVector(field, pre + a.entries + post) for a in bip.a_classes[i]))
    for j in range(m):
        classes.append(tuple(FpVector(field, b.entries * w) for b in bip.b_classes[j]))
    target = FpVector(field, bip.target.entries * w)
    return ColoredMldInstance(field, w * D, 2 * m, tuple(classes), target)


def stretch_witness(bip: BipartiteGapOutput, canonical: Witness) -> Witness:
    """Map a canonical bipartite witness to the stretched instance (weight 2m)."""
    lay = bip.layout
    k, m = lay.k, lay.m
    w = m // k
    by_cls = {pk.cls: pk.index for pk in canonical.picks}
    picks = []
    for l in range(w):
        for i in range(k):
            picks.append(Pick(l * k + i, by_cls[i], 1))
    for j in range(m):
        picks.append(Pick(w * k + j, by_cls[k + j], 1))
    return Witness(tuple(picks))


@dataclass(frozen=True)
class ReductionReport:
    p: int
    k: int
    k_prime: int
    d: int
    D_prime: int
    sigma: int
    m: int
    w: int
    epsilon: float
    c: float
    seed: Optional[int]
    r: Optional[int]
    g: int
    code: Code
    code_source: str = "random"
    extra: dict = dc_field(default_factory=dict)

    def to_json(self) -> dict:
        from .io import to_json

        params = {"p": self.p, "k": self.k, "k_prime": self.k_prime, "d": self.d,
                  "D_prime": self.D_prime, "sigma": self.sigma, "m": self.m, "w": self.w,
                  "epsilon": self.epsilon, "c": self.c, "seed": self.seed, "r": self.r,
                  "g": self.g, "code_source": self.code_source}
        params.update(self.extra)
        return {"type": "gap_report", "params": params, "code": to_json(self.code)}

    @classmethod
    def from_json(cls, doc: dict) -> "ReductionReport":
        from .io import from_json

        params = dict(doc["params"])
        names = ["p", "k", "k_prime", "d", "D_prime", "sigma", "m", "w", "epsilon", "c",
                 "seed", "r", "g", "code_source"]
        core = {n: params.pop(n) for n in names}
        return cls(code=from_json(doc["code"]), extra=params, **core)


def merge_arity(n: int, k: int, sigma: int) -> int:
    """Largest g with sigma^(g k) <= n: merging g coordinates keeps |Sigma|^k polynomial in n."""
    g = 1
    while sigma ** ((g + 1) * k) <= n:
        g += 1
    return g


def gap_reduce(inst: ColoredMldInstance, c, epsilon, seed: int,
               code: Optional[Code] = None, sigma: Optional[int] = None,
               m: Optional[int] = None):
    """Random code -> optional merge -> bipartite construction -> duplication.

    Passing ``code`` skips the random code construction. Passing both ``sigma``
    and ``m`` draws a seeded random code of that shape instead of using the
    parameter formula; either way is how desk-scale runs stay within budget.
    """
    n = max(inst.class_sizes())
    k = inst.k
    extra = {}
    if code is None and (sigma is None) != (m is None):
        raise InputError("sigma and m must be given together")
    if code is None and sigma is not None:
        if m % k:
            raise InputError(f"k={k} does not divide m={m}")
        code = build_random_code(n, sigma, m, seed)
        g = 1
        r = max(1, math.ceil(math.log(max(n, 2)) / math.log(sigma))) if sigma > 1 else None
        source = "random-fixed"
    elif code is None:
        params = random_code_params(max(n, 2), k, c, epsilon)
        g = merge_arity(n, k, params.sigma)
        m_base = -(-params.m // (g * k)) * (g * k)
        base = build_random_code(n, params.sigma, m_base, seed)
        code = merge_code(base, g)
        r = params.r
        source = "random"
        extra = {"sigma_base": params.sigma, "m_base": m_base}
    else:
        if code.m % k:
            raise InputError(f"k={k} does not divide code length m={code.m}")
        g = 1
        r = max(1, math.ceil(math.log(max(n, 2)) / math.log(code.sigma))) if code.sigma > 1 else None
        source = "given"
    bip = build_gap_bipartite(inst, code)
    out = duplicate_stretch(bip)
    w = code.m // k
    report = ReductionReport(p=inst.p, k=k, k_prime=out.k, d=inst.d, D_prime=out.d,
                             sigma=code.sigma, m=code.m, w=w, epsilon=float(epsilon), c=c,
                             seed=seed, r=r, g=g, code=code, code_source=source, extra=extra)
    return out, report


def lift_yes_witness(inst: ColoredMldInstance, witness: Witness, code: Code) -> Witness:
    """Witness of weight 2m for the gap_reduce output built with ``code``."""
    bip = build_gap_bipartite(inst, code)
    return stretch_witness(bip, canonical_witness(bip, witness))


def colored_to_uncolored(inst: ColoredMldInstance) -> MldInstance:
    flat = tuple(v for cls in inst.classes for v in cls)
    return MldInstance(inst.field, inst.d, inst.k, flat, inst.target)


def flatten_witness(inst: ColoredMldInstance, w: Witness) -> Witness:
    offsets = [0]
    for size in inst.class_sizes():
        offsets.append(offsets[-1] + size)
    return Witness(tuple(Pick(None, offsets[pk.cls] + pk.index, pk.coeff) for pk in w.picks))


def split_solution(bip: BipartiteGapOutput, flat_indices) -> tuple:
    """Count how many flat indices of ``bip.as_instance()`` fall on the A side and B side."""
    n_a = sum(len(c) for c in bip.a_classes)
    a = sum(1 for i in flat_indices if i < n_a)
    return a, len(flat_indices) - a
