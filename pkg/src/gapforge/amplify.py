"""Gap amplification by composing an outer MLD instance with an inner one.

Every outer vector v_i gets its own copy of the inner dimension, holding -t
there, and each copy block carries all inner vectors. Selecting v_i therefore
forces an inner solution inside block i.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional

from .errors import BudgetError, InputError
from .field import FpVector
from .instances import MldInstance, Pick, Witness

DIM_LIMIT = 10**5
VECTOR_LIMIT = 10**5


@dataclass(frozen=True)
class AmplifyReport:
    k1: int
    k2: int
    k_prime: int
    gamma1: Optional[float]
    gamma2: Optional[float]
    gamma_prime: Optional[float]
    m1: int
    m2: int
    n1: int
    n2: int
    out_dim: int
    amplifying: Optional[bool]

    def to_json(self) -> dict:
        return {"type": "amplify_report", **asdict(self)}


def amplified_gamma(gamma_outer: float, gamma_inner: float, k_inner: int) -> float:
    return gamma_outer * gamma_inner * (1 - 1 / k_inner)


def compose_amplify(outer: MldInstance, inner: MldInstance,
                    gamma_outer: Optional[float] = None,
                    gamma_inner: Optional[float] = None):
    """Compose (V, s, k2) with (U, t, k1); the result has parameter k2 + k1*k2.

    Vector order: outer vectors first, then block 0 inner vectors, block 1, ...
    """
    if outer.field != inner.field:
        raise InputError(f"field mismatch: {outer.field} vs {inner.field}")
    field = outer.field
    nv, nu = outer.num_vectors(), inner.num_vectors()
    m2, m1 = outer.d, inner.d
    out_dim = m2 + nv * m1
    count = nv + nv * nu
    if out_dim > DIM_LIMIT or count > VECTOR_LIMIT:
        raise BudgetError(f"composition needs dim {out_dim} and {count} vectors "
                          f"(limits {DIM_LIMIT}, {VECTOR_LIMIT})", required=out_dim * count)
    neg_t = (-inner.target).entries
    vecs = []
    for i, v in enumerate(outer.vectors):
        x = list(v.entries) + [0] * (nv * m1)
        x[m2 + i * m1:m2 + (i + 1) * m1] = neg_t
        vecs.append(FpVector(field, tuple(x)))
    for i in range(nv):
        pre = (0,) * (m2 + i * m1)
        post = (0,) * ((nv - i - 1) * m1)
        for u in inner.vectors:
            vecs.append(FpVector(field, pre + u.entries + post))
    target = FpVector(field, outer.target.entries + (0,) * (nv * m1))
    k1, k2 = inner.k, outer.k
    k_prime = k2 + k1 * k2
    out = MldInstance(field, out_dim, k_prime, tuple(vecs), target)
    gp = None
    amp = None
    if gamma_outer is not None and gamma_inner is not None:
        gp = amplified_gamma(gamma_outer, gamma_inner, k1)
        amp = gp > max(gamma_outer, gamma_inner)
    report = AmplifyReport(k1=k1, k2=k2, k_prime=k_prime, gamma1=gamma_inner, gamma2=gamma_outer,
                           gamma_prime=gp, m1=m1, m2=m2, n1=nu, n2=nv, out_dim=out_dim,
                           amplifying=amp)
    return out, report


def compose_witness(outer: MldInstance, inner: MldInstance,
                    outer_w: Witness, inner_w: Witness) -> Witness:
    """Witness for the composition: each chosen v_i plus the inner witness scaled by its coefficient."""
    p = outer.field.p
    nv, nu = outer.num_vectors(), inner.num_vectors()
    picks = []
    for pk in sorted(outer_w.picks, key=lambda q: q.index):
        picks.append(Pick(None, pk.index, pk.coeff))
    for pk in sorted(outer_w.picks, key=lambda q: q.index):
        base = nv + pk.index * nu
        for ik in inner_w.picks:
            picks.append(Pick(None, base + ik.index, (ik.coeff * pk.coeff) % p))
    return Witness(tuple(picks))


def amplification_schedule(k: int, gamma: float, target_gamma: float, max_steps: int = 64) -> list:
    """Parameter chain of repeated self-composition, without building instances."""
    reports = []
    cur_k, cur_g = k, gamma
    for _ in range(max_steps):
        if cur_g >= target_gamma:
            break
        new_g = amplified_gamma(cur_g, cur_g, cur_k)
        reports.append((cur_k, cur_g, cur_k + cur_k * cur_k, new_g))
        cur_k, cur_g = cur_k + cur_k * cur_k, new_g
        if cur_g <= 1:
            break
    return reports


def amplify_to_gamma(inst: MldInstance, base, target_gamma: float):
    """Self-compose until the claimed gap reaches target_gamma.

    ``base`` is the (k, gamma) promise the input is known to satisfy. Raises
    BudgetError carrying the partial report chain when the dimension limit is
    hit or the claimed gap collapses to <= 1.
    """
    k, gamma = base
    if gamma <= 1:
        raise InputError("base gamma must exceed 1")
    if k < 2:
        raise InputError("base k must be at least 2")
    if inst.k != k:
        inst = MldInstance(inst.field, inst.d, k, inst.vectors, inst.target)
    reports = []
    cur, cur_g = inst, gamma
    while cur_g < target_gamma:
        nv, d = cur.num_vectors(), cur.d
        if d + nv * d > DIM_LIMIT or nv + nv * nv > VECTOR_LIMIT:
            raise BudgetError(f"next composition exceeds limits (dim {d + nv * d}, "
                              f"{nv + nv * nv} vectors)", reports=reports)
        cur, rep = compose_amplify(cur, cur, cur_g, cur_g)
        reports.append(rep)
        cur_g = rep.gamma_prime
        if cur_g <= 1:
            raise BudgetError(f"claimed gap collapsed to {cur_g:.4f} <= 1; "
                              f"target {target_gamma} unreachable", reports=reports)
    return cur, reports
