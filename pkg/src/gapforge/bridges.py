"""Value-preserving reductions between MLD and NCP, and the unit-coefficient gadget."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ._util import as_fraction, ceil_frac
from .errors import InputError
from .field import FpMatrix, FpVector, independent_rows, linear_combine, row_reduce, solve_linear
from .instances import ColoredMldInstance, MldInstance, NcpInstance, Witness


@dataclass(frozen=True)
class BridgeReport:
    direction: str
    n: int
    length: int
    gamma: Optional[float]
    k: int
    out_vectors: int
    out_length: int
    replication: Optional[int] = None
    kept: tuple = ()
    dropped: tuple = ()
    # column_order[new_pos] = original coordinate
    column_order: tuple = ()
    # transform[i] expresses systematic row i over the kept generators
    transform: tuple = ()

    def to_json(self) -> dict:
        return {"type": "bridge_report", "direction": self.direction, "n": self.n,
                "length": self.length, "gamma": self.gamma, "k": self.k,
                "out_vectors": self.out_vectors, "out_length": self.out_length,
                "replication": self.replication, "kept": list(self.kept),
                "dropped": list(self.dropped), "column_order": list(self.column_order),
                "transform": [list(r) for r in self.transform]}


def replication_count(gamma, k: int) -> int:
    return ceil_frac(as_fraction(gamma) * k)


def mld_to_ncp(inst: MldInstance, gamma) -> NcpInstance:
    """v_i -> v_i repeated ceil(gamma k) times, then e_i; t -> t repeated, then 0^n."""
    if as_fraction(gamma) < 1:
        raise InputError("gamma must be at least 1")
    reps = replication_count(gamma, inst.k)
    n = inst.num_vectors()
    field = inst.field
    gens = []
    for i, v in enumerate(inst.vectors):
        tail = [0] * n
        tail[i] = 1
        gens.append(FpVector(field, v.entries * reps + tuple(tail)))
    target = FpVector(field, inst.target.entries * reps + (0,) * n)
    return NcpInstance(field, reps * inst.d + n, tuple(gens), target, inst.k)


def mld_to_ncp_report(inst: MldInstance, gamma, out: NcpInstance) -> BridgeReport:
    return BridgeReport("mld-to-ncp", inst.num_vectors(), inst.d, float(gamma), inst.k,
                        out.n, out.m, replication=replication_count(gamma, inst.k))


def ncp_to_mld(inst: NcpInstance):
    """Project an NCP instance onto the complement of a systematic basis.

    The generators are reduced to an independent subset, brought to reduced
    echelon form, and coordinates are reordered so the pivot columns come first;
    each basis row then reads e_i o v_i. The output vectors are v_1..v_n and the
    unit vectors of F_p^(m-n).
    """
    field = inst.field
    p = field.p
    keep = independent_rows(FpMatrix(field, inst.generators, inst.m))
    dropped = tuple(i for i in range(inst.n) if i not in set(keep))
    n = len(keep)
    m = inst.m
    if n >= m:
        raise InputError(f"codimension zero: rank {n} >= length {m}; the MLD image is degenerate")
    rows = [list(inst.generators[i].entries) for i in keep]
    red, pivots, transform = row_reduce(field, rows, m)
    if len(pivots) != n:
        raise AssertionError("independent generators lost rank during elimination")
    pivot_set = set(pivots)
    order = tuple(pivots) + tuple(c for c in range(m) if c not in pivot_set)
    systematic = [[r[c] for c in order] for r in red]
    for i, r in enumerate(systematic):
        if r[:n] != [1 if j == i else 0 for j in range(n)]:
            raise AssertionError("no systematic form after column reordering")
    tails = [FpVector(field, tuple(r[n:])) for r in systematic]
    t_perm = [inst.target.entries[c] for c in order]
    # t' = t_Q - sum_i t_P[i] v_i, so that (0^n o t') - t_perm lies in the span
    t_prime = FpVector(field, tuple(t_perm[n:])) - linear_combine(
        tails, t_perm[:n], field, m - n)
    sys_rows = FpMatrix(field, tuple(FpVector(field, tuple(r)) for r in systematic), m)
    diff = FpVector(field, (0,) * n + t_prime.entries) - FpVector(field, tuple(t_perm))
    if solve_linear(sys_rows, diff) is None:
        raise AssertionError("shifted target left the code span")
    units = [FpVector.unit(field, m - n, j) for j in range(m - n)]
    out = MldInstance(field, m - n, max(inst.k, 1), tuple(tails + units), t_prime)
    report = BridgeReport("ncp-to-mld", inst.n, m, None, inst.k, len(tails) + len(units), m - n,
                          kept=tuple(keep), dropped=dropped, column_order=order,
                          transform=tuple(tuple(r) for r in transform))
    return out, report


def ncp_coeffs_from_mld_witness(inst: NcpInstance, report: BridgeReport, w: Witness) -> tuple:
    """Generator coefficients whose codeword lies at distance w.weight from the NCP target."""
    p = inst.field.p
    n = len(report.kept)
    t_pivot = [inst.target.entries[c] for c in report.column_order[:n]]
    sys_c = list(t_pivot)
    for pk in w.picks:
        if pk.index < n:
            sys_c[pk.index] = (sys_c[pk.index] + pk.coeff) % p
    coeffs = [0] * inst.n
    for i, ci in enumerate(sys_c):
        if ci:
            for j, tj in enumerate(report.transform[i]):
                coeffs[report.kept[j]] = (coeffs[report.kept[j]] + ci * tj) % p
    return tuple(coeffs)


def force_unit_coefficients(inst: ColoredMldInstance) -> ColoredMldInstance:
    """Append e_i to every vector of class i and 1_k to the target."""
    field = inst.field
    k = inst.k
    classes = []
    for i, cls in enumerate(inst.classes):
        tag = tuple(1 if j == i else 0 for j in range(k))
        classes.append(tuple(FpVector(field, v.entries + tag) for v in cls))
    target = FpVector(field, inst.target.entries + (1,) * k)
    return ColoredMldInstance(field, inst.d + k, k, tuple(classes), target)
