"""Arithmetic and linear algebra over prime fields F_p."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InputError

MAX_MODULUS = 2**31


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or isinstance(self.p, bool):
            raise InputError(f"p must be an integer, got {self.p!r}")
        if not is_prime(self.p):
            raise InputError(f"p must be prime, got {self.p}")
        if self.p >= MAX_MODULUS:
            raise InputError(f"p must be below 2^31, got {self.p}")

    def __repr__(self):
        return f"F{self.p}"

    def reduce(self, a: int) -> int:
        return a % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, -1, self.p)

    def nonzero(self) -> range:
        return range(1, self.p)


@dataclass(frozen=True)
class FpVector:
    field: PrimeField
    entries: tuple

    def __post_init__(self):
        p = self.field.p
        ent = tuple(self.entries)
        for x in ent:
            if not 0 <= x < p:
                raise InputError(f"entry {x} out of field range [0, {p})")
        object.__setattr__(self, "entries", ent)

    @classmethod
    def of(cls, field: PrimeField, values) -> "FpVector":
        """Build from arbitrary integers, reducing mod p."""
        return cls(field, tuple(int(v) % field.p for v in values))

    @classmethod
    def zeros(cls, field: PrimeField, dim: int) -> "FpVector":
        return cls(field, (0,) * dim)

    @classmethod
    def unit(cls, field: PrimeField, dim: int, i: int) -> "FpVector":
        e = [0] * dim
        e[i] = 1
        return cls(field, tuple(e))

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def _check(self, other: "FpVector"):
        if other.field != self.field:
            raise InputError(f"field mismatch: {self.field} vs {other.field}")
        if other.dim != self.dim:
            raise InputError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: "FpVector") -> "FpVector":
        self._check(other)
        p = self.field.p
        return FpVector(self.field, tuple((a + b) % p for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "FpVector") -> "FpVector":
        self._check(other)
        p = self.field.p
        return FpVector(self.field, tuple((a - b) % p for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "FpVector":
        p = self.field.p
        return FpVector(self.field, tuple((-a) % p for a in self.entries))

    def scale(self, c: int) -> "FpVector":
        p = self.field.p
        return FpVector(self.field, tuple((c * a) % p for a in self.entries))

    def concat(self, *others: "FpVector") -> "FpVector":
        ent = list(self.entries)
        for o in others:
            if o.field != self.field:
                raise InputError(f"field mismatch: {self.field} vs {o.field}")
            ent.extend(o.entries)
        return FpVector(self.field, tuple(ent))

    def weight(self) -> int:
        return sum(1 for a in self.entries if a)

    def is_zero(self) -> bool:
        return not any(self.entries)


@dataclass(frozen=True)
class FpMatrix:
    field: PrimeField
    rows: tuple
    ncols: int

    def __post_init__(self):
        rows = tuple(self.rows)
        for i, r in enumerate(rows):
            if r.field != self.field:
                raise InputError(f"row {i}: field mismatch")
            if r.dim != self.ncols:
                raise InputError(f"row {i}: dimension {r.dim}, expected {self.ncols}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, field: PrimeField, rows, ncols: Optional[int] = None) -> "FpMatrix":
        vecs = tuple(r if isinstance(r, FpVector) else FpVector.of(field, r) for r in rows)
        if ncols is None:
            if not vecs:
                raise InputError("ncols required for an empty matrix")
            ncols = vecs[0].dim
        return cls(field, vecs, ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)


def linear_combine(vectors: Sequence[FpVector], coeffs: Sequence[int],
                   field: Optional[PrimeField] = None, dim: Optional[int] = None) -> FpVector:
    """Return sum(c_i * v_i) mod p.

    ``field`` and ``dim`` are needed only for the empty sum.
    """
    if len(vectors) != len(coeffs):
        raise InputError(f"{len(vectors)} vectors but {len(coeffs)} coefficients")
    if not vectors:
        if field is None or dim is None:
            raise InputError("empty combination needs an explicit field and dim")
        return FpVector.zeros(field, dim)
    f = vectors[0].field
    d = vectors[0].dim
    if field is not None and field != f:
        raise InputError(f"field mismatch: {field} vs {f}")
    if dim is not None and dim != d:
        raise InputError(f"dimension mismatch: {dim} vs {d}")
    p = f.p
    acc = [0] * d
    for v, c in zip(vectors, coeffs):
        if v.field != f:
            raise InputError(f"field mismatch: {v.field} vs {f}")
        if v.dim != d:
            raise InputError(f"dimension mismatch: {v.dim} vs {d}")
        c %= p
        if c:
            for j, a in enumerate(v.entries):
                if a:
                    acc[j] += c * a
    return FpVector(f, tuple(x % p for x in acc))


def row_reduce(field: PrimeField, rows: list, ncols: int):
    """Reduced row echelon form of a list of int lists (modified copy).

    Pivots are chosen column by column, taking the lowest-index row that has
    a nonzero entry in that column. Returns ``(rref_rows, pivot_cols, transform)``
    where ``transform[i]`` gives row i of the result as a combination of the
    input rows.
    """
    p = field.p
    a = [[x % p for x in r] for r in rows]
    nr = len(a)
    t = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]
    pivots = []
    r = 0
    for col in range(ncols):
        if r == nr:
            break
        piv = next((i for i in range(r, nr) if a[i][col]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        t[r], t[piv] = t[piv], t[r]
        inv = pow(a[r][col], -1, p)
        a[r] = [(x * inv) % p for x in a[r]]
        t[r] = [(x * inv) % p for x in t[r]]
        for i in range(nr):
            if i != r and a[i][col]:
                f = a[i][col]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
                t[i] = [(x - f * y) % p for x, y in zip(t[i], t[r])]
        pivots.append(col)
        r += 1
    return a, pivots, t


def rank(mat: FpMatrix) -> int:
    _, pivots, _ = row_reduce(mat.field, [list(r.entries) for r in mat.rows], mat.ncols)
    return len(pivots)


def solve_linear(basis: FpMatrix, target: FpVector) -> Optional[tuple]:
    """Coefficients c with sum(c_i * basis.rows[i]) == target, or None if target is outside the span."""
    if target.field != basis.field:
        raise InputError(f"field mismatch: {target.field} vs {basis.field}")
    if target.dim != basis.ncols:
        raise InputError(f"target dim {target.dim} != basis row dim {basis.ncols}")
    field = basis.field
    p = field.p
    n = basis.nrows
    # one equation per coordinate, one unknown per basis row
    system = [[basis.rows[i].entries[j] for i in range(n)] + [target.entries[j]]
              for j in range(basis.ncols)]
    red, pivots, _ = row_reduce(field, system, n + 1)
    if n in pivots:
        return None
    coeffs = [0] * n
    for row, col in zip(red, pivots):
        coeffs[col] = row[n] % p
    coeffs = tuple(coeffs)
    check = linear_combine(list(basis.rows), coeffs, field, basis.ncols)
    if check != target:
        raise AssertionError("solve_linear produced a non-solution")
    return coeffs


def independent_rows(mat: FpMatrix) -> list:
    """Indices of a maximal independent row subset, greedy in input order."""
    p = mat.field.p
    basis = []  # (pivot_col, normalized row), kept in echelon form
    keep = []
    for idx, row in enumerate(mat.rows):
        r = list(row.entries)
        for col, b in basis:
            if r[col]:
                f = r[col]
                r = [(x - f * y) % p for x, y in zip(r, b)]
        lead = next((j for j, x in enumerate(r) if x), None)
        if lead is None:
            continue
        inv = pow(r[lead], -1, p)
        r = [(x * inv) % p for x in r]
        # keep earlier basis rows reduced at the new pivot
        basis = [(c, [(x - b[lead] * y) % p for x, y in zip(b, r)] if b[lead] else b)
                 for c, b in basis]
        basis.append((lead, r))
        keep.append(idx)
    return keep
