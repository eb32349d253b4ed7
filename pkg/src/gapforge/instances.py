"""MLD / colored MLD / NCP instances, witnesses, and seeded instance generators."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .errors import InputError, NoInstanceFound
from .field import FpVector, PrimeField, linear_combine
from .rng import CounterRng


def _check_vectors(field: PrimeField, d: int, vectors, where: str):
    for i, v in enumerate(vectors):
        if not isinstance(v, FpVector):
            raise InputError(f"{where}[{i}] is not an FpVector")
        if v.field != field:
            raise InputError(f"{where}[{i}]: field {v.field}, expected {field}")
        if v.dim != d:
            raise InputError(f"{where}[{i}]: dimension {v.dim}, expected {d}")


@dataclass(frozen=True)
class ColoredMldInstance:
    field: PrimeField
    d: int
    k: int
    classes: tuple
    target: FpVector

    def __post_init__(self):
        classes = tuple(tuple(c) for c in self.classes)
        object.__setattr__(self, "classes", classes)
        if self.k < 1:
            raise InputError("k must be at least 1")
        if len(classes) != self.k:
            raise InputError(f"k={self.k} but {len(classes)} classes given")
        for i, cls in enumerate(classes):
            if not cls:
                raise InputError(f"class {i} is empty")
            _check_vectors(self.field, self.d, cls, f"classes[{i}]")
        _check_vectors(self.field, self.d, [self.target], "target")

    @property
    def p(self) -> int:
        return self.field.p

    def class_sizes(self) -> list:
        return [len(c) for c in self.classes]

    def num_vectors(self) -> int:
        return sum(len(c) for c in self.classes)


@dataclass(frozen=True)
class MldInstance:
    field: PrimeField
    d: int
    k: int
    vectors: tuple
    target: FpVector

    def __post_init__(self):
        vectors = tuple(self.vectors)
        object.__setattr__(self, "vectors", vectors)
        if self.k < 1:
            raise InputError("k must be at least 1")
        if not vectors:
            raise InputError("vector multiset is empty")
        _check_vectors(self.field, self.d, vectors, "vectors")
        _check_vectors(self.field, self.d, [self.target], "target")

    @property
    def p(self) -> int:
        return self.field.p

    def num_vectors(self) -> int:
        return len(self.vectors)


@dataclass(frozen=True)
class NcpInstance:
    field: PrimeField
    m: int
    generators: tuple
    target: FpVector
    k: int

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise InputError("need at least one generator")
        if self.k < 0:
            raise InputError("k must be nonnegative")
        _check_vectors(self.field, self.m, gens, "generators")
        _check_vectors(self.field, self.m, [self.target], "target")

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def n(self) -> int:
        return len(self.generators)


@dataclass(frozen=True)
class Pick:
    cls: Optional[int]
    index: int
    coeff: int


@dataclass(frozen=True)
class Witness:
    """A selection of (vector, nonzero coefficient) pairs.

    ``cls`` is the color class for colored instances and None for flat ones.
    """

    picks: tuple

    def __post_init__(self):
        picks = tuple(p if isinstance(p, Pick) else Pick(*p) for p in self.picks)
        object.__setattr__(self, "picks", picks)
        seen = set()
        for pk in picks:
            if pk.coeff == 0:
                raise InputError("witness coefficients must be nonzero")
            key = (pk.cls, pk.index)
            if key in seen:
                raise InputError(f"vector {key} picked twice")
            seen.add(key)

    @property
    def weight(self) -> int:
        return len(self.picks)


Instance = Union[ColoredMldInstance, MldInstance]


@dataclass(frozen=True)
class WitnessCheck:
    valid: bool
    weight: int
    # colored only: one pick per class, every coefficient 1
    restricted_shape: Optional[bool] = None


def resolve_pick(inst: Instance, pk: Pick) -> FpVector:
    if isinstance(inst, ColoredMldInstance):
        if pk.cls is None or not 0 <= pk.cls < inst.k:
            raise InputError(f"class index {pk.cls} out of range for k={inst.k}")
        cls = inst.classes[pk.cls]
        if not 0 <= pk.index < len(cls):
            raise InputError(f"index {pk.index} out of range for class {pk.cls} of size {len(cls)}")
        return cls[pk.index]
    if pk.cls is not None:
        raise InputError("flat instance witness must not carry class indices")
    if not 0 <= pk.index < len(inst.vectors):
        raise InputError(f"index {pk.index} out of range for {len(inst.vectors)} vectors")
    return inst.vectors[pk.index]


def verify_witness(inst: Instance, w: Witness) -> WitnessCheck:
    vecs = [resolve_pick(inst, pk) for pk in w.picks]
    p = inst.field.p
    for pk in w.picks:
        if pk.coeff % p == 0 or not 0 < pk.coeff < p:
            raise InputError(f"coefficient {pk.coeff} is not in F_{p}^+")
    total = linear_combine(vecs, [pk.coeff for pk in w.picks], inst.field, inst.d)
    valid = total == inst.target
    shape = None
    if isinstance(inst, ColoredMldInstance):
        shape = (sorted(pk.cls for pk in w.picks) == list(range(inst.k))
                 and all(pk.coeff == 1 for pk in w.picks))
    return WitnessCheck(valid=valid, weight=w.weight, restricted_shape=shape)


def _random_vectors(rng: CounterRng, field: PrimeField, count: int, d: int) -> list:
    flat = rng.integers(field.p, count * d).tolist()
    return [FpVector(field, tuple(flat[i * d:(i + 1) * d])) for i in range(count)]


def gen_planted_yes(p: int, k: int, d: int, n: int, seed: int):
    """Random colored instance with a planted one-per-class, coefficient-1 solution."""
    if d < 1 or n < 1 or k < 1:
        raise InputError("need d, n, k >= 1")
    field = PrimeField(p)
    rng = CounterRng(seed)
    classes = [_random_vectors(rng, field, n, d) for _ in range(k)]
    chosen = [rng.randbelow(n) for _ in range(k)]
    target = linear_combine([classes[i][chosen[i]] for i in range(k)], [1] * k, field, d)
    inst = ColoredMldInstance(field, d, k, tuple(tuple(c) for c in classes), target)
    wit = Witness(tuple(Pick(i, chosen[i], 1) for i in range(k)))
    return inst, wit


NO_ORACLE_LIMIT = 10**7


def gen_certified_no(p: int, k: int, d: int, n: int, seed: int, max_attempts: int = 1000):
    """Rejection-sample a colored instance with no one-per-class F_p^+ solution."""
    from .oracles import has_colored_solution

    if d < 1 or n < 1 or k < 1:
        raise InputError("need d, n, k >= 1")
    if n**k * (p - 1) ** k > NO_ORACLE_LIMIT:
        raise InputError(f"oracle budget n^k (p-1)^k = {n**k * (p - 1)**k} exceeds {NO_ORACLE_LIMIT}")
    field = PrimeField(p)
    rng = CounterRng(seed)
    for _ in range(max_attempts):
        classes = [_random_vectors(rng, field, n, d) for _ in range(k)]
        target = _random_vectors(rng, field, 1, d)[0]
        inst = ColoredMldInstance(field, d, k, tuple(tuple(c) for c in classes), target)
        if not has_colored_solution(inst, unit_coeffs=False):
            return inst
    raise NoInstanceFound(f"no NO-instance found after {max_attempts} attempts", max_attempts)


def gen_random_mld(p: int, k: int, d: int, n: int, seed: int) -> MldInstance:
    """Flat instance with uniform vectors and target (status unknown)."""
    field = PrimeField(p)
    rng = CounterRng(seed)
    vecs = _random_vectors(rng, field, n, d)
    target = _random_vectors(rng, field, 1, d)[0]
    return MldInstance(field, d, k, tuple(vecs), target)


def gen_random_ncp(p: int, n: int, m: int, k: int, seed: int) -> NcpInstance:
    field = PrimeField(p)
    rng = CounterRng(seed)
    gens = _random_vectors(rng, field, n, m)
    target = _random_vectors(rng, field, 1, m)[0]
    return NcpInstance(field, m, tuple(gens), target, k)
