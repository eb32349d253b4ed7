import itertools

import pytest
from hypothesis import given, settings, strategies as st

from gapforge.errors import InputError
from gapforge.field import (FpMatrix, FpVector, PrimeField, independent_rows, is_prime,
                            linear_combine, rank, row_reduce, solve_linear)

PRIMES = [2, 3, 5, 7, 11, 13]


def vec(p, *entries):
    return FpVector(PrimeField(p), tuple(entries))


def mat(p, rows):
    return FpMatrix.from_rows(PrimeField(p), [tuple(r) for r in rows])


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@pytest.mark.parametrize("bad", [0, 1, 4, 9, 2**31 + 11])
def test_field_rejects(bad):
    with pytest.raises(InputError):
        PrimeField(bad)


def test_vector_range_check():
    with pytest.raises(InputError):
        vec(3, 0, 3)
    assert FpVector.of(PrimeField(3), [4, -1]).entries == (1, 2)


def test_linear_combine_examples():
    assert linear_combine([vec(2, 1, 0), vec(2, 0, 1)], [1, 1]) == vec(2, 1, 1)
    assert linear_combine([vec(3, 1, 2), vec(3, 2, 1)], [2, 1]) == vec(3, 1, 2)
    assert linear_combine([], [], PrimeField(5), 3) == vec(5, 0, 0, 0)


def test_linear_combine_mismatch():
    with pytest.raises(InputError):
        linear_combine([vec(3, 1, 2), vec(3, 1)], [1, 1])
    with pytest.raises(InputError):
        linear_combine([vec(3, 1, 2), vec(5, 1, 2)], [1, 1])
    with pytest.raises(InputError):
        linear_combine([vec(3, 1, 2)], [1, 1])


def test_solve_linear_examples():
    assert solve_linear(mat(2, [(1, 0), (0, 1)]), vec(2, 1, 1)) == (1, 1)
    assert solve_linear(mat(2, [(1, 1)]), vec(2, 1, 0)) is None
    assert solve_linear(mat(3, [(1, 2), (0, 1)]), vec(3, 2, 2)) == (2, 1)


def test_solve_linear_exhaustive_f3():
    # independent oracle: try all 9 coefficient pairs
    basis = [(1, 2), (0, 1)]
    hits = [c for c in itertools.product(range(3), repeat=2)
            if tuple((c[0] * basis[0][j] + c[1] * basis[1][j]) % 3 for j in range(2)) == (2, 2)]
    assert hits == [(2, 1)]


def test_independent_rows_examples():
    assert independent_rows(mat(2, [(1, 0), (0, 1), (1, 1)])) == [0, 1]
    assert independent_rows(mat(2, [(0, 0)])) == []
    assert independent_rows(mat(5, [(1, 2), (2, 4), (0, 1)])) == [0, 2]


def test_solve_linear_dim_mismatch():
    with pytest.raises(InputError):
        solve_linear(mat(3, [(1, 2)]), vec(3, 1, 2, 0))


@st.composite
def field_elems(draw):
    p = draw(st.sampled_from(PRIMES))
    a, b, c = (draw(st.integers(0, p - 1)) for _ in range(3))
    return PrimeField(p), a, b, c


@given(field_elems())
def test_field_axioms(fe):
    f, a, b, c = fe
    assert f.add(a, b) == f.add(b, a)
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.add(a, f.neg(a)) == 0
    assert f.sub(f.add(a, b), b) == a
    if a:
        assert f.mul(a, f.inv(a)) == 1


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    p = draw(st.sampled_from(PRIMES[:4]))
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(1, max_cols))
    rows = [tuple(draw(st.integers(0, p - 1)) for _ in range(c)) for _ in range(r)]
    return p, rows, c


@settings(max_examples=150)
@given(matrices(), st.data())
def test_solve_linear_sound_and_complete(m, data):
    p, rows, c = m
    f = PrimeField(p)
    basis = FpMatrix(f, tuple(FpVector(f, r) for r in rows), c)
    coeffs = [data.draw(st.integers(0, p - 1)) for _ in rows]
    reachable = linear_combine(basis.rows, coeffs, f, c)
    sol = solve_linear(basis, reachable)
    assert sol is not None
    assert linear_combine(basis.rows, sol, f, c) == reachable
    t = FpVector(f, tuple(data.draw(st.integers(0, p - 1)) for _ in range(c)))
    sol = solve_linear(basis, t)
    if len(rows) <= 4:
        brute = any(linear_combine(basis.rows, cs, f, c) == t
                    for cs in itertools.product(range(p), repeat=len(rows)))
        assert (sol is not None) == brute


@settings(max_examples=150)
@given(matrices())
def test_independent_rows_is_basis(m):
    p, rows, c = m
    f = PrimeField(p)
    full = FpMatrix(f, tuple(FpVector(f, r) for r in rows), c)
    keep = independent_rows(full)
    assert keep == sorted(keep)
    sub = FpMatrix(f, tuple(full.rows[i] for i in keep), c)
    assert rank(sub) == len(keep) == rank(full)
    for r in full.rows:
        assert solve_linear(sub, r) is not None


@settings(max_examples=100)
@given(matrices())
def test_row_reduce_transform(m):
    p, rows, c = m
    f = PrimeField(p)
    red, pivots, transform = row_reduce(f, [list(r) for r in rows], c)
    vrows = [FpVector(f, r) for r in rows]
    for i, piv in enumerate(pivots):
        assert red[i][piv] == 1
        assert all(red[j][piv] == 0 for j in range(len(red)) if j != i)
        assert linear_combine(vrows, transform[i], f, c).entries == tuple(red[i])
    assert pivots == sorted(pivots)
