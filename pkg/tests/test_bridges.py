from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gapforge.bridges import (force_unit_coefficients, mld_to_ncp, mld_to_ncp_report,
                              ncp_coeffs_from_mld_witness, ncp_to_mld, replication_count)
from gapforge.errors import InputError
from gapforge.field import FpMatrix, FpVector, PrimeField, rank
from gapforge.instances import ColoredMldInstance, MldInstance, NcpInstance, gen_random_ncp
from gapforge.oracles import exact_mld_min, exact_ncp_min, iter_colored_solutions

from strategies import colored_instances, mld_instances, ncp_instances

F2, F3 = PrimeField(2), PrimeField(3)


def v(f, *e):
    return FpVector(f, tuple(e))


def test_mld_to_ncp_example():
    inst = MldInstance(F2, 2, 2, (v(F2, 1, 0), v(F2, 0, 1)), v(F2, 1, 1))
    out = mld_to_ncp(inst, 1.4)
    assert out.m == 3 * 2 + 2 == 8 and out.k == 2
    assert out.generators[0] == v(F2, 1, 0, 1, 0, 1, 0, 1, 0)
    assert out.target == v(F2, 1, 1, 1, 1, 1, 1, 0, 0)
    rep = mld_to_ncp_report(inst, 1.4, out)
    assert rep.replication == 3 and rep.out_length == 8


def test_replication_integral():
    assert replication_count(1.5, 2) == 3
    assert replication_count(Fraction(7, 5), 5) == 7
    assert replication_count(1.4, 2) == 3


def test_mld_to_ncp_rejects_small_gamma():
    with pytest.raises(InputError):
        mld_to_ncp(MldInstance(F2, 1, 1, (v(F2, 1),), v(F2, 1)), 0.5)


@settings(max_examples=80, deadline=None)
@given(mld_instances(primes=(2, 3), max_d=3, max_n=4), st.sampled_from([1.3, 1.6, 2.2]))
def test_mld_to_ncp_transport(inst, gamma):
    # gamma*k is never integral here: the strict NO side needs that slack
    out = mld_to_ncp(inst, gamma)
    mld = exact_mld_min(inst, allow_empty=True)
    ncp = exact_ncp_min(out, budget=10**8).distance
    if mld is not None and mld.weight <= inst.k:
        assert ncp == mld.weight
    if mld is None or mld.weight > gamma * inst.k:
        assert ncp > gamma * inst.k


def test_mld_to_ncp_integral_boundary():
    # with gamma*k integral and a weight-1 target, c = 0 sits at distance exactly gamma*k
    inst = MldInstance(F2, 2, 1, (v(F2, 1, 1),), v(F2, 1, 0))
    assert exact_mld_min(inst) is None
    out = mld_to_ncp(inst, 2)
    assert exact_ncp_min(out).distance == 2


def test_ncp_to_mld_example():
    inst = NcpInstance(F2, 2, (v(F2, 1, 0),), v(F2, 1, 1), 1)
    out, rep = ncp_to_mld(inst)
    assert out.vectors == (v(F2, 0), v(F2, 1)) and out.target == v(F2, 1)
    assert exact_mld_min(out).weight == 1 == exact_ncp_min(inst).distance
    assert rep.out_vectors == 2 and rep.out_length == 1


def test_ncp_to_mld_systematic_read_off():
    inst = NcpInstance(F3, 4, (v(F3, 1, 0, 2, 1), v(F3, 0, 1, 1, 1)), v(F3, 0, 0, 0, 0), 1)
    out, rep = ncp_to_mld(inst)
    assert out.vectors[:2] == (v(F3, 2, 1), v(F3, 1, 1))
    assert rep.column_order == (0, 1, 2, 3)


def test_ncp_to_mld_dependent_and_permuted():
    inst = NcpInstance(F3, 3, (v(F3, 0, 1, 2), v(F3, 0, 2, 1), v(F3, 0, 0, 1)), v(F3, 1, 1, 1), 1)
    out, rep = ncp_to_mld(inst)
    assert rep.kept == (0, 2) and rep.dropped == (1,)
    assert rep.column_order == (1, 2, 0)
    assert out.d == 1 and out.num_vectors() == 3


def test_ncp_to_mld_codimension_zero():
    with pytest.raises(InputError, match="codimension zero"):
        ncp_to_mld(NcpInstance(F2, 2, (v(F2, 1, 0), v(F2, 0, 1)), v(F2, 1, 1), 1))


@settings(max_examples=150, deadline=None)
@given(ncp_instances(primes=(2, 3), max_m=5, max_n=3))
def test_ncp_to_mld_equality(inst):
    try:
        out, rep = ncp_to_mld(inst)
    except InputError:
        assert rank(FpMatrix(inst.field, inst.generators, inst.m)) >= inst.m
        return
    assert out.num_vectors() == inst.m and out.d == inst.m - len(rep.kept)
    mld = exact_mld_min(out, allow_empty=True)
    ncp = exact_ncp_min(inst).distance
    assert mld.weight == ncp
    coeffs = ncp_coeffs_from_mld_witness(inst, rep, mld.witness)
    cw = [0] * inst.m
    for c, g in zip(coeffs, inst.generators):
        for j in range(inst.m):
            cw[j] = (cw[j] + c * g.entries[j]) % inst.p
    assert sum(1 for a, b in zip(cw, inst.target.entries) if a != b) == ncp


def test_force_unit_example():
    # 2*v1 + 2*v2 = t over F_3, but v1 + v2 != t
    inst = ColoredMldInstance(F3, 2, 2, ((v(F3, 1, 0),), (v(F3, 0, 1),)), v(F3, 2, 2))
    assert any(True for _ in iter_colored_solutions(inst, unit_coeffs=False))
    out = force_unit_coefficients(inst)
    assert out.d == 4 and out.classes[0][0] == v(F3, 1, 0, 1, 0)
    assert out.target == v(F3, 2, 2, 1, 1)
    assert not any(True for _ in iter_colored_solutions(out, unit_coeffs=False))


def test_force_unit_k1():
    inst = ColoredMldInstance(F2, 1, 1, ((v(F2, 1),),), v(F2, 1))
    out = force_unit_coefficients(inst)
    assert out.classes[0][0] == v(F2, 1, 1) and out.target == v(F2, 1, 1)


@settings(max_examples=100, deadline=None)
@given(colored_instances(primes=(3, 5)))
def test_force_unit_forces_ones(inst):
    out = force_unit_coefficients(inst)
    sols = list(iter_colored_solutions(out, unit_coeffs=False))
    assert all(all(c == 1 for c in coeffs) for _, coeffs in sols)
    unit_in = {tuple(idx) for idx, _ in iter_colored_solutions(inst, unit_coeffs=True)}
    assert {tuple(idx) for idx, _ in sols} == unit_in
