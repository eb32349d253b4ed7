import pytest
from hypothesis import given, settings

from gapforge.errors import BudgetError
from gapforge.field import FpVector, PrimeField
from gapforge.instances import ColoredMldInstance, MldInstance, NcpInstance, gen_planted_yes, verify_witness
from gapforge.oracles import (BUDGET_EXCEEDED, NEITHER, NO_AT_GAMMA, YES, certify_gap,
                              exact_mld_min, exact_ncp_min, iter_mld_solutions,
                              search_cost)

import brute
from strategies import mld_instances, ncp_instances

F2, F3 = PrimeField(2), PrimeField(3)


def v(f, *e):
    return FpVector(f, tuple(e))


def flat(f, vecs, t, k=1):
    return MldInstance(f, len(t), k, tuple(v(f, *x) for x in vecs), v(f, *t))


def test_mld_examples():
    sol = exact_mld_min(flat(F2, [(1, 0), (0, 1), (1, 1)], (1, 1)))
    assert sol.weight == 1 and sol.witness.picks[0].index == 2
    assert exact_mld_min(flat(F2, [(1, 0), (0, 1)], (1, 1))).weight == 2
    ident = flat(F3, [(1, 0), (0, 1)], (0, 0))
    assert exact_mld_min(ident) is None
    assert exact_mld_min(ident, size_cap=1) is None
    assert exact_mld_min(ident, allow_empty=True).weight == 0


def test_mld_size_cap():
    inst = flat(F2, [(1, 0), (0, 1)], (1, 1))
    assert exact_mld_min(inst, size_cap=1) is None


def test_mld_budget():
    inst = flat(F3, [(1, 0, 0)] * 12, (1, 1, 1))
    assert search_cost(12, 3, 12) == 3**12  # sum of C(12,s) 2^s over s <= 12
    with pytest.raises(BudgetError):
        exact_mld_min(inst, budget=1000)


@settings(max_examples=200, deadline=None)
@given(mld_instances())
def test_mld_matches_brute(inst):
    sol = exact_mld_min(inst)
    expect = brute.mld_min([x.entries for x in inst.vectors], inst.target.entries, inst.p)
    assert (sol.weight if sol else None) == expect
    if sol:
        assert verify_witness(inst, sol.witness).valid


@settings(max_examples=50, deadline=None)
@given(mld_instances(primes=(2, 3), max_n=5))
def test_iter_solutions_complete(inst):
    # every yielded solution verifies, and the count matches brute enumeration
    import itertools

    got = list(iter_mld_solutions(inst))
    n, p, d = inst.num_vectors(), inst.p, inst.d
    count = 0
    for s in range(1, n + 1):
        for idx in itertools.combinations(range(n), s):
            for cs in itertools.product(range(1, p), repeat=s):
                if brute.vec_sum([inst.vectors[i].entries for i in idx], cs, p, d) == inst.target.entries:
                    count += 1
    assert len(got) == count
    assert len(set((tuple(i), tuple(c)) for i, c in got)) == count


def test_colored_restricted_mode():
    cls = ((v(F3, 1, 0), v(F3, 2, 0)), (v(F3, 0, 1),))
    inst = ColoredMldInstance(F3, 2, 2, cls, v(F3, 2, 1))
    sol = exact_mld_min(inst)
    assert sol.weight == 2
    assert [(p.cls, p.index, p.coeff) for p in sol.witness.picks] == [(0, 1, 1), (1, 0, 1)]
    # 2*(1,0) + (0,1) would need coefficient 2: not the restricted shape
    inst2 = ColoredMldInstance(F3, 2, 2, ((v(F3, 1, 0),), (v(F3, 0, 1),)), v(F3, 2, 1))
    assert exact_mld_min(inst2) is None


def test_ncp_examples():
    ident = NcpInstance(F2, 2, (v(F2, 1, 0), v(F2, 0, 1)), v(F2, 1, 1), 1)
    assert exact_ncp_min(ident).distance == 0
    sol = exact_ncp_min(NcpInstance(F2, 3, (v(F2, 1, 1, 0),), v(F2, 0, 1, 1), 1))
    assert sol.distance == 2
    zero = NcpInstance(F3, 3, (v(F3, 0, 0, 0),), v(F3, 1, 0, 2), 1)
    assert exact_ncp_min(zero).distance == 2


@settings(max_examples=150, deadline=None)
@given(ncp_instances())
def test_ncp_matches_brute(inst):
    sol = exact_ncp_min(inst)
    assert sol.distance == brute.ncp_min([g.entries for g in inst.generators],
                                         inst.target.entries, inst.p)
    cw = [0] * inst.m
    for c, g in zip(sol.coeffs, inst.generators):
        for j in range(inst.m):
            cw[j] = (cw[j] + c * g.entries[j]) % inst.p
    assert sum(1 for a, b in zip(cw, inst.target.entries) if a != b) == sol.distance


def test_ncp_budget():
    gens = tuple(FpVector.unit(F3, 12, i) for i in range(12))
    with pytest.raises(BudgetError):
        exact_ncp_min(NcpInstance(F3, 12, gens, FpVector.zeros(F3, 12), 1), budget=100)


def test_certify_examples():
    inst, _ = gen_planted_yes(2, 2, 4, 2, 3)
    card = certify_gap(inst, 2, 1.4)
    assert card.classification == YES and card.exact_min <= 2
    # minimum 2 with k=1: NEITHER once gamma*k reaches 2, NO below that
    ne = flat(F2, [(1, 0), (0, 1), (1, 0)], (1, 1))
    assert certify_gap(ne, 1, 2.5).classification == NEITHER
    assert certify_gap(ne, 1, 2).classification == NEITHER
    assert certify_gap(ne, 1, 1.5).classification == NO_AT_GAMMA


def test_certify_no_solution_and_budget():
    ident = flat(F3, [(1, 0), (0, 1)], (0, 0))
    card = certify_gap(ident, 1, 1.5)
    assert card.classification == NO_AT_GAMMA and card.exact_min is None
    assert card.size_cap == 2 and card.exhaustive
    big = flat(F3, [(1, 0, 0)] * 12, (1, 1, 1), k=6)
    assert certify_gap(big, 6, 1.5, budget=100).classification == BUDGET_EXCEEDED


def test_certify_cap():
    inst = flat(F2, [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)], (1, 1, 1, 1), k=2)
    card = certify_gap(inst, 2, 1.25)
    assert card.size_cap == 3 and card.exact_min is None
    assert card.classification == NO_AT_GAMMA and not card.exhaustive
