import random

import pytest

from teachdim.core import ConceptClass, disjoint_union
from teachdim.lab.gadgets import build_lk_gadget
from teachdim.oracles import brute_rtd, brute_rtd1plus, random_class
from teachdim.rtd import (BoundExceeded, TeachingSequence, canonical_sequence, rtd1plus,
                          rtd1plus_at_most, rtd_exact, validate_sequence)


def singletons(n):
    return ConceptClass.from_sets([set()] + [{i} for i in range(1, n + 1)], domain_size=n + 1)


def test_greedy_examples():
    ok, plan = rtd1plus_at_most(singletons(3), 1)
    assert ok and plan.order == (1, 2, 3, 0) and plan.dims == (1, 1, 1, 0)
    ok, plan = rtd1plus_at_most(ConceptClass.from_sets([{1}, {1, 2}]), 0)
    assert not ok and plan.remainder == (0, 1)
    with pytest.raises(ValueError):
        rtd1plus_at_most(singletons(2), -1)


def test_rtd1plus_examples():
    assert rtd1plus(ConceptClass.from_sets([{1}, {2}, {3}]))[0] == 1
    chain = ConceptClass.from_sets([{1}, {1, 2}, {1, 2, 3}])
    value, plan = rtd1plus(chain)
    assert value == 1 and plan.order == (2, 1, 0)
    assert rtd1plus(ConceptClass.from_sets([{4}]))[0] == 0


def test_disjoint_union_within_bounds():
    a = ConceptClass.from_sets([{1}, {2}])
    b = ConceptClass.from_sets([{0}, {0, 1}])
    u = disjoint_union([a, b])
    assert rtd1plus(a)[0] == rtd1plus(b)[0] == 1
    assert rtd1plus(u)[0] in (1, 2)


def test_canonical_examples():
    seq = canonical_sequence(ConceptClass.from_sets([{3}]))
    assert len(seq) == 1 and seq.order == 0
    assert canonical_sequence(ConceptClass.from_sets([{1}, {1, 2}])).order == 1


def test_rtd_exact_examples():
    assert rtd_exact(singletons(3)) == 1
    assert rtd_exact(ConceptClass.from_sets([{1}, {2}])) == 1
    with pytest.raises(BoundExceeded):
        rtd_exact(ConceptClass.from_sets([{i} for i in range(9)]))


def test_lk_with_single_multiplicity_has_order_one():
    c = build_lk_gadget(2, 1)
    assert brute_rtd1plus(c.sets) == 1
    assert rtd1plus(c)[0] == 1


def test_validate_reports_partition_errors():
    c = singletons(2)
    assert "appears in blocks" in validate_sequence(c, TeachingSequence((((0, 1), 1), ((1, 2), 1)))).problem
    check = validate_sequence(c, TeachingSequence((((0, 1), 1),)))
    assert not check.valid and "index 2" in check.problem
    assert "out of range" in validate_sequence(c, TeachingSequence((((0, 1, 2, 7), 1),))).problem
    assert "empty" in validate_sequence(c, TeachingSequence((((), 1), ((0, 1, 2), 1)))).problem


def test_validate_checks_declared_orders():
    c = singletons(2)
    good = TeachingSequence((((1, 2), 1), ((0,), 0)))
    assert validate_sequence(c, good).valid
    bad = TeachingSequence((((1, 2), 2), ((0,), 0)))
    assert not validate_sequence(c, bad).valid
    # a positive block may declare more than it needs, up to each member's size
    chain = ConceptClass.from_sets([{1, 2, 3}, {1}])
    assert validate_sequence(chain, TeachingSequence((((0,), 3), ((1,), 0))), positive=True).valid
    over = validate_sequence(chain, TeachingSequence((((0,), 4), ((1,), 0))), positive=True)
    assert not over.valid and "exceeds" in over.problem
    under = validate_sequence(chain, TeachingSequence((((1,), 1), ((0,), 0))), positive=True)
    assert not under.valid and "no positive teaching set" in under.problem


def test_duplicates_ride_along_in_plans():
    c = ConceptClass.from_sets([{1}, {2}, {1}])
    value, plan = rtd1plus(c)
    seq = plan.as_sequence(c)
    assert value == 1 and sorted(i for b, _ in seq.blocks for i in b) == [0, 1, 2]
    assert validate_sequence(c, seq, positive=True).valid


def test_random_against_brute():
    rng = random.Random(21)
    for _ in range(30):
        c = random_class(rng, 5, 5)
        for pos in (False, True):
            exact = rtd_exact(c, pos)
            assert exact == brute_rtd(c.sets, pos)
            seq = canonical_sequence(c, pos)
            assert seq.order >= exact
            assert validate_sequence(c, seq, pos).valid
        value, plan = rtd1plus(c)
        assert value == brute_rtd1plus(c.sets)
        assert rtd_exact(c, True) <= value
