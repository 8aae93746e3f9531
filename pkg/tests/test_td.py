import pytest

from teachdim.core import INF, ConceptClass, consistent
from teachdim.oracles import brute_td_class
from teachdim.td import (difference_constraints, is_distinguishing_set,
                         is_minimal_distinguishing_set, positive_teaching_dimension, td_at_most,
                         td_of_class, tdplus_of_class, teaching_dimension)


def singletons(n):
    """{} and {1}, ..., {n} over domain {0..n}."""
    return ConceptClass.from_sets([set()] + [{i} for i in range(1, n + 1)], domain_size=n + 1)


def test_distinguishing_examples():
    c = ConceptClass.from_sets([{1}, {2}])
    assert is_distinguishing_set(c, 0, {1})
    assert is_distinguishing_set(c, 0, range(c.domain.size))
    assert is_distinguishing_set(ConceptClass.from_sets([{3}]), 0, ())
    assert not is_distinguishing_set(c, 0, {0})


def test_distinguishing_input_errors():
    c = ConceptClass.from_sets([{1}, {2}])
    with pytest.raises(IndexError):
        is_distinguishing_set(c, 5, {1})
    with pytest.raises(ValueError):
        is_distinguishing_set(c, 0, {7})


def test_minimal_distinguishing_examples():
    c = ConceptClass.from_sets([{1}, {2}])
    assert is_minimal_distinguishing_set(c, 0, {1})
    assert is_minimal_distinguishing_set(ConceptClass.from_sets([{1}]), 0, ())
    assert not is_minimal_distinguishing_set(c, 0, {1, 2})


def test_td_at_most_examples():
    assert td_at_most(ConceptClass.from_sets([{1}, {2}]), 0, 1)
    c = singletons(3)
    assert not td_at_most(c, 0, 2)
    assert td_at_most(c, 0, 3)
    with pytest.raises(ValueError):
        td_at_most(c, 0, 0)


@pytest.mark.parametrize("n", [1, 2, 5])
def test_singletons_family(n):
    c = singletons(n)
    assert teaching_dimension(c, 0)[0] == n
    assert all(teaching_dimension(c, i)[0] == 1 for i in range(1, n + 1))


def test_single_concept_class():
    c = ConceptClass.from_sets([{0, 1}])
    size, witness = teaching_dimension(c, 0)
    assert size == 0 and len(witness) == 0
    assert positive_teaching_dimension(c, 0)[0] == 0


def test_positive_examples():
    c = ConceptClass.from_sets([{1}, {1, 2}])
    assert positive_teaching_dimension(c, 0) == (INF, None)
    assert positive_teaching_dimension(c, 1)[0] == 1
    assert tdplus_of_class(c) == INF


def test_class_values():
    assert td_of_class(singletons(3)) == 3
    c = ConceptClass.from_sets([{1}, {2}])
    assert td_of_class(c) == tdplus_of_class(c) == 1


def test_witness_labels_by_membership():
    c = ConceptClass.from_sets([{0, 1}, {1}, {0}])
    size, w = teaching_dimension(c, 0)
    assert size == 2 and w.positive == {0, 1} and not w.negative


def test_duplicates_are_one_concept():
    c = ConceptClass.from_sets([{1}, {1}, {2}])
    assert teaching_dimension(c, 0)[0] == 1
    assert difference_constraints(c, 0) == [frozenset({1, 2})]
    assert is_distinguishing_set(ConceptClass.from_sets([{1}, {1}]), 0, ())


def test_gadget_style_positive_pair():
    # {x} (+) (W | {i}) against the rest of its row: two positive examples suffice
    from teachdim.lab.descriptors import Cofinite
    from teachdim.lab.gadgets import build_t1_gadget
    c = build_t1_gadget(Cofinite({2}), 0, 4, 6, companions=[(1, Cofinite())])
    i = c.index_of("H[x=0,i=2]")
    size, w = positive_teaching_dimension(c, i)
    assert size == 2 and w.positive == {0, 5}


def test_against_brute_force_small():
    c = ConceptClass.from_sets([{0, 1}, {1, 2}, {2}, set(), {0, 2}], domain_size=3)
    for i in range(len(c)):
        for pos in (False, True):
            fn = positive_teaching_dimension if pos else teaching_dimension
            assert fn(c, i)[0] == brute_td_class(c, i, pos)
            w = fn(c, i)[1]
            if w is not None:
                assert consistent(c[i], w)
                assert not any(consistent(o, w) for o in c.sets if o != c[i].elements)
