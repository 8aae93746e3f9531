"""Teaching sets, distinguishing sets, TD and TD+.

Concepts are compared by extension: a concept never has to be told apart from
a duplicate of itself.
"""

from __future__ import annotations

from .core import INF, ConceptClass, Sample
from .hitting import minimal_hitting_set


def _competitors(cls: ConceptClass, i: int) -> list:
    cls.check_index(i)
    target = cls[i].elements
    return [cls[j].elements for j in cls.distinct() if cls[j].elements != target]


def difference_constraints(cls: ConceptClass, i: int, positive: bool = False) -> list:
    """One constraint per distinct competitor.

    For TD it is the symmetric difference with the target; for TD+ only target
    elements missing from the competitor count, and an empty constraint means
    the competitor contains the target.
    """
    others = _competitors(cls, i)
    target = cls[i].elements
    if positive:
        return [target - other for other in others]
    return [target ^ other for other in others]


def _check_subset(cls, d):
    d = frozenset(d)
    bad = [x for x in d if x not in cls.domain]
    if bad:
        raise ValueError(f"element {min(bad)} outside domain of size {cls.domain.size}")
    return d


def is_distinguishing_set(cls: ConceptClass, i: int, d) -> bool:
    d = _check_subset(cls, d)
    others = _competitors(cls, i)
    mine = cls[i].elements & d
    return all(other & d != mine for other in others)


def teaching_dimension(cls: ConceptClass, i: int) -> tuple:
    """(TD of concept i, a minimum teaching set).

    The witness labels the lexicographically least minimum distinguishing set
    by membership in the target.
    """
    hs = minimal_hitting_set(difference_constraints(cls, i))
    return hs.size, Sample.labelled_by(hs.witness, cls[i].elements)


def is_minimal_distinguishing_set(cls: ConceptClass, i: int, d) -> bool:
    d = _check_subset(cls, d)
    if not is_distinguishing_set(cls, i, d):
        return False
    # supersets of distinguishing sets distinguish, so minimality is a size test
    return teaching_dimension(cls, i)[0] == len(d)


def td_at_most(cls: ConceptClass, i: int, d: int) -> bool:
    """Is there a distinguishing set of size <= d?  Only d >= 1 is accepted;
    for d = 0 ask ``is_distinguishing_set(cls, i, ())``."""
    if d < 1:
        raise ValueError("td_at_most needs d >= 1")
    return teaching_dimension(cls, i)[0] <= d


def positive_teaching_dimension(cls: ConceptClass, i: int) -> tuple:
    """(TD+ of concept i, a minimum positive teaching set), or (INF, None)."""
    hs = minimal_hitting_set(difference_constraints(cls, i, positive=True))
    if hs is None:
        return INF, None
    return hs.size, Sample.from_sets(positive=hs.witness)


def td_of_class(cls: ConceptClass) -> int:
    return max(teaching_dimension(cls, i)[0] for i in cls.distinct())


def tdplus_of_class(cls: ConceptClass):
    return max(positive_teaching_dimension(cls, i)[0] for i in cls.distinct())


def td_against(target: frozenset, others, positive: bool = False):
    """TD (or TD+) of ``target`` against an explicit collection of competitor sets.

    Used by the sequence solvers, which work on raw subfamilies.
    """
    if positive:
        cons = [target - o for o in others if o != target]
    else:
        cons = [target ^ o for o in others if o != target]
    hs = minimal_hitting_set(cons)
    return INF if hs is None else hs.size
