"""Extended teaching dimension (XTD) and its positive variant (XTD+)."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .core import INF, ConceptClass
from .hitting import minimal_hitting_set

EXHAUSTIVE_BOUND = 22


class BoundExceeded(ValueError):
    pass


def min_specifying_set(cls: ConceptClass, hypothesis) -> tuple:
    """Smallest S such that at most one concept agrees with ``hypothesis`` on S.

    Returns (size, S).  The concept allowed to survive is chosen to minimize
    |S|; ties go to the lexicographically least S.
    """
    hyp = frozenset(hypothesis)
    bad = [x for x in hyp if x not in cls.domain]
    if bad:
        raise ValueError(f"hypothesis element {min(bad)} outside domain")
    diffs = [cls[j].elements ^ hyp for j in cls.distinct()]
    if any(not d for d in diffs):
        # the hypothesis is a member; that member is the only possible survivor
        hs = minimal_hitting_set([d for d in diffs if d])
        return hs.size, hs.witness
    best = None
    for skip in range(len(diffs)):
        hs = minimal_hitting_set(diffs[:skip] + diffs[skip + 1:])
        key = (hs.size, sorted(hs.witness))
        if best is None or key < best:
            best = key
    return best[0], frozenset(best[1])


@dataclass(frozen=True)
class XtdResult:
    value: int
    hypothesis: frozenset
    specifying_set: frozenset
    exact: bool = True


def _hypotheses(support, exhaustive, samples, seed):
    support = sorted(support)
    if exhaustive:
        for r in range(len(support) + 1):
            for comb in combinations(support, r):
                yield frozenset(comb)
    else:
        rng = random.Random(seed)
        for _ in range(samples):
            yield frozenset(x for x in support if rng.random() < 0.5)


def worst_hypothesis(cls: ConceptClass, exhaustive: bool = True, samples: int = 1000,
                     seed: int = 0, bound: int = EXHAUSTIVE_BOUND) -> XtdResult:
    """XTD together with a hypothesis attaining it.

    Only hypotheses inside the support of the class need checking: an element
    no concept contains already specifies any hypothesis holding it with a
    single instance.  Sampling mode returns a lower bound flagged ``exact=False``.
    """
    support = cls.support()
    if exhaustive and len(support) > bound:
        raise BoundExceeded(
            f"exhaustive XTD needs support <= {bound} elements, class has {len(support)}")
    best = None
    for hyp in _hypotheses(support, exhaustive, samples, seed):
        size, spec = min_specifying_set(cls, hyp)
        if best is None or size > best[0]:
            best = (size, hyp, spec)
    return XtdResult(best[0], best[1], best[2], exact=exhaustive)


def xtd_of_class(cls: ConceptClass, exhaustive: bool = True, samples: int = 1000,
                 seed: int = 0, bound: int = EXHAUSTIVE_BOUND) -> int:
    return worst_hypothesis(cls, exhaustive, samples, seed, bound).value


@dataclass(frozen=True)
class XtdPlusReport:
    """Outcome of the pairwise equal-or-disjoint test behind XTD+.

    When the value is infinite, ``pair`` holds two overlapping distinct
    concepts and ``element`` a shared element: the hypothesis {element} has no
    positive specifying set.
    """

    value: float
    pair: tuple | None = None
    element: int | None = None

    def specifying_set(self, hypothesis) -> frozenset | None:
        """A positive specifying set for a nonempty hypothesis (finite case only)."""
        hyp = frozenset(hypothesis)
        if self.value == INF or not hyp:
            return None
        return frozenset() if self.value == 0 else frozenset([min(hyp)])


def xtdplus_of_class(cls: ConceptClass) -> XtdPlusReport:
    reps = cls.distinct()
    for a, i in enumerate(reps):
        for j in reps[a + 1:]:
            common = cls[i].elements & cls[j].elements
            if common:
                return XtdPlusReport(INF, (i, j), min(common))
    return XtdPlusReport(0 if len(reps) <= 1 else 1)
