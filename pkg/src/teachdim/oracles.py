"""Brute-force reference implementations.

Nothing here goes through the hitting-set engine: every quantity is obtained
by enumerating candidate samples, orderings or partitions directly from the
definitions.  Exponential, so only for small classes.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations, permutations

from .core import INF, ConceptClass, Sample, consistent


def _distinct(sets):
    out = []
    for s in sets:
        s = frozenset(s)
        if s not in out:
            out.append(s)
    return out


def brute_td(sets, target, positive=False):
    """Smallest teaching set size for ``target`` by enumerating samples by size."""
    target = frozenset(target)
    others = [s for s in _distinct(sets) if s != target]
    pool = sorted(target) if positive else sorted(set().union(target, *others))
    for k in range(len(pool) + 1):
        for inst in combinations(pool, k):
            sample = Sample.labelled_by(inst, target)
            if not any(consistent(o, sample) for o in others):
                return k
    return INF


def brute_td_class(cls: ConceptClass, i: int, positive=False):
    return brute_td(cls.sets, cls[i].elements, positive)


def brute_rtd1plus(sets):
    """Least order over all orderings of the distinct concepts."""
    sets = _distinct(sets)

    @lru_cache(maxsize=None)
    def cost(target, rest):
        return brute_td(rest, target, positive=True)

    best = INF
    for perm in permutations(sets):
        worst = 0
        for pos in range(len(perm)):
            worst = max(worst, cost(perm[pos], frozenset(perm[pos:])))
            if worst >= best:
                break
        best = min(best, worst)
    return best


def brute_rtd1plus_at_most(sets, n):
    return brute_rtd1plus(sets) <= n


def ordered_partitions(items):
    """All ordered set partitions of ``items`` (as tuples of tuples)."""
    items = list(items)
    if not items:
        yield ()
        return
    k = len(items)
    for mask in range(1, 1 << k):
        block = tuple(items[i] for i in range(k) if mask >> i & 1)
        rest = [items[i] for i in range(k) if not mask >> i & 1]
        for tail in ordered_partitions(rest):
            yield (block,) + tail


def brute_rtd(sets, positive=False):
    """Least order over every ordered partition of the distinct concepts."""
    sets = _distinct(sets)

    @lru_cache(maxsize=None)
    def cost(target, rest):
        return brute_td(rest, target, positive)

    best = INF
    for part in ordered_partitions(sets):
        worst = 0
        for b, block in enumerate(part):
            rest = frozenset(s for blk in part[b:] for s in blk)
            worst = max(worst, max(cost(t, rest) for t in block))
        best = min(best, worst)
    return best


def brute_min_specifying(sets, hypothesis, domain_size):
    hyp = frozenset(hypothesis)
    sets = _distinct(sets)
    for k in range(domain_size + 1):
        for s in combinations(range(domain_size), k):
            s = frozenset(s)
            if sum(1 for c in sets if c & s == hyp & s) <= 1:
                return k
    raise AssertionError("the whole domain always specifies")


def _all_subsets(domain_size):
    for k in range(domain_size + 1):
        for comb in combinations(range(domain_size), k):
            yield frozenset(comb)


def brute_xtd(sets, domain_size):
    return max(brute_min_specifying(sets, h, domain_size) for h in _all_subsets(domain_size))


def brute_xtdplus(sets, domain_size):
    """Worst case over nonempty hypotheses of the least positive specifying set."""
    sets = _distinct(sets)
    worst = 0
    for hyp in _all_subsets(domain_size):
        if not hyp:
            continue
        best = INF
        for k in range(len(hyp) + 1):
            if any(sum(1 for c in sets if frozenset(s) <= c) <= 1
                   for s in combinations(sorted(hyp), k)):
                best = k
                break
        worst = max(worst, best)
    return worst


def random_class(rng: random.Random, max_concepts: int, max_domain: int,
                 density: float | None = None) -> ConceptClass:
    """A random class with 1..max_concepts concepts over a domain of 1..max_domain."""
    n = rng.randint(1, max_domain)
    k = rng.randint(1, max_concepts)
    p = rng.uniform(0.15, 0.75) if density is None else density
    sets = [frozenset(x for x in range(n) if rng.random() < p) for _ in range(k)]
    return ConceptClass.from_sets(sets, domain_size=n)
