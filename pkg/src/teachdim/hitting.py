"""Exact minimum hitting set over small instances.

Every TD-style quantity reduces to this: a teaching set must hit the set of
elements that separate the target from each competitor.  Elements are mapped to
bit positions in increasing order, so comparing sorted position tuples is the
same as comparing sorted element tuples.

Search is iterative deepening on the witness size.  Inside one size bound the
DFS emits candidates as increasing tuples in lexicographic order, so the first
hit is the lexicographically least minimum witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class HittingSet:
    size: int
    witness: frozenset
    exact: bool = True


class _NodeLimit(Exception):
    pass


def _reduce(masks):
    """Drop duplicate constraints and those that contain another constraint."""
    kept = []
    for m in sorted(set(masks), key=lambda m: (m.bit_count(), m)):
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def _packing_bound(masks, allowed):
    """Size of a greedy family of pairwise disjoint constraints (a lower bound)."""
    used = 0
    count = 0
    for m in sorted((m & allowed for m in masks), key=int.bit_count):
        if not m & used:
            used |= m
            count += 1
    return count


def _search(masks, nbits, limit):
    full = (1 << nbits) - 1
    nodes = [0]

    def dfs(unhit, last, budget, chosen):
        if not unhit:
            return chosen
        if budget == 0:
            return None
        nodes[0] += 1
        if limit is not None and nodes[0] > limit:
            raise _NodeLimit
        # every unhit constraint still needs an element above ``last``;
        # the next pick can't exceed the smallest of their maxima
        hi = min(m.bit_length() - 1 for m in unhit)
        cand = 0
        for m in unhit:
            cand |= m
        cand &= full & ~((1 << (last + 1)) - 1) & ((1 << (hi + 1)) - 1)
        while cand:
            low = cand & -cand
            p = low.bit_length() - 1
            cand ^= low
            rest = [m for m in unhit if not m & low]
            above = full & ~((1 << (p + 1)) - 1)
            if any(not (m & above) for m in rest):
                continue
            if _packing_bound(rest, above) > budget - 1:
                continue
            found = dfs(rest, p, budget - 1, chosen + (p,))
            if found is not None:
                return found
        return None

    k = _packing_bound(masks, full)
    while True:
        found = dfs(masks, -1, k, ())
        if found is not None:
            return found
        k += 1


def greedy_hitting_set(constraints: Iterable[Iterable[int]]) -> HittingSet | None:
    """Pick the element hitting most open constraints (ties: smallest).  Not exact."""
    open_ = [frozenset(c) for c in constraints]
    if any(not c for c in open_):
        return None
    chosen = set()
    while open_:
        counts = {}
        for c in open_:
            for x in c:
                counts[x] = counts.get(x, 0) + 1
        best = min(counts, key=lambda x: (-counts[x], x))
        chosen.add(best)
        open_ = [c for c in open_ if best not in c]
    return HittingSet(len(chosen), frozenset(chosen), exact=False)


def minimal_hitting_set(constraints: Iterable[Iterable[int]],
                        node_limit: int | None = None) -> HittingSet | None:
    """Minimum-size set meeting every constraint, lexicographically least among those.

    Returns None when some constraint is empty (no hitting set exists).  With
    ``node_limit`` set, a search that runs past the limit falls back to the
    greedy heuristic and the result carries ``exact=False``.
    """
    cons = [frozenset(c) for c in constraints]
    if any(not c for c in cons):
        return None
    if not cons:
        return HittingSet(0, frozenset())
    elements = sorted(set().union(*cons))
    pos = {x: i for i, x in enumerate(elements)}
    masks = _reduce([sum(1 << pos[x] for x in c) for c in cons])
    try:
        found = _search(masks, len(elements), node_limit)
    except _NodeLimit:
        return greedy_hitting_set(cons)
    return HittingSet(len(found), frozenset(elements[p] for p in found))
