"""Teaching sequences, positive teaching plans and recursive teaching dimensions.

All searches run over the distinct extensions of a class; a concept whose
extension repeats an earlier one rides along with that earlier concept.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import INF, ConceptClass
from .td import td_against

RTD_EXACT_BOUND = 8


class BoundExceeded(ValueError):
    pass


@dataclass(frozen=True)
class TeachingSequence:
    """Ordered blocks of concept indices, each with its declared order (or None)."""

    blocks: tuple

    def __post_init__(self):
        object.__setattr__(self, "blocks",
                           tuple((tuple(b), d) for b, d in self.blocks))

    @property
    def order(self):
        ds = [d for _, d in self.blocks if d is not None]
        return max(ds, default=0)

    def __len__(self):
        return len(self.blocks)


@dataclass(frozen=True)
class TeachingPlan:
    """A positive teaching plan: concepts in teaching order with their TD+ costs.

    ``remainder`` is nonempty only for a failed greedy run; it lists the
    concepts left when no remaining concept could be taught within the bound.
    """

    order: tuple
    dims: tuple
    remainder: tuple = ()

    @property
    def complete(self) -> bool:
        return not self.remainder

    @property
    def value(self):
        return max(self.dims, default=0)

    def as_sequence(self, cls: ConceptClass) -> TeachingSequence:
        groups = _duplicate_groups(cls)
        return TeachingSequence(tuple((groups[i], d) for i, d in zip(self.order, self.dims)))


@dataclass(frozen=True)
class SequenceCheck:
    valid: bool
    orders: tuple
    problem: str | None = None

    @property
    def order(self):
        return max(self.orders, default=0)


def _duplicate_groups(cls):
    """Map each representative index to all indices sharing its extension."""
    first = {}
    groups = {}
    for i, c in enumerate(cls.concepts):
        rep = first.setdefault(c.elements, i)
        groups.setdefault(rep, []).append(i)
    return {k: tuple(v) for k, v in groups.items()}


def validate_sequence(cls: ConceptClass, seq: TeachingSequence, positive: bool = False) -> SequenceCheck:
    """Check that ``seq`` partitions the class and recompute every block order.

    Negative-example sequences must declare exactly the recomputed order.  A
    positive block of order d needs, for each member L, a positive teaching set
    of size exactly d inside L w.r.t. the not-yet-taught concepts; since any
    superset inside L of a positive teaching set is again one, that holds iff
    TD+(L) <= d <= |L|.  Blocks declared with ``None`` are only recomputed.
    """
    seen = {}
    for b, (block, _) in enumerate(seq.blocks):
        if not block:
            return SequenceCheck(False, (), f"block {b} is empty")
        for i in block:
            if not 0 <= i < len(cls):
                return SequenceCheck(False, (), f"index {i} in block {b} is out of range")
            if i in seen:
                return SequenceCheck(False, (), f"index {i} appears in blocks {seen[i]} and {b}")
            seen[i] = b
    missing = [i for i in range(len(cls)) if i not in seen]
    if missing:
        return SequenceCheck(False, (), f"index {missing[0]} is not in any block")

    orders = []
    problems = []
    for b, (block, declared) in enumerate(seq.blocks):
        remaining = {cls[i].elements for blk, _ in seq.blocks[b:] for i in blk}
        d = max(td_against(cls[i].elements, remaining, positive) for i in block)
        orders.append(d)
        if d == INF:
            problems.append(f"block {b} has a concept with no positive teaching set")
        elif declared is None:
            pass
        elif not positive and d != declared:
            problems.append(f"block {b}: declared order {declared} != recomputed {d}")
        elif positive and d > declared:
            problems.append(f"block {b}: declared order {declared} < required {d}")
        elif positive and any(declared > len(cls[i]) for i in block):
            problems.append(f"block {b}: declared order {declared} exceeds a member's size")
    problem = problems[0] if problems else None
    return SequenceCheck(problem is None, tuple(orders), problem)


def rtd1plus_at_most(cls: ConceptClass, n: int) -> tuple:
    """Greedy least-index decision procedure for RTD1+ <= n.

    Repeatedly teach the remaining concept of least index whose TD+ against the
    remaining concepts is at most n.  Returns (True, plan) when every concept
    gets taught, else (False, partial plan) with the stuck remainder.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    remaining = cls.distinct()
    order, dims = [], []
    while remaining:
        rest = [cls[j].elements for j in remaining]
        for i in remaining:
            d = td_against(cls[i].elements, rest, positive=True)
            if d <= n:
                order.append(i)
                dims.append(d)
                remaining = [j for j in remaining if j != i]
                break
        else:
            return False, TeachingPlan(tuple(order), tuple(dims), tuple(remaining))
    return True, TeachingPlan(tuple(order), tuple(dims))


def rtd1plus(cls: ConceptClass) -> tuple:
    """Least n for which the greedy plan succeeds, with that plan.

    A finite class always has a plan: a maximal remaining concept has a finite
    positive teaching set (itself), so the loop below terminates by n = max |L|.
    """
    top = max(len(c) for c in cls.concepts)
    for n in range(top + 1):
        ok, plan = rtd1plus_at_most(cls, n)
        if ok:
            return n, plan
    raise AssertionError("finite class without a positive teaching plan")


def canonical_sequence(cls: ConceptClass, positive: bool = False) -> TeachingSequence:
    """Peel off all concepts of least TD (TD+) w.r.t. the remainder, repeatedly.

    Gives an upper bound on RTD (RTD+).
    """
    groups = _duplicate_groups(cls)
    remaining = cls.distinct()
    blocks = []
    while remaining:
        rest = [cls[j].elements for j in remaining]
        cost = {i: td_against(cls[i].elements, rest, positive) for i in remaining}
        low = min(cost.values())
        assert low != INF, "no concept can be taught positively"
        block = [i for i in remaining if cost[i] == low]
        blocks.append((tuple(j for i in block for j in groups[i]), low))
        remaining = [i for i in remaining if cost[i] != low]
    return TeachingSequence(tuple(blocks))


def rtd_exact(cls: ConceptClass, positive: bool = False):
    """Least order over all teaching sequences (positive ones if ``positive``).

    Exhaustive over ordered partitions of the distinct concepts, memoized on
    the bitmask of concepts still to be taught.
    """
    reps = cls.distinct()
    k = len(reps)
    if k > RTD_EXACT_BOUND:
        raise BoundExceeded(
            f"rtd_exact handles at most {RTD_EXACT_BOUND} distinct concepts, got {k}; "
            "use canonical_sequence for an upper bound")
    sets = [cls[i].elements for i in reps]

    @lru_cache(maxsize=None)
    def cost(i, mask):
        rest = [sets[j] for j in range(k) if mask >> j & 1]
        return td_against(sets[i], rest, positive)

    @lru_cache(maxsize=None)
    def best(mask):
        if not mask:
            return 0
        result = INF
        sub = mask
        while sub:
            c = max(cost(i, mask) for i in range(k) if sub >> i & 1)
            if c < result:
                result = min(result, max(c, best(mask & ~sub)))
            sub = (sub - 1) & mask
        return result

    return best((1 << k) - 1)
