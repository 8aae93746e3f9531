"""Decidable stand-ins for r.e. sets and their stage-by-stage approximations.

A descriptor knows its own classification (finite, cofinite, ...), which is
what lets the gadget verifiers compare a finite-scale verdict against ground
truth.  Stage convention for every kind: element x is enumerated at stage x,
so the stage-s approximation is W & {0..s}.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Callable

from ..core import ConceptClass, Concept, Domain


class SetDescriptor:
    """Common interface; subclasses define ``contains``, ``settle`` and ``period``.

    Beyond ``settle`` membership is periodic with period ``period``.
    """

    settle: int
    period: int

    def contains(self, x: int) -> bool:
        raise NotImplementedError

    def __contains__(self, x):
        return self.contains(x)

    def _tail_members(self):
        return [self.contains(x) for x in range(self.settle, self.settle + self.period)]

    @property
    def is_finite(self) -> bool:
        return not any(self._tail_members())

    @property
    def is_cofinite(self) -> bool:
        return all(self._tail_members())

    @property
    def is_infinite(self) -> bool:
        return not self.is_finite

    @property
    def is_coinfinite(self) -> bool:
        return not self.is_cofinite

    def elements_below(self, m: int) -> frozenset:
        return frozenset(x for x in range(m) if self.contains(x))

    def complement_below(self, m: int) -> frozenset:
        return frozenset(x for x in range(m) if not self.contains(x))

    def stage(self, s: int) -> frozenset:
        return self.elements_below(s + 1)

    def has_element_above(self, i: int) -> bool:
        if self.is_infinite:
            return True
        return any(self.contains(x) for x in range(i + 1, self.settle))

    def max_element(self) -> int | None:
        """Largest element of a finite set (None if empty)."""
        if self.is_infinite:
            raise ValueError("infinite set has no largest element")
        below = self.elements_below(self.settle)
        return max(below) if below else None

    def complement_element(self, n: int) -> int:
        """The n-th (0-based) element of the true complement; coinfinite sets only."""
        if n < 0:
            raise ValueError("n must be >= 0")
        count = 0
        x = 0
        if self.is_cofinite and n >= len(self.complement_below(self.settle)):
            raise ValueError(f"complement of {self} has fewer than {n + 1} elements")
        while True:
            if not self.contains(x):
                if count == n:
                    return x
                count += 1
            x += 1

    def complement_at_stage(self, n: int, t: int) -> int:
        """The n-th element of the complement of the stage-t approximation."""
        gaps = [x for x in range(t + 1) if not self.contains(x)]
        if n < len(gaps):
            return gaps[n]
        return t + 1 + (n - len(gaps))


@dataclass(frozen=True)
class Finite(SetDescriptor):
    elements: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "elements", frozenset(self.elements))

    def contains(self, x):
        return x in self.elements

    @property
    def settle(self):
        return max(self.elements, default=-1) + 1

    @property
    def period(self):
        return 1

    def __str__(self):
        return "finite:{" + ",".join(map(str, sorted(self.elements))) + "}"


@dataclass(frozen=True)
class Cofinite(SetDescriptor):
    excluded: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "excluded", frozenset(self.excluded))

    def contains(self, x):
        return x not in self.excluded

    @property
    def settle(self):
        return max(self.excluded, default=-1) + 1

    @property
    def period(self):
        return 1

    def __str__(self):
        return "cofinite:{" + ",".join(map(str, sorted(self.excluded))) + "}"


@dataclass(frozen=True)
class Progressions(SetDescriptor):
    """Union of {a*t + b : t >= 0}; a = 0 gives the single point b."""

    terms: tuple = ()

    def __post_init__(self):
        terms = tuple(sorted((int(a), int(b)) for a, b in self.terms))
        if any(a < 0 or b < 0 for a, b in terms):
            raise ValueError("progression terms must be naturals")
        object.__setattr__(self, "terms", terms)

    def contains(self, x):
        for a, b in self.terms:
            if x == b or (a > 0 and x > b and (x - b) % a == 0):
                return True
        return False

    @property
    def settle(self):
        return max((b for _, b in self.terms), default=-1) + 1

    @property
    def period(self):
        steps = [a for a, _ in self.terms if a > 0]
        return math.lcm(*steps) if steps else 1

    def __str__(self):
        return "prog:" + ",".join(f"({a},{b})" for a, b in self.terms)


_SET_RE = re.compile(r"^\{\s*([0-9,\s]*)\}$")


def _parse_set(text):
    m = _SET_RE.match(text.strip())
    if not m:
        raise ValueError(f"expected {{a,b,...}}, got {text!r}")
    return frozenset(int(t) for t in m.group(1).replace(",", " ").split())


def parse_descriptor(text: str) -> SetDescriptor:
    """Parse ``finite:{1,2}``, ``cofinite:{}`` or ``prog:(2,0),(3,1)``."""
    kind, sep, body = text.strip().partition(":")
    kind = kind.lower()
    if not sep:
        raise ValueError(f"descriptor needs 'kind:...', got {text!r}")
    if kind == "finite":
        return Finite(_parse_set(body))
    if kind == "cofinite":
        return Cofinite(_parse_set(body))
    if kind in ("prog", "progressions"):
        pairs = re.findall(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)", body)
        if not pairs and body.strip():
            raise ValueError(f"bad progression list {body!r}")
        return Progressions(tuple((int(a), int(b)) for a, b in pairs))
    raise ValueError(f"unknown descriptor kind {kind!r}")


def mover_count(w: SetDescriptor, n: int, s: int) -> int:
    """Number of t < s at which the n-th complement element of W_t and W_{t+1} differ."""
    count = 0
    prev = w.complement_at_stage(n, 0)
    for t in range(s):
        cur = w.complement_at_stage(n, t + 1)
        if cur != prev:
            count += 1
        prev = cur
    return count


@dataclass(frozen=True)
class StagedFamily:
    """Columns given stage by stage, plus their limits, under finite horizons.

    ``column(j, s)`` must be a subset of {0..min(s, domain_horizon)} and grow
    with s; ``limit(j)`` is the column's value on {0..domain_horizon}.
    """

    column: Callable
    limit: Callable
    column_horizon: int
    stage_horizon: int
    domain_horizon: int
    name: str = "family"

    def horizons(self) -> dict:
        return {"J": self.column_horizon, "S": self.stage_horizon, "M": self.domain_horizon}

    def settling_stage(self) -> int | None:
        """Least s such that every column equals its limit at all stages s..S."""
        settled = None
        for s in range(self.stage_horizon, -1, -1):
            if all(self.column(j, s) == self.limit(j) for j in range(self.column_horizon)):
                settled = s
            else:
                break
        return settled


class HorizonError(ValueError):
    pass


def stage_restrict(fam: StagedFamily, s: int) -> ConceptClass:
    """The class of stage-s columns, one concept per distinct extension."""
    if not 0 <= s <= fam.stage_horizon:
        raise HorizonError(f"stage {s} outside 0..{fam.stage_horizon}")
    seen = set()
    concepts = []
    for j in range(fam.column_horizon):
        col = fam.column(j, s)
        if col not in seen:
            seen.add(col)
            concepts.append(Concept(f"col{j}", col))
    return ConceptClass(Domain(min(s, fam.domain_horizon) + 1), tuple(concepts))


def limit_class(fam: StagedFamily) -> ConceptClass:
    seen = set()
    concepts = []
    for j in range(fam.column_horizon):
        col = fam.limit(j)
        if col not in seen:
            seen.add(col)
            concepts.append(Concept(f"col{j}", col))
    return ConceptClass(Domain(fam.domain_horizon + 1), tuple(concepts))
