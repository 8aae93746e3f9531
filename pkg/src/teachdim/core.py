"""Finite concept classes, labelled samples and the set codings used by the gadgets.

Concepts are finite sets of naturals stored as frozensets.  A class keeps its
concepts in input order; that order is the "index" every solver refers to.
Duplicate extensions are allowed and are treated as a single concept by the
solvers (see :meth:`ConceptClass.distinct`).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

INF = math.inf


class DomainOverflow(ValueError):
    """Raised when a coded element does not fit the configured domain bound."""


@dataclass(frozen=True)
class Domain:
    """The finite horizon {0, ..., size-1} standing in for the naturals."""

    size: int

    def __post_init__(self):
        if self.size < 1:
            raise ValueError(f"domain size must be >= 1, got {self.size}")

    def __contains__(self, x) -> bool:
        return 0 <= x < self.size

    def elements(self) -> range:
        return range(self.size)


@dataclass(frozen=True)
class Concept:
    name: str
    elements: frozenset

    def __post_init__(self):
        if not isinstance(self.elements, frozenset):
            object.__setattr__(self, "elements", frozenset(self.elements))
        if not self.name or any(c.isspace() for c in self.name) or ":" in self.name:
            raise ValueError(f"bad concept name {self.name!r}")
        for x in self.elements:
            if not isinstance(x, int) or x < 0:
                raise ValueError(f"concept {self.name}: element {x!r} is not a natural")

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.elements


@dataclass(frozen=True)
class ConceptClass:
    domain: Domain
    concepts: tuple

    def __post_init__(self):
        object.__setattr__(self, "concepts", tuple(self.concepts))
        if not self.concepts:
            raise ValueError("a concept class needs at least one concept")
        seen = set()
        for c in self.concepts:
            if c.name in seen:
                raise ValueError(f"duplicate concept name {c.name!r}")
            seen.add(c.name)
            bad = [x for x in c.elements if x >= self.domain.size]
            if bad:
                raise ValueError(
                    f"concept {c.name}: element {min(bad)} outside domain of size {self.domain.size}"
                )

    @classmethod
    def from_sets(cls, sets: Iterable[Iterable[int]], domain_size: int | None = None,
                  names: Sequence[str] | None = None) -> "ConceptClass":
        sets = [frozenset(s) for s in sets]
        if names is None:
            names = [f"c{i}" for i in range(len(sets))]
        if domain_size is None:
            domain_size = max((max(s) for s in sets if s), default=0) + 1
        return cls(Domain(domain_size), tuple(Concept(n, s) for n, s in zip(names, sets)))

    def __len__(self):
        return len(self.concepts)

    def __getitem__(self, i) -> Concept:
        return self.concepts[i]

    def __iter__(self):
        return iter(self.concepts)

    @property
    def sets(self) -> list:
        return [c.elements for c in self.concepts]

    @property
    def names(self) -> list:
        return [c.name for c in self.concepts]

    def index_of(self, name: str) -> int:
        for i, c in enumerate(self.concepts):
            if c.name == name:
                return i
        raise KeyError(name)

    def check_index(self, i: int) -> None:
        if not 0 <= i < len(self.concepts):
            raise IndexError(f"concept index {i} out of range for class of size {len(self)}")

    def distinct(self) -> list:
        """Indices of the first concept carrying each distinct extension."""
        seen = set()
        reps = []
        for i, c in enumerate(self.concepts):
            if c.elements not in seen:
                seen.add(c.elements)
                reps.append(i)
        return reps

    def support(self) -> frozenset:
        """Union of all concepts; only these elements can separate concepts."""
        out = set()
        for c in self.concepts:
            out |= c.elements
        return frozenset(out)

    def subclass(self, indices: Iterable[int]) -> "ConceptClass":
        return ConceptClass(self.domain, tuple(self.concepts[i] for i in indices))


class Label(enum.Enum):
    POSITIVE = "+"
    NEGATIVE = "-"


@dataclass(frozen=True, order=True)
class LabeledExample:
    element: int
    label: Label  # compared too; a valid Sample never holds one element twice

    @property
    def positive(self) -> bool:
        return self.label is Label.POSITIVE

    def __str__(self):
        return f"({self.element},{self.label.value})"


@dataclass(frozen=True)
class Sample:
    """A finite set of labelled examples; no element may carry both labels."""

    examples: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "examples", frozenset(self.examples))
        pos = {e.element for e in self.examples if e.positive}
        neg = {e.element for e in self.examples if not e.positive}
        if pos & neg:
            raise ValueError(f"elements labelled both ways: {sorted(pos & neg)}")

    @classmethod
    def from_sets(cls, positive=(), negative=()) -> "Sample":
        ex = [LabeledExample(x, Label.POSITIVE) for x in positive]
        ex += [LabeledExample(x, Label.NEGATIVE) for x in negative]
        return cls(frozenset(ex))

    @classmethod
    def labelled_by(cls, instances: Iterable[int], target: Iterable[int]) -> "Sample":
        """Label each instance by membership in ``target``."""
        target = frozenset(target)
        inst = frozenset(instances)
        return cls.from_sets(inst & target, inst - target)

    @property
    def positive(self) -> frozenset:
        return frozenset(e.element for e in self.examples if e.positive)

    @property
    def negative(self) -> frozenset:
        return frozenset(e.element for e in self.examples if not e.positive)

    @property
    def instances(self) -> frozenset:
        return frozenset(e.element for e in self.examples)

    def __len__(self):
        return len(self.examples)

    def __str__(self):
        return "{" + ",".join(str(e) for e in sorted(self.examples)) + "}"


def consistent(concept, sample: Sample) -> bool:
    """True iff every positive example lies in the concept and no negative one does."""
    elements = concept.elements if isinstance(concept, Concept) else frozenset(concept)
    return sample.positive <= elements and not (sample.negative & elements)


# -- codings ---------------------------------------------------------------

def finite_set_decode(u: int) -> frozenset:
    """D_u: the set of bit positions of ``u``."""
    if u < 0:
        raise ValueError("finite set codes are naturals")
    out = []
    i = 0
    while u:
        if u & 1:
            out.append(i)
        u >>= 1
        i += 1
    return frozenset(out)


def finite_set_code(s: Iterable[int]) -> int:
    return sum(1 << x for x in set(s))


def pair(x: int, y: int) -> int:
    """Cantor pairing."""
    return (x + y) * (x + y + 1) // 2 + y


def unpair(z: int) -> tuple:
    w = (math.isqrt(8 * z + 1) - 1) // 2
    t = w * (w + 1) // 2
    y = z - t
    return w - y, y


def sequence_code(seq: Sequence[int]) -> int:
    """Injective code for a finite sequence: the length paired with a right fold."""
    folded = 0
    for v in reversed(seq):
        folded = pair(v, folded)
    return pair(len(seq), folded)


def sequence_decode(code: int) -> tuple:
    length, folded = unpair(code)
    out = []
    for _ in range(length):
        v, folded = unpair(folded)
        out.append(v)
    return tuple(out)


def select(seq: Sequence[int], positions: Iterable[int]) -> tuple:
    """The subsequence of ``seq`` at the given positions, in increasing order."""
    pos = sorted(set(positions))
    if pos and (pos[0] < 0 or pos[-1] >= len(seq)):
        raise IndexError(f"positions {pos} out of range for sequence of length {len(seq)}")
    return tuple(seq[p] for p in pos)


def join(a: Iterable[int], b: Iterable[int]) -> frozenset:
    """Even/odd interleaving: {2x : x in a} | {2y+1 : y in b}."""
    return frozenset([2 * x for x in a] + [2 * y + 1 for y in b])


def split(s: Iterable[int]) -> tuple:
    """Inverse of :func:`join`."""
    s = list(s)
    return (frozenset(x // 2 for x in s if x % 2 == 0),
            frozenset(x // 2 for x in s if x % 2 == 1))


def join_columns(columns: Sequence[Iterable[int]]) -> frozenset:
    """Finite stand-in for an infinite join: {<i,x> : x in columns[i]}."""
    return frozenset(pair(i, x) for i, col in enumerate(columns) for x in col)


def column_of(s: Iterable[int], i: int) -> frozenset:
    out = []
    for z in s:
        c, x = unpair(z)
        if c == i:
            out.append(x)
    return frozenset(out)


def disjoint_union_sets(families: Sequence[Sequence[frozenset]]) -> list:
    """Tag every member of family ``i`` by joining it with {i}; empty families allowed."""
    return [join(f, (i,)) for i, fam in enumerate(families) for f in fam]


def disjoint_union(families: Sequence[ConceptClass], max_domain: int | None = None) -> ConceptClass:
    """Disjoint union of classes; member F of family i becomes join(F, {i}).

    Names are prefixed with the family index (``"<i>.<name>"``).  The domain is
    sized to hold the coded elements; ``max_domain`` caps it.
    """
    concepts = []
    for i, fam in enumerate(families):
        for c in fam:
            concepts.append(Concept(f"{i}.{c.name}", join(c.elements, (i,))))
    size = max(2 * (f.domain.size - 1) + 1 for f in families)
    size = max(size, 2 * (len(families) - 1) + 1) + 1
    if max_domain is not None and size > max_domain:
        raise DomainOverflow(f"disjoint union needs domain {size} > bound {max_domain}")
    return ConceptClass(Domain(size), tuple(concepts))
