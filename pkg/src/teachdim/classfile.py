"""Line-based text format for concept classes.

    # comment
    domain 4
    concept empty:
    concept a: 1
    concept b: 2 3

Emission is canonical (sorted elements, single spaces), so parse/emit
round-trips byte for byte once comments and spacing are normalized.
"""

from __future__ import annotations

from pathlib import Path

from .core import Concept, ConceptClass, Domain


class ParseError(ValueError):
    def __init__(self, msg, lineno=None):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {msg}" if lineno else msg)


def parse_class(text: str) -> ConceptClass:
    domain = None
    concepts = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if domain is None:
            head, _, rest = line.partition(" ")
            if head != "domain":
                raise ParseError("expected 'domain <n>' first", lineno)
            try:
                domain = Domain(int(rest.strip()))
            except ValueError as exc:
                raise ParseError(f"bad domain: {exc}", lineno) from None
            continue
        if not line.startswith("concept "):
            raise ParseError(f"expected 'concept <name>: ...', got {line!r}", lineno)
        name, sep, elems = line[len("concept "):].partition(":")
        if not sep:
            raise ParseError("missing ':' after concept name", lineno)
        try:
            elements = frozenset(int(t) for t in elems.split())
            concepts.append(Concept(name.strip(), elements))
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
    if domain is None:
        raise ParseError("no 'domain' line")
    try:
        return ConceptClass(domain, tuple(concepts))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def emit_class(cls: ConceptClass, header: list | None = None) -> str:
    lines = [f"# {h}" for h in header or ()]
    lines.append(f"domain {cls.domain.size}")
    for c in cls.concepts:
        elems = " ".join(str(x) for x in sorted(c.elements))
        lines.append(f"concept {c.name}: {elems}" if elems else f"concept {c.name}:")
    return "\n".join(lines) + "\n"


def load_class(path) -> ConceptClass:
    return parse_class(Path(path).read_text(encoding="utf-8"))


def save_class(cls: ConceptClass, path, header: list | None = None) -> None:
    Path(path).write_text(emit_class(cls, header), encoding="utf-8")


def parse_sequence(text: str, cls: ConceptClass) -> list:
    """Read ``block: <name> ...`` lines into a list of (indices, declared order or None).

    A declared order may be given as ``block 2: a b``.
    """
    blocks = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, sep, names = line.partition(":")
        words = head.split()
        if not sep or not words or words[0] != "block" or len(words) > 2:
            raise ParseError(f"expected 'block: <name> ...', got {line!r}", lineno)
        order = None
        if len(words) == 2:
            try:
                order = int(words[1])
            except ValueError:
                raise ParseError(f"bad declared order {words[1]!r}", lineno) from None
        try:
            idx = tuple(cls.index_of(n) for n in names.split())
        except KeyError as exc:
            raise ParseError(f"unknown concept {exc.args[0]!r}", lineno) from None
        blocks.append((idx, order))
    return blocks
