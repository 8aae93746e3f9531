"""Finite truncations of the reduction gadgets.

Concepts that are finite sets in the original constructions are realized
exactly; infinite ones are cut at a domain horizon.  Every builder names its
concepts after their construction coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from ..core import (Concept, ConceptClass, Domain, disjoint_union_sets, finite_set_decode,
                    join, join_columns, pair, select, sequence_code)
from .descriptors import HorizonError, SetDescriptor, StagedFamily, mover_count


def _make_class(named, domain_size=None):
    """Build a class from (name, set) pairs, keeping every name."""
    concepts = tuple(Concept(n, s) for n, s in named)
    if domain_size is None:
        domain_size = max((max(c.elements) for c in concepts if c.elements), default=0) + 1
    return ConceptClass(Domain(domain_size), concepts)


# -- distinguishing-set gadget -------------------------------------------------

def build_acds_gadget(w: SetDescriptor, column_horizon: int, stage_horizon: int,
                      domain_horizon: int) -> StagedFamily:
    """Column i is everything if i = 0 or W has an element above i, else {0..i}.

    Column 0 is told apart from the rest by the empty set exactly when all
    columns are full, i.e. when W is infinite.
    """
    M = domain_horizon

    def column(i, s):
        top = min(s, M)
        if i == 0 or any(x > i for x in w.stage(s)):
            return frozenset(range(top + 1))
        return frozenset(range(min(i, top) + 1))

    def limit(i):
        if i == 0 or w.has_element_above(i):
            return frozenset(range(M + 1))
        return frozenset(range(min(i, M) + 1))

    return StagedFamily(column, limit, column_horizon, stage_horizon, M, name="acds")


# -- TD gadget: H_<e,x,i> --------------------------------------------------------

def t1_member(w: SetDescriptor, tag: int, i: int, domain_horizon: int) -> frozenset:
    """{tag} (+) (W | {i}) for i > 0, {tag} (+) W for i = 0; W cut below the horizon."""
    body = set(w.elements_below(domain_horizon))
    if i > 0:
        body.add(i)
    return join((tag,), body)


def build_t1_gadget(w: SetDescriptor, tag: int, column_horizon: int, domain_horizon: int,
                    companions=()) -> ConceptClass:
    """The row {H_<tag,i> : i < J}, plus optional further rows (tag', W').

    A single row never needs the tag to be taught; companion rows make the tag
    element matter, as in the full family over all rows.
    """
    if column_horizon > domain_horizon:
        raise HorizonError(f"column horizon {column_horizon} exceeds domain horizon {domain_horizon}")
    rows = [(tag, w)] + list(companions)
    named = []
    for t, desc in rows:
        for i in range(column_horizon):
            named.append((f"H[x={t},i={i}]", t1_member(desc, t, i, domain_horizon)))
    size = 2 * max(max(t for t, _ in rows), domain_horizon) + 2
    return _make_class(named, size)


# -- TD+ gadget: L_<a,i> ---------------------------------------------------------

def tdplus_member(w: SetDescriptor, a: int, i: int, domain_horizon: int) -> frozenset:
    """L_<a,0> = {a} (+) W (cut at the horizon); L_<a,i+1> as below.

    For i in W, L_<a,i+1> repeats L_<a,0>; otherwise it is the finite set
    {a} (+) ({i} | {x < i : x in W}), realized exactly.
    """
    if i == 0 or (i - 1) in w:
        return join((a,), w.elements_below(domain_horizon))
    j = i - 1
    return join((a,), {j} | w.elements_below(j))


def build_tdplus_gadget(w: SetDescriptor, a: int, column_horizon: int,
                        domain_horizon: int) -> ConceptClass:
    named = [(f"L[a={a},i={i}]", tdplus_member(w, a, i, domain_horizon))
             for i in range(column_horizon)]
    return _make_class(named)


# -- XTD+ gadget: {N, G} ---------------------------------------------------------

def xtdplus_cut(w: SetDescriptor) -> int:
    """Least m from which the stage approximations of a finite W stop changing."""
    top = w.max_element()
    return 0 if top is None else top


def build_xtdplus_gadget(w: SetDescriptor, domain_horizon: int | None = None) -> ConceptClass:
    """{N, G}: G = N when W is infinite, else {0} | {x : x < m}; N cut at the horizon."""
    if w.is_infinite:
        m = None
        need = 1
    else:
        m = xtdplus_cut(w)
        need = m + 1
    M = domain_horizon if domain_horizon is not None else need + 1
    if M <= need - 1 or M < 2:
        raise HorizonError(f"domain horizon {M} too small; G needs {need}")
    nat = frozenset(range(M))
    g = nat if m is None else frozenset({0}) | frozenset(range(m))
    return _make_class([("N", nat), ("G", g)], M)


# -- L_k gadget ------------------------------------------------------------------

def proper_subset_count(k: int) -> int:
    return (1 << (k + 1)) - 1


def f_k(k: int, n: int) -> int:
    """Cyclic enumeration of the codes of the proper subsets of [0,k]."""
    return n % proper_subset_count(k)


def lk_member(k: int, j: int) -> frozenset:
    """L^k_0 = [0,k] (+) {}; L^k_{n+1} = D_{f_k(n)} (+) {n}."""
    if j == 0:
        return join(range(k + 1), ())
    n = j - 1
    return join(finite_set_decode(f_k(k, n)), (n,))


def build_lk_gadget(k: int, multiplicity: int) -> ConceptClass:
    """[0,k] (+) {} and, for each proper subset of [0,k], ``multiplicity`` markers."""
    if multiplicity < 1:
        raise HorizonError("multiplicity must be >= 1")
    count = multiplicity * proper_subset_count(k)
    named = [("top", lk_member(k, 0))]
    named += [(f"m{n}", lk_member(k, n + 1)) for n in range(count)]
    return _make_class(named)


# -- G^{a,n} gadget --------------------------------------------------------------

def top_column(n: int) -> frozenset:
    return join(range(n + 1), ())


def gan_top(n: int, width: int) -> frozenset:
    """A^n with its first ``width`` columns."""
    return join_columns([top_column(n)] * width)


def gan_member(a: SetDescriptor, n: int, i: int, sigma) -> frozenset:
    """A^{a,n}_{i,sigma}, laid out as consecutive columns.

    Column 0 carries D_{f_n(sigma(0))} and the marker <sigma,i> when i is in W_a;
    columns 1..i are full; column i+j (1 <= j < |sigma|) carries
    D_{f_n(sigma(j))} and the marker <sigma[{0} | [j,|sigma|)]>.
    """
    sigma = tuple(sigma)
    if len(sigma) < 2:
        raise ValueError("sigma needs length >= 2")
    head = {pair(sequence_code(sigma), i)} if i in a else set()
    cols = [join(finite_set_decode(f_k(n, sigma[0])), head)]
    cols += [top_column(n)] * i
    for j in range(1, len(sigma)):
        marker = sequence_code(select(sigma, [0, *range(j, len(sigma))]))
        cols.append(join(finite_set_decode(f_k(n, sigma[j])), (marker,)))
    return join_columns(cols)


def gan_width(columns: int, max_len: int) -> int:
    return columns + max_len - 1


def sigmas(max_len: int, entries: int, min_len: int = 2):
    for length in range(min_len, max_len + 1):
        yield from product(range(entries), repeat=length)


def build_gan_family(a: SetDescriptor, n: int, i: int, max_len: int,
                     entries: int | None = None) -> list:
    """(name, set) pairs for the row G^{a,n}_i truncated to |sigma| <= max_len."""
    if entries is None:
        entries = proper_subset_count(n)
    return [(f"A[i={i},s={'.'.join(map(str, s))}]", gan_member(a, n, i, s))
            for s in sigmas(max_len, entries)]


def build_gan_gadget(a: SetDescriptor, n: int, max_len: int, columns: int,
                     entries: int | None = None) -> ConceptClass:
    """A^n together with G^{a,n}_i for i < columns and 2 <= |sigma| <= max_len."""
    if max_len < 2 or columns < 1:
        raise HorizonError("need max_len >= 2 and columns >= 1")
    named = [("top", gan_top(n, gan_width(columns, max_len)))]
    for i in range(columns):
        named += build_gan_family(a, n, i, max_len, entries)
    return _make_class(named)


def gan_row_indices(cls: ConceptClass) -> dict:
    """Map row i to the indices of its members in a G^{a,n} class."""
    rows = {}
    for idx, c in enumerate(cls.concepts):
        if c.name.startswith("A[i="):
            i = int(c.name[4:c.name.index(",")])
            rows.setdefault(i, []).append(idx)
    return rows


# -- RTD1+ reduction: F_e = disjoint union of G_{a_i,i} ------------------------------

def column_sizes(a: SetDescriptor, columns: int, stage_horizon: int) -> list:
    """sup_{s <= S} m(a, n, s) for each n < columns (m grows with s)."""
    return [mover_count(a, n, stage_horizon) for n in range(columns)]


def build_rtd_component(a: SetDescriptor, i: int, columns: int, stage_horizon: int) -> list:
    """G_{a,i}: the disjoint union over n of {L^i_j : j < m(a, n, S)}, as raw sets."""
    fams = [[lk_member(i, j) for j in range(m)] for m in column_sizes(a, columns, stage_horizon)]
    return disjoint_union_sets(fams)


def build_rtd_reduction(descriptors, columns: int, stage_horizon: int) -> ConceptClass:
    """F = disjoint union over i of G_{a_i, i}."""
    named = []
    comps = [build_rtd_component(a, i, columns, stage_horizon) for i, a in enumerate(descriptors)]
    for i, comp in enumerate(comps):
        for q, s in enumerate(join(s, (i,)) for s in comp):
            named.append((f"F[i={i},q={q}]", s))
    if not named:
        raise HorizonError("stage horizon too small: every column of every component is empty")
    return _make_class(named)


# -- XTD family {W | D : D finite} ------------------------------------------------

def build_xtd_family(w: SetDescriptor, horizon: int) -> ConceptClass:
    """All sets W | D inside [0, horizon): every superset of the cut W."""
    base = w.elements_below(horizon)
    free = sorted(w.complement_below(horizon))
    named = []
    for bits in range(1 << len(free)):
        extra = {free[t] for t in range(len(free)) if bits >> t & 1}
        named.append((f"W+{bits}", base | extra))
    return _make_class(named, horizon)


@dataclass(frozen=True)
class GadgetSpec:
    """One gadget instance: its tag, construction parameters and horizons."""

    tag: str
    params: dict = field(default_factory=dict)
    horizons: dict = field(default_factory=dict)

    def manifest(self) -> str:
        items = {**self.params, **self.horizons}
        return "gadget " + self.tag + "".join(f" {k}={v}" for k, v in sorted(items.items()))
