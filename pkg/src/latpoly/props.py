"""Black-box property checkers over explicit function tables.

Each checker sweeps its domain in a fixed order (tuples in table order, then
constants ascending, then coordinates ascending) and reports the first
violation it meets.  Witness tuples and constants are element indices;
coordinates ``k`` in witnesses are 1-based.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

from .errors import EmptySetError, UnsupportedLatticeError
from .lattice import Interval, Lattice, convex_closure, med3
from .table import FunctionTable, grid, pairwise_comonotonic

__all__ = [
    "Domain",
    "FunctionTable",
    "PropertyReport",
    "VectorClass",
    "are_comonotonic",
    "check_comonotonic_maxitive",
    "check_comonotonic_minitive",
    "check_componentwise_convex_range",
    "check_conservative",
    "check_convex_range",
    "check_horizontally_maxitive",
    "check_horizontally_minitive",
    "check_idempotent",
    "check_max_homogeneous",
    "check_median_decomposable",
    "check_min_homogeneous",
    "check_nondecreasing",
    "check_strongly_idempotent",
    "clamp",
    "cut_above",
    "cut_below",
    "enumerate_class",
    "range_hull",
    "range_convex_hull",
]


class Domain(str, Enum):
    FULL = "full"
    WEAK = "weak"
    BOOLEAN = "boolean"
    ZERO_TWO = "zero-two"


@dataclass(frozen=True)
class VectorClass:
    """The tuples with at least ``p`` of {bottom, top} among their values and at most ``q`` distinct values."""

    p: int
    q: int

    def __post_init__(self):
        if not 0 <= self.p <= self.q:
            raise ValueError(f"need 0 <= p <= q, got ({self.p}, {self.q})")


@dataclass
class PropertyReport:
    property: str
    holds: bool
    witness: dict | None = None
    checked_domain: str = "full"

    def __bool__(self):
        return self.holds


def _ok(name, domain):
    return PropertyReport(name, True, None, domain)


def _fail(name, domain, **witness):
    return PropertyReport(name, False, witness, domain)


def _elements(f: FunctionTable, S) -> list[int]:
    L = f.lattice
    if S is None:
        return list(L.elements)
    if isinstance(S, Interval):
        return list(S.members(L))
    S = sorted(set(S))
    if not S:
        raise EmptySetError("the constant set S must be nonempty")
    return S


def _domain_indices(f: FunctionTable, domain: Domain) -> tuple[Iterable[int], str]:
    g = f.grid
    domain = Domain(domain)
    if domain is Domain.FULL:
        return range(g.size), "L^n"
    if domain is Domain.WEAK:
        return g.vector_class(0, 2), "L_n^(0,2)"
    if domain is Domain.BOOLEAN:
        return g.boolean, "{0,1}^n"
    raise ValueError(f"domain {domain.value!r} not valid here")


# -- tuple operators ---------------------------------------------------------


def range_hull(f: FunctionTable) -> Interval:
    """[f(0), f(1)]; for a non-monotone f the interval spanned by those two values."""
    L = f.lattice
    a, b = f.at_bottom(), f.at_top()
    return Interval(L.meet(a, b), L.join(a, b))


def range_convex_hull(f: FunctionTable) -> frozenset[int]:
    """Convex hull of the actual range of f."""
    return convex_closure(f.lattice, set(f.values))


def enumerate_class(L: Lattice, n: int, cls: VectorClass) -> Iterator[tuple[int, ...]]:
    g = grid(L, n)
    for i in g.vector_class(cls.p, cls.q):
        yield g.tuples[i]


def cut_above(L: Lattice, x, c: int) -> tuple[int, ...]:
    """[x]^c: coordinates at or above c become top."""
    return tuple(L.top if L.leq(c, a) else a for a in x)


def cut_below(L: Lattice, x, c: int) -> tuple[int, ...]:
    """[x]_c: coordinates at or below c become bottom."""
    return tuple(L.bottom if L.leq(a, c) else a for a in x)


def clamp(f: FunctionTable, x) -> tuple[int, ...]:
    L = f.lattice
    lo, hi = f.at_bottom(), f.at_top()
    return tuple(med3(L, lo, a, hi) for a in x)


def are_comonotonic(L: Lattice, x, y) -> bool:
    if not L.is_chain:
        raise UnsupportedLatticeError("comonotonicity needs a chain")
    r = L.rank
    return pairwise_comonotonic([r[a] for a in x], [r[a] for a in y])


# -- checkers ----------------------------------------------------------------


def check_nondecreasing(f: FunctionTable) -> PropertyReport:
    L, g, v = f.lattice, f.grid, f.values
    leq = L.leq_table
    for i, j in g.up_steps:
        if not leq[v[i]][v[j]]:
            return _fail("nondecreasing", "L^n", x=g.tuples[i], y=g.tuples[j], fx=v[i], fy=v[j])
    return _ok("nondecreasing", "L^n")


def check_idempotent(f: FunctionTable, S=None) -> PropertyReport:
    g, v = f.grid, f.values
    for c in _elements(f, S):
        if v[g.diag[c]] != c:
            return _fail("idempotent", "diagonal", c=c, fc=v[g.diag[c]])
    return _ok("idempotent", "diagonal")


def _homogeneous(f, S, domain, name, const_map, op):
    g, v = f.grid, f.values
    cs = _elements(f, S)
    xs, desc = _domain_indices(f, domain)
    for i in xs:
        for c in cs:
            lhs = v[const_map[c][i]]
            rhs = op[v[i]][c]
            if lhs != rhs:
                return _fail(name, desc, x=g.tuples[i], c=c, lhs=lhs, rhs=rhs)
    return _ok(name, desc)


def check_min_homogeneous(f: FunctionTable, S=None, domain=Domain.FULL) -> PropertyReport:
    """f(x ^ c) = f(x) ^ c for x in the domain and c in S (default: all of L)."""
    g = f.grid
    return _homogeneous(f, S, domain, "min-homogeneous", g.meet_const, f.lattice.meet_table)


def check_max_homogeneous(f: FunctionTable, S=None, domain=Domain.FULL) -> PropertyReport:
    """f(x v c) = f(x) v c for x in the domain and c in S (default: all of L)."""
    g = f.grid
    return _homogeneous(f, S, domain, "max-homogeneous", g.join_const, f.lattice.join_table)


def check_horizontally_minitive(f: FunctionTable, S=None, domain=Domain.FULL) -> PropertyReport:
    """f(x) = f(x v c) ^ f([x]^c)."""
    g, v = f.grid, f.values
    M = f.lattice.meet_table
    xs, desc = _domain_indices(f, domain)
    cs = _elements(f, S)
    for i in xs:
        for c in cs:
            rhs = M[v[g.join_const[c][i]]][v[g.cut_above[c][i]]]
            if v[i] != rhs:
                return _fail("horizontally-minitive", desc, x=g.tuples[i], c=c, lhs=v[i], rhs=rhs)
    return _ok("horizontally-minitive", desc)


def check_horizontally_maxitive(f: FunctionTable, S=None, domain=Domain.FULL) -> PropertyReport:
    """f(x) = f(x ^ c) v f([x]_c)."""
    g, v = f.grid, f.values
    J = f.lattice.join_table
    xs, desc = _domain_indices(f, domain)
    cs = _elements(f, S)
    for i in xs:
        for c in cs:
            rhs = J[v[g.meet_const[c][i]]][v[g.cut_below[c][i]]]
            if v[i] != rhs:
                return _fail("horizontally-maxitive", desc, x=g.tuples[i], c=c, lhs=v[i], rhs=rhs)
    return _ok("horizontally-maxitive", desc)


def check_median_decomposable(f: FunctionTable, domain=Domain.FULL) -> PropertyReport:
    """f(x) = med(f(x with x_k=0), x_k, f(x with x_k=1)) for every k.

    ``WEAK`` sweeps L_n^(0,2) and L_n^(1,3); ``ZERO_TWO`` only L_n^(0,2).
    """
    L, g, v = f.lattice, f.grid, f.values
    domain = Domain(domain)
    if domain is Domain.FULL:
        xs, desc = range(g.size), "L^n"
    elif domain is Domain.WEAK:
        xs = sorted(set(g.vector_class(0, 2)) | set(g.vector_class(1, 3)))
        desc = "L_n^(0,2) u L_n^(1,3)"
    elif domain is Domain.ZERO_TWO:
        xs, desc = g.vector_class(0, 2), "L_n^(0,2)"
    else:
        raise ValueError(f"domain {domain.value!r} not valid for median decomposability")
    lo, hi = L.bottom, L.top
    for i in xs:
        x = g.tuples[i]
        for k in range(f.arity):
            rhs = med3(L, v[g.subst[k][lo][i]], x[k], v[g.subst[k][hi][i]])
            if v[i] != rhs:
                return _fail("median-decomposable", desc, x=x, k=k + 1, lhs=v[i], rhs=rhs)
    return _ok("median-decomposable", desc)


def check_strongly_idempotent(f: FunctionTable) -> PropertyReport:
    g, v = f.grid, f.values
    for i in range(g.size):
        for k in range(f.arity):
            lhs = v[g.subst[k][v[i]][i]]
            if lhs != v[i]:
                return _fail("strongly-idempotent", "L^n", x=g.tuples[i], k=k + 1, lhs=lhs, rhs=v[i])
    return _ok("strongly-idempotent", "L^n")


def _convex_gap(L: Lattice, values: Iterable[int]):
    vals = set(values)
    missing = sorted(convex_closure(L, vals) - vals)
    return missing


def check_convex_range(f: FunctionTable) -> PropertyReport:
    missing = _convex_gap(f.lattice, f.values)
    if missing:
        return _fail("convex-range", "L^n", missing=missing[0], range=sorted(set(f.values)))
    return _ok("convex-range", "L^n")


def check_componentwise_convex_range(f: FunctionTable) -> PropertyReport:
    """Every unary section x -> f(a with a_k = x) has a convex range."""
    if f.arity == 1:
        r = check_convex_range(f)
        r.property = "componentwise-convex-range"
        return r
    L, g, v = f.lattice, f.grid, f.values
    seen = set()
    for i, a in enumerate(g.tuples):
        for k in range(f.arity):
            key = (k, g.subst[k][L.bottom][i])
            if key in seen:
                continue
            seen.add(key)
            section = [v[g.subst[k][c][i]] for c in L.elements]
            missing = _convex_gap(L, section)
            if missing:
                return _fail(
                    "componentwise-convex-range", "sections", a=a, k=k + 1,
                    missing=missing[0], section=section,
                )
    return _ok("componentwise-convex-range", "sections")


def _comonotonic(f, name, which):
    g, v = f.grid, f.values
    op = f.lattice.meet_table if which == "meet" else f.lattice.join_table
    for i, j, lo, hi in g.comonotone_pairs:
        lhs = v[lo] if which == "meet" else v[hi]
        rhs = op[v[i]][v[j]]
        if lhs != rhs:
            return _fail(name, "comonotonic pairs", x=g.tuples[i], y=g.tuples[j], lhs=lhs, rhs=rhs)
    return _ok(name, "comonotonic pairs")


def check_comonotonic_minitive(f: FunctionTable) -> PropertyReport:
    """f(x ^ y) = f(x) ^ f(y) for every comonotonic pair."""
    return _comonotonic(f, "comonotonic-minitive", "meet")


def check_comonotonic_maxitive(f: FunctionTable) -> PropertyReport:
    """f(x v y) = f(x) v f(y) for every comonotonic pair."""
    return _comonotonic(f, "comonotonic-maxitive", "join")


def check_conservative(f: FunctionTable, domain=Domain.FULL) -> PropertyReport:
    g, v = f.grid, f.values
    domain = Domain(domain)
    if domain not in (Domain.FULL, Domain.BOOLEAN):
        raise ValueError("conservativeness is checked on the full or Boolean domain")
    xs, desc = _domain_indices(f, domain)
    for i in xs:
        if v[i] not in g.tuples[i]:
            return _fail("conservative", desc, x=g.tuples[i], fx=v[i])
    return _ok("conservative", desc)


# -- conservativeness: the two set-closure formulations ----------------------


def _nonempty_subsets(L: Lattice):
    els = list(L.elements)
    for r in range(1, len(els) + 1):
        yield from (frozenset(s) for s in itertools.combinations(els, r))


def check_conservative_closure(f: FunctionTable) -> PropertyReport:
    """f(S^n) is contained in S for every nonempty S."""
    g, v = f.grid, f.values
    for S in _nonempty_subsets(f.lattice):
        for i, x in enumerate(g.tuples):
            if v[i] not in S and all(a in S for a in x):
                return _fail("conservative-closure", "subsets", S=sorted(S), x=x, fx=v[i])
    return _ok("conservative-closure", "subsets")


def check_conservative_preimage(f: FunctionTable) -> PropertyReport:
    """f(x) in S forces some x_i in S, for every nonempty S."""
    g, v = f.grid, f.values
    for S in _nonempty_subsets(f.lattice):
        for i, x in enumerate(g.tuples):
            if v[i] in S and not any(a in S for a in x):
                return _fail("conservative-preimage", "subsets", S=sorted(S), x=x, fx=v[i])
    return _ok("conservative-preimage", "subsets")


PROPERTIES = {
    "nondecreasing": check_nondecreasing,
    "idempotent": check_idempotent,
    "min-homogeneous": check_min_homogeneous,
    "max-homogeneous": check_max_homogeneous,
    "horizontally-minitive": check_horizontally_minitive,
    "horizontally-maxitive": check_horizontally_maxitive,
    "median-decomposable": check_median_decomposable,
    "strongly-idempotent": check_strongly_idempotent,
    "convex-range": check_convex_range,
    "componentwise-convex-range": check_componentwise_convex_range,
    "comonotonic-minitive": check_comonotonic_minitive,
    "comonotonic-maxitive": check_comonotonic_maxitive,
    "conservative": check_conservative,
}
