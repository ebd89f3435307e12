"""Finite bounded lattices: chains and explicit-table distributive lattices.

Elements are dense integer indices ``0..m-1``.  For a chain the order is the
index order; a table lattice carries its own meet and join tables, which are
checked against every lattice law (and distributivity) when it is built.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Sequence

from .errors import ArityError, EmptySetError, InvalidSizeError, LawViolationError

CHAIN = "chain"
TABLE = "table"


@dataclass(frozen=True)
class Lattice:
    kind: str
    names: tuple[str, ...]
    meet_table: tuple[tuple[int, ...], ...]
    join_table: tuple[tuple[int, ...], ...]
    bottom: int
    top: int
    leq_table: tuple[tuple[bool, ...], ...] = field(repr=False, compare=False, default=())
    rank: tuple[int, ...] = field(repr=False, compare=False, default=())
    is_chain: bool = field(repr=False, compare=False, default=False)
    lower_covers: tuple[tuple[int, ...], ...] = field(repr=False, compare=False, default=())

    def __post_init__(self):
        m = len(self.names)
        leq = tuple(tuple(self.meet_table[a][b] == a for b in range(m)) for a in range(m))
        object.__setattr__(self, "leq_table", leq)
        object.__setattr__(
            self, "is_chain", all(leq[a][b] or leq[b][a] for a in range(m) for b in range(m))
        )
        covers = []
        for b in range(m):
            below = [a for a in range(m) if a != b and leq[a][b]]
            covers.append(
                tuple(a for a in below if not any(c != a and leq[a][c] for c in below))
            )
        object.__setattr__(self, "lower_covers", tuple(covers))
        # height of each element above bottom, a linear extension key
        ranks = [0] * m
        for a in sorted(range(m), key=lambda e: sum(leq[x][e] for x in range(m))):
            ranks[a] = max((ranks[c] + 1 for c in covers[a]), default=0)
        object.__setattr__(self, "rank", tuple(ranks))

    @property
    def size(self) -> int:
        return len(self.names)

    @property
    def elements(self) -> range:
        return range(len(self.names))

    def meet(self, a: int, b: int) -> int:
        return self.meet_table[a][b]

    def join(self, a: int, b: int) -> int:
        return self.join_table[a][b]

    def leq(self, a: int, b: int) -> bool:
        return self.leq_table[a][b]

    def meet_all(self, xs: Iterable[int]) -> int:
        """Meet of ``xs``; the empty meet is top."""
        return reduce(self.meet, xs, self.top)

    def join_all(self, xs: Iterable[int]) -> int:
        """Join of ``xs``; the empty join is bottom."""
        return reduce(self.join, xs, self.bottom)

    def name(self, a: int) -> str:
        return self.names[a]

    def element(self, ref) -> int:
        """Resolve an element reference (name, or decimal index) to its index."""
        if isinstance(ref, bool):
            raise ValueError(f"not an element reference: {ref!r}")
        if isinstance(ref, int):
            if 0 <= ref < self.size:
                return ref
            raise ValueError(f"element index {ref} out of range for size {self.size}")
        ref = str(ref).strip()
        if ref in self.names:
            return self.names.index(ref)
        if ref.isdigit() and self.kind == CHAIN:
            return self.element(int(ref))
        raise ValueError(f"unknown element {ref!r}")

    def __str__(self):
        if self.kind == CHAIN:
            return f"chain({self.size})"
        return "lattice{" + ",".join(self.names) + "}"


@dataclass(frozen=True)
class Interval:
    lo: int
    hi: int

    def members(self, lattice: Lattice) -> tuple[int, ...]:
        return tuple(
            c for c in lattice.elements if lattice.leq(self.lo, c) and lattice.leq(c, self.hi)
        )


def make_chain(m: int) -> Lattice:
    if m < 1:
        raise InvalidSizeError(f"chain size must be positive, got {m}")
    meet = tuple(tuple(min(a, b) for b in range(m)) for a in range(m))
    join = tuple(tuple(max(a, b) for b in range(m)) for a in range(m))
    return Lattice(CHAIN, tuple(str(i) for i in range(m)), meet, join, 0, m - 1)


def make_table_lattice(
    names: Sequence[str], meet: Sequence[Sequence[int]], join: Sequence[Sequence[int]]
) -> Lattice:
    """Validate meet/join tables and build a distributive table lattice.

    Every law is checked over all pairs and triples; the first failure raises
    :class:`LawViolationError` carrying the law name and witness elements.
    """
    m = len(names)
    if m < 1:
        raise InvalidSizeError("a lattice needs at least one element")
    if len(set(names)) != m:
        raise LawViolationError("distinct element names", names)
    for label, table in (("meet", meet), ("join", join)):
        if len(table) != m or any(len(row) != m for row in table):
            raise LawViolationError(f"{label} table shape {m}x{m}", (len(table),))
        for a, row in enumerate(table):
            for b, v in enumerate(row):
                if not (isinstance(v, int) and 0 <= v < m):
                    raise LawViolationError(f"{label} entries are element indices", (a, b))
    M = tuple(tuple(row) for row in meet)
    J = tuple(tuple(row) for row in join)
    els = range(m)

    for a in els:
        if M[a][a] != a:
            raise LawViolationError("meet idempotency", (a,))
        if J[a][a] != a:
            raise LawViolationError("join idempotency", (a,))
    for a, b in itertools.product(els, repeat=2):
        if M[a][b] != M[b][a]:
            raise LawViolationError("meet commutativity", (a, b))
        if J[a][b] != J[b][a]:
            raise LawViolationError("join commutativity", (a, b))
        if M[a][J[a][b]] != a:
            raise LawViolationError("absorption a^(avb)=a", (a, b))
        if J[a][M[a][b]] != a:
            raise LawViolationError("absorption av(a^b)=a", (a, b))
        if (M[a][b] == a) != (J[a][b] == b):
            raise LawViolationError("order agreement (a^b=a iff avb=b)", (a, b))
    for a, b, c in itertools.product(els, repeat=3):
        if M[M[a][b]][c] != M[a][M[b][c]]:
            raise LawViolationError("meet associativity", (a, b, c))
        if J[J[a][b]][c] != J[a][J[b][c]]:
            raise LawViolationError("join associativity", (a, b, c))
    bottoms = [z for z in els if all(J[x][z] == x for x in els)]
    tops = [u for u in els if all(M[x][u] == x for x in els)]
    if not bottoms:
        raise LawViolationError("bottom element (x v 0 = x)", ())
    if not tops:
        raise LawViolationError("top element (x ^ 1 = x)", ())
    for a, b, c in itertools.product(els, repeat=3):
        if M[a][J[b][c]] != J[M[a][b]][M[a][c]]:
            raise LawViolationError("distributivity", (a, b, c))
    return Lattice(TABLE, tuple(str(n) for n in names), M, J, bottoms[0], tops[0])


def leq(L: Lattice, a: int, b: int) -> bool:
    return L.leq_table[a][b]


def meet(L: Lattice, a: int, b: int) -> int:
    return L.meet_table[a][b]


def join(L: Lattice, a: int, b: int) -> int:
    return L.join_table[a][b]


def tuple_meet(L: Lattice, x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
    return tuple(L.meet_table[a][b] for a, b in zip(x, y))


def tuple_join(L: Lattice, x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
    return tuple(L.join_table[a][b] for a, b in zip(x, y))


def tuple_meet_const(L: Lattice, x: Sequence[int], c: int) -> tuple[int, ...]:
    row = L.meet_table[c]
    return tuple(row[a] for a in x)


def tuple_join_const(L: Lattice, x: Sequence[int], c: int) -> tuple[int, ...]:
    row = L.join_table[c]
    return tuple(row[a] for a in x)


def tuple_leq(L: Lattice, x: Sequence[int], y: Sequence[int]) -> bool:
    return all(L.leq_table[a][b] for a, b in zip(x, y))


def med(L: Lattice, xs: Sequence[int]) -> int:
    """Median of an odd-length list.

    On a chain this is the middle order statistic; otherwise the join, over
    all (k+1)-element index subsets, of the meets.
    """
    n = len(xs)
    if n % 2 == 0:
        raise ArityError(f"median needs an odd number of arguments, got {n}")
    if L.is_chain:
        return sorted(xs, key=L.rank.__getitem__)[n // 2]
    return med_formula(L, xs)


def med_formula(L: Lattice, xs: Sequence[int]) -> int:
    n = len(xs)
    if n % 2 == 0:
        raise ArityError(f"median needs an odd number of arguments, got {n}")
    return L.join_all(
        L.meet_all(xs[i] for i in idx) for idx in itertools.combinations(range(n), n // 2 + 1)
    )


def med3(L: Lattice, a: int, b: int, c: int) -> int:
    M, J = L.meet_table, L.join_table
    return J[J[M[a][b]][M[b][c]]][M[a][c]]


def interval(L: Lattice, a: int, b: int) -> Interval:
    if not L.leq(a, b):
        raise ValueError(f"interval endpoints out of order: {L.name(a)} !<= {L.name(b)}")
    return Interval(a, b)


def convex_closure(L: Lattice, S: Iterable[int]) -> frozenset[int]:
    """Smallest convex subset of ``L`` containing ``S``."""
    hull = set(S)
    if not hull:
        raise EmptySetError("convex hull of the empty set")
    while True:
        extra = {
            c
            for c in L.elements
            if c not in hull and any(L.leq(a, c) and L.leq(c, b) for a in hull for b in hull)
        }
        if not extra:
            return frozenset(hull)
        hull |= extra


def convex_hull(L: Lattice, S: Iterable[int]):
    """Convex hull of ``S``: an :class:`Interval` on chains, a frozenset otherwise."""
    S = list(S)
    if not S:
        raise EmptySetError("convex hull of the empty set")
    if L.is_chain:
        key = L.rank.__getitem__
        return Interval(min(S, key=key), max(S, key=key))
    return convex_closure(L, S)
