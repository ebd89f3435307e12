"""Explicit function tables ``L^n -> L`` and the precomputed tuple grid they sweep.

A table stores ``m**n`` values in row-major order: the tuple ``x`` sits at
index ``sum(x[k] * m**(n-1-k))``, so the first coordinate is most significant
and ``itertools.product`` order is table order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Callable, Sequence

from .errors import ArityError, UnsupportedLatticeError
from .lattice import Lattice


class Grid:
    """Index arithmetic on ``L^n``: every tuple operation the checkers need, as lookup lists."""

    def __init__(self, lattice: Lattice, n: int):
        if n < 1:
            raise ArityError(f"arity must be at least 1, got {n}")
        self.lattice = lattice
        self.n = n
        self.m = m = lattice.size
        self.tuples = list(itertools.product(range(m), repeat=n))
        self.size = len(self.tuples)
        self._weights = [m ** (n - 1 - k) for k in range(n)]
        self.zero = self.index((lattice.bottom,) * n)
        self.one = self.index((lattice.top,) * n)

    def index(self, x: Sequence[int]) -> int:
        if len(x) != self.n:
            raise ArityError(f"expected a {self.n}-tuple, got {tuple(x)}")
        return sum(a * w for a, w in zip(x, self._weights))

    @cached_property
    def diag(self) -> list[int]:
        return [self.index((c,) * self.n) for c in self.lattice.elements]

    @cached_property
    def indicator(self) -> list[int]:
        """``indicator[mask]`` is the index of e_I, I the coordinates set in ``mask``."""
        L = self.lattice
        return [
            self.index(tuple(L.top if mask >> i & 1 else L.bottom for i in range(self.n)))
            for mask in range(1 << self.n)
        ]

    @cached_property
    def boolean(self) -> list[int]:
        L = self.lattice
        return sorted({self.index(e) for e in itertools.product((L.bottom, L.top), repeat=self.n)})

    def _map_const(self, table) -> list[list[int]]:
        return [
            [self.index(tuple(table[c][a] for a in x)) for x in self.tuples]
            for c in self.lattice.elements
        ]

    @cached_property
    def meet_const(self) -> list[list[int]]:
        return self._map_const(self.lattice.meet_table)

    @cached_property
    def join_const(self) -> list[list[int]]:
        return self._map_const(self.lattice.join_table)

    @cached_property
    def cut_above(self) -> list[list[int]]:
        L = self.lattice
        return [
            [self.index(tuple(L.top if L.leq(c, a) else a for a in x)) for x in self.tuples]
            for c in L.elements
        ]

    @cached_property
    def cut_below(self) -> list[list[int]]:
        L = self.lattice
        return [
            [self.index(tuple(L.bottom if L.leq(a, c) else a for a in x)) for x in self.tuples]
            for c in L.elements
        ]

    @cached_property
    def subst(self) -> list[list[list[int]]]:
        """``subst[k][c][i]``: index of tuple ``i`` with coordinate ``k`` replaced by ``c``."""
        w = self._weights
        return [
            [[i + (c - x[k]) * w[k] for i, x in enumerate(self.tuples)] for c in self.lattice.elements]
            for k in range(self.n)
        ]

    @lru_cache(maxsize=None)
    def vector_class(self, p: int, q: int) -> tuple[int, ...]:
        L = self.lattice
        bounds = {L.bottom, L.top}
        return tuple(
            i
            for i, x in enumerate(self.tuples)
            if len(set(x) & bounds) >= p and len(set(x)) <= q
        )

    @cached_property
    def up_steps(self) -> list[tuple[int, int]]:
        """Pairs (x, y) where y raises one coordinate of x to an upper cover."""
        L, w = self.lattice, self._weights
        steps = []
        for i, x in enumerate(self.tuples):
            for k, a in enumerate(x):
                for b in L.elements:
                    if a in L.lower_covers[b]:
                        steps.append((i, i + (b - a) * w[k]))
        return steps

    @cached_property
    def lower_covers(self) -> list[list[int]]:
        L, w = self.lattice, self._weights
        return [
            [i + (b - a) * w[k] for k, a in enumerate(x) for b in L.lower_covers[a]]
            for i, x in enumerate(self.tuples)
        ]

    @cached_property
    def linear_extension(self) -> list[int]:
        rank = self.lattice.rank
        return sorted(range(self.size), key=lambda i: (sum(rank[a] for a in self.tuples[i]), i))

    @cached_property
    def comonotone_pairs(self) -> list[tuple[int, int, int, int]]:
        """All comonotonic pairs ``(x, y)`` with index(x) <= index(y), plus x^y and xvy."""
        L = self.lattice
        if not L.is_chain:
            raise UnsupportedLatticeError("comonotonicity needs a chain")
        r = L.rank
        keys = [tuple(r[a] for a in x) for x in self.tuples]
        pairs = []
        for i, x in enumerate(keys):
            for j in range(i, self.size):
                y = keys[j]
                if pairwise_comonotonic(x, y):
                    xs, ys = self.tuples[i], self.tuples[j]
                    pairs.append((
                        i,
                        j,
                        self.index(tuple(L.meet_table[a][b] for a, b in zip(xs, ys))),
                        self.index(tuple(L.join_table[a][b] for a, b in zip(xs, ys))),
                    ))
        return pairs


def pairwise_comonotonic(x: Sequence, y: Sequence) -> bool:
    """No coordinate pair is ordered one way in ``x`` and strictly the other way in ``y``."""
    n = len(x)
    for i in range(n):
        for j in range(i + 1, n):
            if (x[i] < x[j] and y[i] > y[j]) or (x[i] > x[j] and y[i] < y[j]):
                return False
    return True


@lru_cache(maxsize=64)
def grid(lattice: Lattice, n: int) -> Grid:
    return Grid(lattice, n)


@dataclass(frozen=True)
class FunctionTable:
    lattice: Lattice
    arity: int
    values: tuple[int, ...]

    def __post_init__(self):
        m, n = self.lattice.size, self.arity
        if n < 1:
            raise ArityError(f"arity must be at least 1, got {n}")
        if len(self.values) != m**n:
            raise ArityError(f"table for arity {n} over {m} elements needs {m**n} values")
        if any(not (0 <= v < m) for v in self.values):
            raise ValueError("table entries must be valid element indices")
        object.__setattr__(self, "values", tuple(self.values))

    @classmethod
    def from_function(cls, lattice: Lattice, n: int, fn: Callable[..., int]) -> "FunctionTable":
        return cls(lattice, n, tuple(fn(*x) for x in itertools.product(lattice.elements, repeat=n)))

    @cached_property
    def grid(self) -> Grid:
        return grid(self.lattice, self.arity)

    def __call__(self, *x) -> int:
        if len(x) == 1 and isinstance(x[0], (tuple, list)):
            x = tuple(x[0])
        return self.values[self.grid.index(x)]

    def at_bottom(self) -> int:
        return self.values[self.grid.zero]

    def at_top(self) -> int:
        return self.values[self.grid.one]

    def points(self):
        return zip(self.grid.tuples, self.values)
