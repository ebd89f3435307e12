"""Shared fixtures and brute-force oracles.

The oracles here deliberately avoid the library's evaluators: polynomial
functions are generated as the closure of projections and constants under
pointwise meet and join, and properties are re-checked from their raw
definitions over plain Python tuples.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import pytest

from latpoly.harness.registry import diamond
from latpoly.lattice import make_chain
from latpoly.table import FunctionTable

DIAMOND_MEET = [[0, 0, 0, 0], [0, 1, 0, 1], [0, 0, 2, 2], [0, 1, 2, 3]]
DIAMOND_JOIN = [[0, 1, 2, 3], [1, 1, 3, 3], [2, 3, 2, 3], [3, 3, 3, 3]]


def raw_ops(m_or_diamond):
    """(meet, join, leq) on plain ints, independent of the Lattice class."""
    if m_or_diamond == "diamond":
        M, J = DIAMOND_MEET, DIAMOND_JOIN
        return (lambda a, b: M[a][b]), (lambda a, b: J[a][b]), (lambda a, b: M[a][b] == a)
    return min, max, (lambda a, b: a <= b)


@lru_cache(maxsize=None)
def brute_polynomials(m, n):
    """Value vectors of all polynomial functions on chain m (or "diamond"), arity n."""
    size = 4 if m == "diamond" else m
    meet, join, _ = raw_ops(m)
    pts = list(itertools.product(range(size), repeat=n))
    gens = {tuple(c for _ in pts) for c in range(size)}
    gens |= {tuple(x[k] for x in pts) for k in range(n)}
    seen = set(gens)
    frontier = list(seen)
    while frontier:
        new = []
        for f in frontier:
            for g in list(seen):
                for h in (tuple(map(meet, f, g)), tuple(map(join, f, g))):
                    if h not in seen:
                        seen.add(h)
                        new.append(h)
        frontier = new
    return frozenset(seen)


def brute_nondecreasing(m, n, values):
    size = 4 if m == "diamond" else m
    _, _, leq = raw_ops(m)
    pts = list(itertools.product(range(size), repeat=n))
    for i, x in enumerate(pts):
        for j, y in enumerate(pts):
            if all(leq(a, b) for a, b in zip(x, y)) and not leq(values[i], values[j]):
                return False
    return True


@pytest.fixture(scope="session")
def c2():
    return make_chain(2)


@pytest.fixture(scope="session")
def c3():
    return make_chain(3)


@pytest.fixture(scope="session")
def c4():
    return make_chain(4)


@pytest.fixture(scope="session")
def dia():
    return diamond()


@pytest.fixture(scope="session")
def polys3(c3):
    """The 20 polynomial tables on chain 3, n = 2, in sorted value order."""
    return [FunctionTable(c3, 2, v) for v in sorted(brute_polynomials(3, 2))]
