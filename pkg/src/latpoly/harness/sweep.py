"""Table enumeration and seeded sampling."""

from __future__ import annotations

import itertools
import os
import random
from dataclasses import dataclass
from typing import Iterator

from ..errors import CapExceededError
from ..lattice import Lattice
from ..poly import CoefMap, dnf_table
from ..table import FunctionTable, grid

DEFAULT_CAP = 1 << 24

EXHAUSTIVE = "exhaustive"
MONOTONE = "monotone"
RANDOM_MONOTONE = "random-monotone"
RANDOM_ANY = "random-any"
RANDOM_POLY = "random-poly"
MODES = (EXHAUSTIVE, MONOTONE, RANDOM_MONOTONE, RANDOM_ANY, RANDOM_POLY)
RANDOM_MODES = (RANDOM_MONOTONE, RANDOM_ANY, RANDOM_POLY)


def exhaustive_cap() -> int:
    return int(os.environ.get("LATPOLY_CAP", DEFAULT_CAP))


def table_count(L: Lattice, n: int) -> int:
    return L.size ** (L.size**n)


@dataclass(frozen=True)
class SweepPlan:
    lattice: Lattice
    arity: int
    mode: str = EXHAUSTIVE
    sample_count: int = 0
    seed: int | None = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown sweep mode {self.mode!r}; expected one of {MODES}")
        if self.arity < 1:
            raise ValueError("arity must be at least 1")
        if self.mode in RANDOM_MODES:
            if self.seed is None:
                raise ValueError("random sweeps need an explicit seed")
            if self.sample_count < 1:
                raise ValueError("random sweeps need a positive sample count")
        if self.mode == EXHAUSTIVE:
            need, cap = table_count(self.lattice, self.arity), exhaustive_cap()
            if need > cap:
                raise CapExceededError(
                    f"{need} tables exceed the exhaustive cap {cap}; "
                    "use mode 'monotone' or a random mode, or raise LATPOLY_CAP"
                )

    def tables(self) -> Iterator[FunctionTable]:
        L, n = self.lattice, self.arity
        if self.mode == EXHAUSTIVE:
            return enumerate_tables(L, n)
        if self.mode == MONOTONE:
            return enumerate_monotone_tables(L, n)
        rng = random.Random(self.seed)
        sample = {
            RANDOM_MONOTONE: sample_monotone,
            RANDOM_ANY: sample_table,
            RANDOM_POLY: sample_polynomial,
        }[self.mode]
        return (sample(L, n, rng) for _ in range(self.sample_count))

    def describe(self) -> dict:
        d = {"lattice": str(self.lattice), "arity": self.arity, "mode": self.mode}
        if self.mode in RANDOM_MODES:
            d["samples"] = self.sample_count
            d["seed"] = self.seed
        return d


def enumerate_tables(L: Lattice, n: int, cap: int | None = None) -> Iterator[FunctionTable]:
    """Every table L^n -> L, in lexicographic order of value vectors."""
    need = table_count(L, n)
    cap = exhaustive_cap() if cap is None else cap
    if need > cap:
        raise CapExceededError(
            f"{need} tables exceed the exhaustive cap {cap}; use monotone or random sampling"
        )
    size = L.size**n
    return (FunctionTable(L, n, vals) for vals in itertools.product(L.elements, repeat=size))


def enumerate_monotone_tables(L: Lattice, n: int) -> Iterator[FunctionTable]:
    """Every nondecreasing table, by backtracking along a linear extension of L^n."""
    g = grid(L, n)
    order = g.linear_extension
    covers = g.lower_covers
    leq = L.leq_table
    vals = [0] * g.size

    def rec(pos):
        if pos == len(order):
            yield FunctionTable(L, n, tuple(vals))
            return
        i = order[pos]
        below = [vals[j] for j in covers[i]]
        for v in L.elements:
            if all(leq[b][v] for b in below):
                vals[i] = v
                yield from rec(pos + 1)

    return rec(0)


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def sample_table(L: Lattice, n: int, seed) -> FunctionTable:
    rng = _rng(seed)
    return FunctionTable(L, n, tuple(rng.randrange(L.size) for _ in range(L.size**n)))


def monotone_repair(f: FunctionTable) -> FunctionTable:
    """Raise each value to the join of itself and its lower covers, in linear-extension order."""
    L, g = f.lattice, f.grid
    J = L.join_table
    vals = list(f.values)
    for i in g.linear_extension:
        for j in g.lower_covers[i]:
            vals[i] = J[vals[i]][vals[j]]
    return FunctionTable(L, f.arity, tuple(vals))


def sample_monotone(L: Lattice, n: int, seed) -> FunctionTable:
    return monotone_repair(sample_table(L, n, seed))


def sample_coefmap(L: Lattice, n: int, seed) -> CoefMap:
    rng = _rng(seed)
    return CoefMap(L, n, tuple(rng.randrange(L.size) for _ in range(1 << n)))


def sample_polynomial(L: Lattice, n: int, seed) -> FunctionTable:
    """Table of a random (not necessarily isotone) DNF coefficient map."""
    return dnf_table(sample_coefmap(L, n, seed))
