"""Lattice polynomial functions in normal form.

Coefficient maps are indexed by subset bitmask: bit ``i`` of the mask stands
for coordinate ``i + 1`` (coordinate ``i`` in 0-based Python indexing).  The
same convention is used everywhere, including files and reports.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

from .errors import (
    ArityError,
    ContractViolationError,
    MonotonicityError,
    UnsupportedLatticeError,
)
from .lattice import Lattice, med
from .table import FunctionTable, grid


def members(mask: int, n: int) -> tuple[int, ...]:
    return tuple(i for i in range(n) if mask >> i & 1)


def proper_submasks(mask: int):
    """Every J strictly contained in the subset ``mask``, the empty set included."""
    sub = (mask - 1) & mask
    while True:
        if sub != mask:
            yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True)
class CoefMap:
    lattice: Lattice
    arity: int
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if self.arity < 1:
            raise ArityError(f"arity must be at least 1, got {self.arity}")
        if len(self.values) != 1 << self.arity:
            raise ArityError(f"a coefficient map of arity {self.arity} has {1 << self.arity} entries")
        if any(not (0 <= v < self.lattice.size) for v in self.values):
            raise ValueError("coefficients must be valid element indices")

    def __getitem__(self, mask: int) -> int:
        return self.values[mask]

    @property
    def full(self) -> int:
        return (1 << self.arity) - 1

    def leq(self, other: "CoefMap") -> bool:
        L = self.lattice
        return all(L.leq(a, b) for a, b in zip(self.values, other.values))

    def is_isotone(self) -> bool:
        L = self.lattice
        return all(
            L.leq(v, self.values[mask | 1 << i])
            for mask, v in enumerate(self.values)
            for i in range(self.arity)
        )


class FuzzyMeasure(CoefMap):
    """Monotone set function with mu(empty) = bottom and mu([n]) = top."""

    def __post_init__(self):
        super().__post_init__()
        L = self.lattice
        if self.values[0] != L.bottom:
            raise ContractViolationError("fuzzy measure must vanish on the empty set", 0)
        if self.values[self.full] != L.top:
            raise ContractViolationError("fuzzy measure must be top on [n]", self.full)
        for mask, v in enumerate(self.values):
            for i in range(self.arity):
                if not L.leq(v, self.values[mask | 1 << i]):
                    raise ContractViolationError(
                        "fuzzy measure must be monotone", (mask, mask | 1 << i)
                    )


def _check_arity(coef: CoefMap, x: Sequence[int]):
    if len(x) != coef.arity:
        raise ArityError(f"expected {coef.arity} arguments, got {len(x)}")


def eval_dnf(alpha: CoefMap, x: Sequence[int]) -> int:
    """Join over I of (alpha(I) meet the x_i for i in I)."""
    _check_arity(alpha, x)
    M, J = alpha.lattice.meet_table, alpha.lattice.join_table
    acc = alpha.lattice.bottom
    for mask, v in enumerate(alpha.values):
        term = v
        for i, xi in enumerate(x):
            if mask >> i & 1:
                term = M[term][xi]
        acc = J[acc][term]
    return acc


def eval_cnf(beta: CoefMap, x: Sequence[int]) -> int:
    """Meet over I of (beta(I) join the x_i for i in I)."""
    _check_arity(beta, x)
    M, J = beta.lattice.meet_table, beta.lattice.join_table
    acc = beta.lattice.top
    for mask, v in enumerate(beta.values):
        term = v
        for i, xi in enumerate(x):
            if mask >> i & 1:
                term = J[term][xi]
        acc = M[acc][term]
    return acc


@lru_cache(maxsize=4096)
def dnf_table(alpha: CoefMap) -> FunctionTable:
    g = grid(alpha.lattice, alpha.arity)
    return FunctionTable(alpha.lattice, alpha.arity, tuple(eval_dnf(alpha, x) for x in g.tuples))


@lru_cache(maxsize=4096)
def cnf_table(beta: CoefMap) -> FunctionTable:
    g = grid(beta.lattice, beta.arity)
    return FunctionTable(beta.lattice, beta.arity, tuple(eval_cnf(beta, x) for x in g.tuples))


def alpha_from_oracle(f: FunctionTable) -> CoefMap:
    """alpha_f(I) = f(e_I)."""
    ind = f.grid.indicator
    return CoefMap(f.lattice, f.arity, tuple(f.values[i] for i in ind))


def beta_from_oracle(f: FunctionTable) -> CoefMap:
    """beta_f(I) = f(e_{[n] minus I})."""
    ind = f.grid.indicator
    full = (1 << f.arity) - 1
    return CoefMap(f.lattice, f.arity, tuple(f.values[ind[full ^ mask]] for mask in range(full + 1)))


def _require_chain(L: Lattice, what: str):
    if not L.is_chain:
        raise UnsupportedLatticeError(f"{what} is only defined on chains")


def _strictly_above_proper(alpha: CoefMap, mask: int) -> bool:
    L = alpha.lattice
    below = L.join_all(alpha[j] for j in proper_submasks(mask))
    return below != alpha[mask] and L.leq(below, alpha[mask])


def _strictly_below_proper(beta: CoefMap, mask: int) -> bool:
    L = beta.lattice
    above = L.meet_all(beta[j] for j in proper_submasks(mask))
    return above != beta[mask] and L.leq(beta[mask], above)


def alpha_star(alpha_f: CoefMap) -> CoefMap:
    """Lower end of the DNF coefficient interval: drop every coefficient its proper subsets already reach."""
    L = alpha_f.lattice
    _require_chain(L, "alpha_star")
    return CoefMap(
        L,
        alpha_f.arity,
        tuple(
            v if _strictly_above_proper(alpha_f, mask) else L.bottom
            for mask, v in enumerate(alpha_f.values)
        ),
    )


def beta_star(beta_f: CoefMap) -> CoefMap:
    L = beta_f.lattice
    _require_chain(L, "beta_star")
    return CoefMap(
        L,
        beta_f.arity,
        tuple(
            v if _strictly_below_proper(beta_f, mask) else L.top
            for mask, v in enumerate(beta_f.values)
        ),
    )


def goodstein_mismatch(f: FunctionTable, order: Sequence[int] | None = None) -> int | None:
    """Index of the first tuple where the Boolean-restriction extension disagrees with f.

    ``order`` is the sweep order over tuple indices (table order by default).
    Returns ``None`` when f is a polynomial function.
    """
    ext = dnf_table(alpha_from_oracle(f)).values
    for i in order if order is not None else range(len(ext)):
        if ext[i] != f.values[i]:
            return i
    return None


def _require_polynomial(f: FunctionTable):
    bad = goodstein_mismatch(f)
    if bad is not None:
        raise ContractViolationError("not a polynomial function", f.grid.tuples[bad])


def dnf_interval(f: FunctionTable) -> tuple[CoefMap, CoefMap]:
    """(alpha*_f, alpha_f): every coefficient map between them represents f in DNF."""
    _require_chain(f.lattice, "dnf_interval")
    _require_polynomial(f)
    a = alpha_from_oracle(f)
    return alpha_star(a), a


def cnf_interval(f: FunctionTable) -> tuple[CoefMap, CoefMap]:
    """(beta_f, beta*_f) for CNF representations."""
    _require_chain(f.lattice, "cnf_interval")
    _require_polynomial(f)
    b = beta_from_oracle(f)
    return b, beta_star(b)


def is_unique_dnf(f: FunctionTable) -> bool:
    _require_chain(f.lattice, "is_unique_dnf")
    _require_polynomial(f)
    a = alpha_from_oracle(f)
    # strict dominance is only needed where alpha_f is not already bottom
    return alpha_star(a) == a


def is_unique_cnf(f: FunctionTable) -> bool:
    _require_chain(f.lattice, "is_unique_cnf")
    _require_polynomial(f)
    b = beta_from_oracle(f)
    return beta_star(b) == b


@dataclass(frozen=True)
class PolyFunc:
    lattice: Lattice
    arity: int
    alpha: CoefMap

    def __call__(self, *x) -> int:
        if len(x) == 1 and isinstance(x[0], (tuple, list)):
            x = tuple(x[0])
        return eval_dnf(self.alpha, x)

    def table(self) -> FunctionTable:
        return dnf_table(self.alpha)


def extend_boolean(L: Lattice, g: Mapping[tuple, int]) -> PolyFunc:
    """Unique polynomial extension of a nondecreasing map on {0,1}^n.

    Keys of ``g`` are 0/1 tuples (0 = bottom, 1 = top); values are elements.
    """
    keys = list(g)
    if not keys:
        raise ArityError("empty Boolean map")
    n = len(keys[0])
    cube = list(itertools.product((0, 1), repeat=n))
    if set(keys) != set(cube) or any(len(k) != n for k in keys):
        raise ArityError(f"Boolean map must be defined on all of {{0,1}}^{n}")
    for e in cube:
        for i in range(n):
            if e[i] == 0:
                up = e[:i] + (1,) + e[i + 1:]
                if not L.leq(g[e], g[up]):
                    raise MonotonicityError(e, up)
    values = tuple(g[tuple(mask >> i & 1 for i in range(n))] for mask in range(1 << n))
    alpha = CoefMap(L, n, values)
    return PolyFunc(L, n, alpha)


@dataclass(frozen=True)
class SimplexDecomp:
    sigma: tuple[int, ...]  # 0-based coordinates, x[sigma[0]] <= ... <= x[sigma[n-1]]
    up_sets: tuple[int, ...]  # up_sets[i-1] = {sigma(i), ..., sigma(n)} for i = 1..n+1
    down_sets: tuple[int, ...]  # down_sets[i] = {sigma(1), ..., sigma(i)} for i = 0..n


def simplex_sets(sigma: Sequence[int]) -> SimplexDecomp:
    n = len(sigma)
    up = []
    for i in range(n + 1):
        up.append(sum(1 << s for s in sigma[i:]))
    down = [sum(1 << s for s in sigma[:i]) for i in range(n + 1)]
    return SimplexDecomp(tuple(sigma), tuple(up), tuple(down))


def decompose(L: Lattice, x: Sequence[int]) -> SimplexDecomp:
    """Standard simplex containing ``x``; ties keep ascending coordinate order."""
    _require_chain(L, "decompose")
    rank = L.rank
    return simplex_sets(sorted(range(len(x)), key=lambda k: rank[x[k]]))


def simplex_forms(alpha: CoefMap, x: Sequence[int], sigma: Sequence[int]) -> tuple[int, int, int]:
    """The join, meet and median simplex forms of ``alpha`` at ``x`` for ordering ``sigma``.

    No validation: for a non-isotone alpha, or a sigma that does not sort x,
    the three values need not agree.
    """
    L = alpha.lattice
    M, J = L.meet_table, L.join_table
    n = alpha.arity
    d = simplex_sets(sigma)
    b = [alpha[s] for s in d.up_sets]  # b[i-1] = alpha(S_up(i)), i = 1..n+1
    xs = [x[s] for s in sigma] + [L.top]  # x_sigma(n+1) = top
    join_form = L.join_all(M[b[i]][xs[i]] for i in range(n + 1))
    prev = [L.bottom] + xs[:n]  # x_sigma(0) = bottom
    meet_form = L.meet_all(J[b[i]][prev[i]] for i in range(n + 1))
    median_form = med(L, list(x) + b)
    return join_form, meet_form, median_form


def eval_simplex(alpha_f: CoefMap, x: Sequence[int]) -> int:
    _check_arity(alpha_f, x)
    L = alpha_f.lattice
    _require_chain(L, "eval_simplex")
    if not alpha_f.is_isotone():
        raise ContractViolationError("simplex forms need an isotone coefficient map")
    j, m, md = simplex_forms(alpha_f, x, decompose(L, x).sigma)
    assert j == m == md, (j, m, md)
    return j


def sugeno_eval(mu: FuzzyMeasure, x: Sequence[int]) -> int:
    return eval_dnf(mu, x)


def measure_from_poly(f: FunctionTable) -> FuzzyMeasure:
    """A fuzzy measure mu with med(f(0), S_mu(x), f(1)) = f(x) everywhere.

    mu agrees with alpha_f except on the empty set and [n], which are forced
    to bottom and top.
    """
    _require_polynomial(f)
    a = alpha_from_oracle(f)
    L = f.lattice
    values = list(a.values)
    values[0] = L.bottom
    values[-1] = L.top
    return FuzzyMeasure(L, f.arity, tuple(values))


def median_lemma_sides(L: Lattice, a: Sequence[int], b: Sequence[int]) -> tuple[int, int]:
    """Both sides of the join-of-meets / median identity for sequences of length n+1.

    Left: join_i (a_i meet b_i).  Right: med(a_1..a_n, b_1..b_{n+1}).
    """
    if len(a) != len(b) or not a:
        raise ArityError("median identity needs two sequences of equal positive length")
    left = L.join_all(L.meet(p, q) for p, q in zip(a, b))
    return left, med(L, list(a[:-1]) + list(b))
