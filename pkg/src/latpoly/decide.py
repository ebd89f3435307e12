"""Recognition of polynomial functions, Sugeno integrals and term functions.

The reference decision is the Boolean-restriction test: read alpha_f off the
indicator tuples, extend it in DNF and compare with the table everywhere.
:func:`characterize` independently evaluates every condition bundle of the
known characterization theorems so they can be compared against it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from .lattice import Lattice
from .poly import CoefMap, alpha_from_oracle, goodstein_mismatch, measure_from_poly
from .props import (
    Domain,
    check_comonotonic_maxitive,
    check_comonotonic_minitive,
    check_componentwise_convex_range,
    check_conservative,
    check_convex_range,
    check_horizontally_maxitive,
    check_horizontally_minitive,
    check_idempotent,
    check_max_homogeneous,
    check_median_decomposable,
    check_min_homogeneous,
    check_nondecreasing,
    check_strongly_idempotent,
    range_hull,
)
from .table import FunctionTable, grid


@dataclass
class Decision:
    verdict: bool
    certificate: CoefMap | None = None
    counterexample: tuple[int, ...] | None = None
    reason: str = ""

    def __bool__(self):
        return self.verdict


@lru_cache(maxsize=64)
def _witness_order(lattice: Lattice, n: int) -> tuple[int, ...]:
    # tuples with fewer distinct values first; table order breaks ties
    g = grid(lattice, n)
    return tuple(sorted(range(g.size), key=lambda i: (len(set(g.tuples[i])), i)))


def decide_polynomial(f: FunctionTable) -> Decision:
    """Accept iff the DNF extension of f's Boolean restriction reproduces f.

    On rejection the counterexample is the first disagreeing tuple, taking
    tuples with fewer distinct coordinate values first.
    """
    bad = goodstein_mismatch(f, _witness_order(f.lattice, f.arity))
    if bad is None:
        return Decision(True, certificate=alpha_from_oracle(f))
    return Decision(False, counterexample=f.grid.tuples[bad], reason="extension disagrees")


def decide_sugeno(f: FunctionTable) -> Decision:
    poly = decide_polynomial(f)
    if not poly:
        return poly
    L = f.lattice
    if f.at_bottom() != L.bottom:
        return Decision(False, counterexample=f.grid.tuples[f.grid.zero], reason="f(0) is not bottom")
    if f.at_top() != L.top:
        return Decision(False, counterexample=f.grid.tuples[f.grid.one], reason="f(1) is not top")
    mu = measure_from_poly(f)
    assert mu.values == poly.certificate.values
    return Decision(True, certificate=mu)


def decide_term(f: FunctionTable) -> Decision:
    """Accept iff f is a Sugeno integral that is conservative on {0,1}^n.

    On chains full conservativeness is evaluated as well and must agree.
    """
    sug = decide_sugeno(f)
    weak = check_conservative(f, Domain.BOOLEAN)
    if sug and f.lattice.is_chain:
        assert bool(check_conservative(f, Domain.FULL)) == weak.holds
    if not sug:
        return sug
    if not weak:
        return Decision(False, counterexample=weak.witness["x"], reason="not weakly conservative")
    return sug


def is_term_by_coefficients(f: FunctionTable) -> bool:
    """Polynomial whose alpha_f is {0,1}-valued with alpha(empty)=0 and alpha([n])=1."""
    if goodstein_mismatch(f) is not None:
        return False
    a = alpha_from_oracle(f)
    L = f.lattice
    return set(a.values) <= {L.bottom, L.top} and a[0] == L.bottom and a[a.full] == L.top


class Facts:
    """Lazily evaluated property verdicts of one table, with S = [f(0), f(1)]."""

    def __init__(self, f: FunctionTable):
        self.f = f
        self.R = range_hull(f)
        self.L = None  # all of L

    @cached_property
    def nondecreasing(self):
        return check_nondecreasing(self.f).holds

    @cached_property
    def R_idempotent(self):
        return check_idempotent(self.f, self.R).holds

    @cached_property
    def R_min(self):
        return check_min_homogeneous(self.f, self.R).holds

    @cached_property
    def R_max(self):
        return check_max_homogeneous(self.f, self.R).holds

    @cached_property
    def hR_min(self):
        return check_horizontally_minitive(self.f, self.R).holds

    @cached_property
    def hR_max(self):
        return check_horizontally_maxitive(self.f, self.R).holds

    @cached_property
    def wR_min(self):
        return check_min_homogeneous(self.f, self.R, Domain.WEAK).holds

    @cached_property
    def wR_max(self):
        return check_max_homogeneous(self.f, self.R, Domain.WEAK).holds

    @cached_property
    def whR_min(self):
        return check_horizontally_minitive(self.f, self.R, Domain.WEAK).holds

    @cached_property
    def whR_max(self):
        return check_horizontally_maxitive(self.f, self.R, Domain.WEAK).holds

    @cached_property
    def whL_min(self):
        return check_horizontally_minitive(self.f, None, Domain.WEAK).holds

    @cached_property
    def whL_max(self):
        return check_horizontally_maxitive(self.f, None, Domain.WEAK).holds

    @cached_property
    def median_decomposable(self):
        return check_median_decomposable(self.f, Domain.FULL).holds

    @cached_property
    def weakly_median_decomposable(self):
        return check_median_decomposable(self.f, Domain.WEAK).holds

    @cached_property
    def strongly_idempotent(self):
        return check_strongly_idempotent(self.f).holds

    @cached_property
    def convex_range(self):
        return check_convex_range(self.f).holds

    @cached_property
    def componentwise_convex(self):
        return check_componentwise_convex_range(self.f).holds

    @cached_property
    def co_min(self):
        return check_comonotonic_minitive(self.f).holds

    @cached_property
    def co_max(self):
        return check_comonotonic_maxitive(self.f).holds


# bundle name -> hypotheses (Facts attributes), all of which must hold
BUNDLES: dict[str, tuple[str, ...]] = {
    "mainChar(ii)": ("median_decomposable",),
    "mainChar(iii)": ("nondecreasing", "strongly_idempotent", "convex_range", "componentwise_convex"),
    "mainChar(iv)": ("nondecreasing", "R_min", "R_max"),
    "mainChar(v)": ("nondecreasing", "R_min", "hR_max"),
    "mainChar(vi)": ("nondecreasing", "hR_min", "R_max"),
    "mainChar(vii)": ("nondecreasing", "R_idempotent", "hR_min", "hR_max"),
    "WeakHomWeakHor(ii)": ("nondecreasing", "wR_min", "wR_max"),
    "WeakHomWeakHor(iii)": ("nondecreasing", "wR_min", "whR_max"),
    "WeakHomWeakHor(iii,L)": ("nondecreasing", "wR_min", "whL_max"),
    "WeakHomWeakHor(iv)": ("nondecreasing", "whR_min", "wR_max"),
    "WeakHomWeakHor(iv,L)": ("nondecreasing", "whL_min", "wR_max"),
    "WeakHomWeakHor(v)": ("nondecreasing", "R_idempotent", "whR_min", "whR_max"),
    "WeakHomWeakHor(v,L)": ("nondecreasing", "R_idempotent", "whL_min", "whL_max"),
    "WeaklyMed": ("nondecreasing", "weakly_median_decomposable"),
    "ChainStrIdem": ("nondecreasing", "strongly_idempotent", "componentwise_convex"),
    "comonot(ii)": ("wR_min", "co_max"),
    "comonot(iii)": ("co_min", "wR_max"),
    "comonot(iv)": ("R_idempotent", "whR_min", "co_max"),
    "comonot(iv,L)": ("R_idempotent", "whL_min", "co_max"),
    "comonot(v)": ("R_idempotent", "co_min", "whR_max"),
    "comonot(v,L)": ("R_idempotent", "co_min", "whL_max"),
    "comonot(vi)": ("R_idempotent", "co_min", "co_max"),
}

CHAIN_ONLY_FACTS = {"co_min", "co_max"}


@dataclass
class BundleMatrix:
    polynomial: bool
    bundles: dict[str, bool | None] = field(default_factory=dict)

    def disagreements(self) -> list[str]:
        return [k for k, v in self.bundles.items() if v is not None and v != self.polynomial]

    def agrees(self) -> bool:
        return not self.disagreements()


def characterize(f: FunctionTable, bundles=None) -> BundleMatrix:
    """Evaluate each condition bundle; comonotonic bundles are not applicable off chains."""
    facts = Facts(f)
    chain = f.lattice.is_chain
    out = {}
    for name in bundles or BUNDLES:
        hyps = BUNDLES[name]
        if not chain and CHAIN_ONLY_FACTS.intersection(hyps):
            out[name] = None
        else:
            out[name] = all(getattr(facts, h) for h in hyps)
    return BundleMatrix(decide_polynomial(f).verdict, out)
