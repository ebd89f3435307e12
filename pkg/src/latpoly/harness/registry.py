"""Counterexample registry: small functions showing that hypotheses cannot be dropped.

Every entry carries the verdicts it is known to produce.  ``replay`` re-derives
them through the checkers and deciders, so a regression in either shows up as
a profile mismatch.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..decide import Decision, decide_polynomial, decide_sugeno, decide_term
from ..errors import LatPolyError
from ..lattice import Lattice, make_chain, make_table_lattice, med
from ..props import (
    Domain,
    PropertyReport,
    check_componentwise_convex_range,
    check_comonotonic_maxitive,
    check_comonotonic_minitive,
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
from ..table import FunctionTable


class RegistryIntegrityError(LatPolyError, AssertionError):
    pass


def _decision_report(name: str, d: Decision) -> PropertyReport:
    witness = None if d.verdict else {"x": d.counterexample, "reason": d.reason}
    return PropertyReport(name, d.verdict, witness, "L^n")


# property label -> evaluator; "R" means S is the range hull [f(0), f(1)], "L" means S = L
PROFILE_CHECKS: dict[str, Callable[[FunctionTable], PropertyReport]] = {
    "nondecreasing": check_nondecreasing,
    "R-idempotent": lambda f: check_idempotent(f, range_hull(f)),
    "L-min-homogeneous": lambda f: check_min_homogeneous(f),
    "L-max-homogeneous": lambda f: check_max_homogeneous(f),
    "weak-R-min-homogeneous": lambda f: check_min_homogeneous(f, range_hull(f), Domain.WEAK),
    "weak-R-max-homogeneous": lambda f: check_max_homogeneous(f, range_hull(f), Domain.WEAK),
    "weak-L-min-homogeneous": lambda f: check_min_homogeneous(f, None, Domain.WEAK),
    "weak-L-max-homogeneous": lambda f: check_max_homogeneous(f, None, Domain.WEAK),
    "horizontally-L-minitive": lambda f: check_horizontally_minitive(f),
    "horizontally-L-maxitive": lambda f: check_horizontally_maxitive(f),
    "median-decomposable": lambda f: check_median_decomposable(f, Domain.FULL),
    "median-decomposable-(0,2)": lambda f: check_median_decomposable(f, Domain.ZERO_TWO),
    "weakly-median-decomposable": lambda f: check_median_decomposable(f, Domain.WEAK),
    "strongly-idempotent": check_strongly_idempotent,
    "convex-range": check_convex_range,
    "componentwise-convex-range": check_componentwise_convex_range,
    "comonotonic-minitive": check_comonotonic_minitive,
    "comonotonic-maxitive": check_comonotonic_maxitive,
    "conservative": lambda f: check_conservative(f, Domain.FULL),
    "polynomial": lambda f: _decision_report("polynomial", decide_polynomial(f)),
    "sugeno": lambda f: _decision_report("sugeno", decide_sugeno(f)),
    "term": lambda f: _decision_report("term", decide_term(f)),
}


@dataclass(frozen=True)
class RegistryEntry:
    name: str
    lattice: Lattice
    table: FunctionTable
    profile: tuple[tuple[str, bool], ...]
    note: str = ""
    counterexample: tuple | None = None  # expected decide_polynomial witness, if any


def diamond() -> Lattice:
    return make_table_lattice(
        ["0", "a", "b", "1"],
        [[0, 0, 0, 0], [0, 1, 0, 1], [0, 0, 2, 2], [0, 1, 2, 3]],
        [[0, 1, 2, 3], [1, 1, 3, 3], [2, 3, 2, 3], [3, 3, 3, 3]],
    )


def _diamond_function(L: Lattice) -> FunctionTable:
    o, a, b, t = (L.element(s) for s in "0ab1")

    def fn(x1, x2):
        if t in (x1, x2) or x1 == x2 == b:
            return t
        if a in (x1, x2):
            return a
        return o

    return FunctionTable.from_function(L, 2, fn)


def _ternary(L: Lattice) -> FunctionTable:
    def fn(*x):
        m = med(L, x)
        if m == L.top:
            return L.top
        return m if m == min(x) else L.bottom

    return FunctionTable.from_function(L, 3, fn)


def _threshold_mix(L: Lattice) -> FunctionTable:
    # join on the upper square [1,2]^2, meet elsewhere
    return FunctionTable.from_function(L, 2, lambda a, b: max(a, b) if min(a, b) >= 1 else min(a, b))


def registry() -> list[RegistryEntry]:
    c3, c4, dia = make_chain(3), make_chain(4), diamond()
    T, F = True, False
    return [
        RegistryEntry(
            "diamond",
            dia,
            _diamond_function(dia),
            (
                ("nondecreasing", T),
                ("weak-R-min-homogeneous", F),
                ("weak-R-max-homogeneous", F),
                ("weak-L-min-homogeneous", F),
                ("weak-L-max-homogeneous", F),
                ("weakly-median-decomposable", F),
                ("polynomial", F),
            ),
            "Boolean-square function that is top when a coordinate is 1 or both are b. "
            "The weak homogeneity claimed for it does not hold under the L_n^(0,2) "
            "definition; only the non-polynomiality is reproduced.",
            counterexample=(2, 2),
        ),
        RegistryEntry(
            "ternary",
            c3,
            _ternary(c3),
            (
                ("nondecreasing", T),
                ("median-decomposable-(0,2)", T),
                ("weakly-median-decomposable", F),
                ("weak-R-min-homogeneous", F),
                ("polynomial", F),
            ),
            "Median decomposable on the two-valued trimmed vectors only.",
            counterexample=(0, 1, 1),
        ),
        RegistryEntry(
            "square-gap",
            c3,
            FunctionTable(c3, 1, (0, 0, 2)),
            (
                ("nondecreasing", T),
                ("strongly-idempotent", T),
                ("convex-range", F),
                ("componentwise-convex-range", F),
                ("polynomial", F),
            ),
            "Unary x^2 analogue with a gap in its range.",
            counterexample=(1,),
        ),
        RegistryEntry(
            "square",
            c3,
            FunctionTable(c3, 1, (0, 0, 1)),
            (
                ("nondecreasing", T),
                ("convex-range", T),
                ("componentwise-convex-range", T),
                ("strongly-idempotent", F),
                ("polynomial", F),
            ),
            "Unary x^2 analogue: convex range but not strongly idempotent.",
            counterexample=(1,),
        ),
        RegistryEntry(
            "top-corner",
            c3,
            FunctionTable.from_function(c3, 2, lambda a, b: 2 if a == b == 2 else 0),
            (
                ("nondecreasing", T),
                ("strongly-idempotent", T),
                ("componentwise-convex-range", F),
                ("polynomial", F),
            ),
            "Two-valued binary function, top only at the top corner.",
            counterexample=(1, 1),
        ),
        RegistryEntry(
            "square-comonotonic",
            c4,
            FunctionTable(c4, 1, (0, 0, 1, 3)),
            (
                ("nondecreasing", T),
                ("comonotonic-minitive", T),
                ("comonotonic-maxitive", T),
                ("horizontally-L-minitive", T),
                ("horizontally-L-maxitive", T),
                ("R-idempotent", F),
                ("strongly-idempotent", F),
                ("polynomial", F),
            ),
            "Comonotonic and horizontally L-minitive/maxitive without idempotency.",
            counterexample=(1,),
        ),
        RegistryEntry(
            "meet-d",
            c3,
            FunctionTable(c3, 1, (0, 1, 1)),
            (
                ("L-min-homogeneous", T),
                ("horizontally-L-maxitive", T),
                ("polynomial", T),
                ("sugeno", F),
            ),
            "x AND d with d = 1: polynomial but f(1) is not top.",
        ),
        RegistryEntry(
            "join-d",
            c3,
            FunctionTable(c3, 1, (1, 1, 2)),
            (
                ("L-max-homogeneous", T),
                ("horizontally-L-minitive", T),
                ("polynomial", T),
                ("sugeno", F),
            ),
            "x OR d with d = 1: polynomial but f(0) is not bottom.",
        ),
        RegistryEntry(
            "threshold-mix",
            c3,
            _threshold_mix(c3),
            (
                ("nondecreasing", T),
                ("conservative", T),
                ("polynomial", F),
                ("term", F),
            ),
            "Join on [1,2]^2 and meet elsewhere: conservative but not a term function.",
            counterexample=(1, 2),
        ),
    ]


def entry(name: str) -> RegistryEntry:
    for e in registry():
        if e.name == name:
            return e
    raise KeyError(f"no registry entry named {name!r}; known: {[e.name for e in registry()]}")


def replay(e: RegistryEntry) -> list[PropertyReport]:
    return [PROFILE_CHECKS[prop](e.table) for prop, _ in e.profile]


def mismatches(e: RegistryEntry) -> list[str]:
    out = []
    for (prop, expected), rep in zip(e.profile, replay(e)):
        if rep.holds != expected:
            out.append(f"{e.name}: {prop} expected {expected}, got {rep.holds}")
    if e.counterexample is not None:
        got = decide_polynomial(e.table).counterexample
        if got != e.counterexample:
            out.append(f"{e.name}: polynomial counterexample expected {e.counterexample}, got {got}")
    return out


def check_registry() -> None:
    problems = [m for e in registry() for m in mismatches(e)]
    if problems:
        raise RegistryIntegrityError("; ".join(problems))
