"""Executable content of the characterization theorems and lemmas.

Each theorem id maps to a per-table check returning a list of discrepancy
descriptions (empty when the statement holds for that table).  The median
identity is the exception: it sweeps pairs of monotone sequences instead of
tables.
"""

from __future__ import annotations

import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from ..decide import BUNDLES, Facts, characterize, decide_polynomial, decide_sugeno, is_term_by_coefficients
from ..errors import LatPolyError
from ..lattice import Interval, Lattice, med3, med_formula
from ..poly import (
    CoefMap,
    alpha_from_oracle,
    beta_from_oracle,
    cnf_interval,
    cnf_table,
    dnf_interval,
    dnf_table,
    eval_simplex,
    is_unique_cnf,
    is_unique_dnf,
    measure_from_poly,
    median_lemma_sides,
    simplex_forms,
    sugeno_eval,
)
from ..props import (
    Domain,
    check_comonotonic_maxitive,
    check_comonotonic_minitive,
    check_conservative,
    check_conservative_closure,
    check_conservative_preimage,
    check_convex_range,
    check_horizontally_maxitive,
    check_horizontally_minitive,
    check_idempotent,
    check_max_homogeneous,
    check_min_homogeneous,
    check_nondecreasing,
    clamp,
    range_convex_hull,
)
from ..table import FunctionTable
from .sweep import SweepPlan

MAX_STORED = 200


class InvalidPlanError(LatPolyError, ValueError):
    pass


@dataclass
class TheoremRun:
    theorem: str
    plan: SweepPlan
    tables_checked: int = 0
    discrepancies: list = field(default_factory=list)
    discrepancy_count: int = 0
    elapsed: float = 0.0
    expect_counterexample: bool = False

    @property
    def passed(self) -> bool:
        if self.expect_counterexample:
            return self.discrepancy_count > 0
        return self.discrepancy_count == 0


# -- bundle theorems ---------------------------------------------------------


def _bundle_check(names):
    def check(f):
        bm = characterize(f, names)
        return [f"{b}={bm.bundles[b]} but polynomial={bm.polynomial}" for b in bm.disagreements()]

    return check


def _bundles(prefix):
    return [b for b in BUNDLES if b.startswith(prefix)]


# -- representation ----------------------------------------------------------


def _sorting_orders(L: Lattice, x):
    """Every permutation sigma with x[sigma[0]] <= ... <= x[sigma[n-1]]."""
    r = L.rank
    return [
        s for s in itertools.permutations(range(len(x)))
        if all(r[x[s[i]]] <= r[x[s[i + 1]]] for i in range(len(s) - 1))
    ]


def check_simplex_dnf(f):
    out = []
    L = f.lattice
    poly = decide_polynomial(f).verdict
    a = alpha_from_oracle(f)
    simplex_ok = all(
        all(v == fx for v in simplex_forms(a, x, s))
        for x, fx in f.points()
        for s in _sorting_orders(L, x)
    )
    if simplex_ok != poly:
        out.append(f"simplex representation holds={simplex_ok} but polynomial={poly}")
    if poly:
        for x, fx in f.points():
            if eval_simplex(a, x) != fx:
                out.append(f"eval_simplex differs from f at {x}")
                break
    return out


def check_dnf_cnf(f):
    poly = decide_polynomial(f).verdict
    cnf_ok = cnf_table(beta_from_oracle(f)).values == f.values
    if cnf_ok != poly:
        return [f"CNF with beta_f reproduces f={cnf_ok} but polynomial={poly}"]
    return []


def _box(lo: CoefMap, hi: CoefMap):
    L = lo.lattice
    ranges = [
        [c for c in L.elements if L.leq(a, c) and L.leq(c, b)] for a, b in zip(lo.values, hi.values)
    ]
    return set(itertools.product(*ranges))


def check_uniqueness(f):
    if not decide_polynomial(f):
        return []
    out = []
    L, n = f.lattice, f.arity
    lo, hi = dnf_interval(f)
    blo, bhi = cnf_interval(f)
    dnf_box, cnf_box = _box(lo, hi), _box(blo, bhi)
    for gamma in itertools.product(L.elements, repeat=1 << n):
        c = CoefMap(L, n, gamma)
        if (dnf_table(c).values == f.values) != (gamma in dnf_box):
            out.append(f"DNF membership mismatch at gamma={gamma}")
            break
    for gamma in itertools.product(L.elements, repeat=1 << n):
        c = CoefMap(L, n, gamma)
        if (cnf_table(c).values == f.values) != (gamma in cnf_box):
            out.append(f"CNF membership mismatch at gamma={gamma}")
            break
    if is_unique_dnf(f) != (len(dnf_box) == 1):
        out.append("unique-DNF flag disagrees with the box size")
    if is_unique_cnf(f) != (len(cnf_box) == 1):
        out.append("unique-CNF flag disagrees with the box size")
    return out


def check_prop_sug(f):
    if not decide_polynomial(f):
        return []
    mu = measure_from_poly(f)
    L = f.lattice
    lo, hi = f.at_bottom(), f.at_top()
    for x, fx in f.points():
        if med3(L, lo, sugeno_eval(mu, x), hi) != fx:
            return [f"clamped Sugeno integral differs from f at {x}"]
    return []


# -- range / homogeneity -----------------------------------------------------


def check_hom_id_46(f):
    out = []
    hull = range_convex_hull(f)
    convex = check_convex_range(f).holds
    idem = check_idempotent(f, hull).holds
    if idem and not convex:
        out.append("idempotent on the range hull but range not convex")
    rmin = check_min_homogeneous(f, hull).holds
    rmax = check_max_homogeneous(f, hull).holds
    if decide_polynomial(f) and not (rmin and rmax and idem and convex):
        out.append("polynomial lacks range-hull homogeneity, idempotency or convexity")
    rng = set(f.values)
    for name, full, exact in (
        ("min", rmin, check_min_homogeneous(f, rng).holds),
        ("max", rmax, check_max_homogeneous(f, rng).holds),
    ):
        if full != (exact and convex):
            out.append(f"hull-{name}-homogeneity={full} but range-{name}-homogeneity and convexity={exact and convex}")
        # the interval form of the range needs monotonicity: (1,1,2,1,1,2,2,2,1) on
        # chain 3 is hull-min homogeneous with range {1,2} but f(0) = f(1) = 1
        if full and check_nondecreasing(f).holds:
            L = f.lattice
            iv = set(Interval(L.meet(f.at_bottom(), f.at_top()), L.join(f.at_bottom(), f.at_top())).members(L))
            if not (rng == hull == iv):
                out.append(f"{name}-homogeneous on the hull but range != [f(0), f(1)]")
    return out


def check_sug_weak_hom(f):
    facts = Facts(f)
    bundle = (
        facts.nondecreasing
        and check_min_homogeneous(f, None, Domain.BOOLEAN).holds
        and check_max_homogeneous(f, None, Domain.BOOLEAN).holds
    )
    sug = decide_sugeno(f).verdict
    return [] if bundle == sug else [f"Boolean homogeneity bundle={bundle} but sugeno={sug}"]


def check_weak_med_weak_hom(f):
    facts = Facts(f)
    if not facts.nondecreasing:
        return []
    lhs = facts.weakly_median_decomposable
    rhs = facts.wR_min and facts.wR_max
    return [] if lhs == rhs else [f"weakly median decomposable={lhs} but weak homogeneity={rhs}"]


def check_main_char3(f):
    if not decide_sugeno(f):
        return []
    term = is_term_by_coefficients(f)
    cons = check_conservative(f, Domain.FULL).holds
    weak = check_conservative(f, Domain.BOOLEAN).holds
    return [] if term == cons == weak else [f"term={term} conservative={cons} weakly={weak}"]


def check_fact_sugeno(f):
    if not decide_polynomial(f):
        return []
    L = f.lattice
    a = check_idempotent(f, {L.bottom, L.top}).holds
    b = check_idempotent(f).holds
    return [] if a == b else [f"{{0,1}}-idempotent={a} but idempotent={b}"]


# -- lemma suite ---------------------------------------------------------------


def _subsets(L: Lattice):
    els = list(L.elements)
    for r in range(1, len(els) + 1):
        yield from itertools.combinations(els, r)


def check_weakly_min_max_idem(f):
    out = []
    L, g, v = f.lattice, f.grid, f.values
    lo, hi = f.at_bottom(), f.at_top()
    for S in _subsets(L):
        if not (check_min_homogeneous(f, S, Domain.WEAK) and check_max_homogeneous(f, S, Domain.WEAK)):
            continue
        if not check_idempotent(f, S):
            out.append(f"weakly homogeneous for S={S} but not S-idempotent")
        if lo in S and hi in S:
            for i in g.vector_class(0, 2):
                if L.leq(lo, v[i]) and L.leq(v[i], hi) and f(clamp(f, g.tuples[i])) != v[i]:
                    out.append(f"f(x) != f(<x>_f) at {g.tuples[i]} for S={S}")
                    break
    return out


def check_weakly_min_max_range_idem(f):
    facts = Facts(f)
    if facts.nondecreasing and (facts.wR_min or facts.wR_max) and not facts.R_idempotent:
        return ["nondecreasing and weakly range-homogeneous but not range-idempotent"]
    return []


def check_weak_15682(f):
    out = []
    facts = Facts(f)
    if not facts.nondecreasing:
        return out
    for S in _subsets(f.lattice):
        if not check_idempotent(f, S):
            continue
        if check_horizontally_minitive(f, S, Domain.WEAK) and not check_min_homogeneous(f, S, Domain.WEAK):
            out.append(f"weakly horizontally S-minitive but not weakly S-min homogeneous, S={S}")
        if check_horizontally_maxitive(f, S, Domain.WEAK) and not check_max_homogeneous(f, S, Domain.WEAK):
            out.append(f"weakly horizontally S-maxitive but not weakly S-max homogeneous, S={S}")
    return out


def check_weak_hor_min_hom(f):
    out = []
    facts = Facts(f)
    if not facts.nondecreasing:
        return out
    if facts.wR_min and facts.wR_max != facts.whR_max:
        out.append("weak max homogeneity and weak horizontal maxitivity differ")
    if facts.wR_max and facts.wR_min != facts.whR_min:
        out.append("weak min homogeneity and weak horizontal minitivity differ")
    return out


def check_wmd_ri(f):
    facts = Facts(f)
    if facts.nondecreasing and facts.weakly_median_decomposable and not facts.R_idempotent:
        return ["weakly median decomposable but not range-idempotent"]
    return []


def check_componentwise_implies_conv(f):
    facts = Facts(f)
    if facts.nondecreasing and facts.componentwise_convex and not facts.convex_range:
        return ["componentwise convex range without convex range"]
    return []


def check_comonot_homog(f):
    out = []
    co_min = check_comonotonic_minitive(f).holds
    co_max = check_comonotonic_maxitive(f).holds
    if not (co_min or co_max):
        return out
    for S in _subsets(f.lattice):
        idem = check_idempotent(f, S).holds
        if co_min:
            if not check_horizontally_minitive(f, S):
                out.append(f"comonotonic minitive but not horizontally S-minitive, S={S}")
            if idem and not check_min_homogeneous(f, S):
                out.append(f"comonotonic minitive and S-idempotent but not S-min homogeneous, S={S}")
        if co_max:
            if not check_horizontally_maxitive(f, S):
                out.append(f"comonotonic maxitive but not horizontally S-maxitive, S={S}")
            if idem and not check_max_homogeneous(f, S):
                out.append(f"comonotonic maxitive and S-idempotent but not S-max homogeneous, S={S}")
    return out


def check_comonot_nondec(f):
    facts = Facts(f)
    out = []
    if (facts.co_min or facts.co_max) and not facts.nondecreasing:
        out.append("comonotonic minitive or maxitive but not nondecreasing")
    if f.arity == 1 and facts.nondecreasing and not (facts.co_min and facts.co_max):
        out.append("nondecreasing unary function not comonotonic minitive and maxitive")
    return out


def check_4985(f):
    if (
        check_min_homogeneous(f, None, Domain.BOOLEAN)
        and check_max_homogeneous(f, None, Domain.BOOLEAN)
        and not check_idempotent(f)
    ):
        return ["Boolean min and max homogeneous but not idempotent"]
    return []


def check_conservative_equivalences(f):
    a = check_conservative(f).holds
    b = check_conservative_closure(f).holds
    c = check_conservative_preimage(f).holds
    return [] if a == b == c else [f"conservative={a} closure={b} preimage={c}"]


LEMMAS: dict[str, Callable] = {
    "WeaklyMinMaxIdem": check_weakly_min_max_idem,
    "WeaklyMinMaxRangeIdem": check_weakly_min_max_range_idem,
    "Weak15682": check_weak_15682,
    "Weak-Hor-Min-Hom": check_weak_hor_min_hom,
    "WMD-RI": check_wmd_ri,
    "ComponentwiseImpliesConv": check_componentwise_implies_conv,
    "ComonotHomog": check_comonot_homog,
    "ComonotNonDec": check_comonot_nondec,
    "4985": check_4985,
    "conservative-equivalences": check_conservative_equivalences,
}


def check_lemma_suite(f):
    out = []
    for name, check in LEMMAS.items():
        if name in CHAIN_ONLY and not f.lattice.is_chain:
            continue
        out.extend(f"{name}: {d}" for d in check(f))
    return out


TABLE_THEOREMS: dict[str, Callable] = {
    "mainChar": _bundle_check(_bundles("mainChar")),
    "WLP-WeakHom": _bundle_check(["WeakHomWeakHor(ii)"]),
    "WLP-WeakHomWeakHor": _bundle_check(_bundles("WeakHomWeakHor")),
    "WLP-WeaklyMed": _bundle_check(["WeaklyMed"]),
    "ChainStrIdemWLP": _bundle_check(["ChainStrIdem"]),
    "WLP-comonot": _bundle_check(_bundles("comonot")),
    "all-bundles": _bundle_check(list(BUNDLES)),
    "SimplexDNF": check_simplex_dnf,
    "DNF-CNF": check_dnf_cnf,
    "Uniqueness": check_uniqueness,
    "Hom-Id-46": check_hom_id_46,
    "prop:sug": check_prop_sug,
    "Sug-WeakHom": check_sug_weak_hom,
    "WeakMedWeakHom": check_weak_med_weak_hom,
    "mainChar3": check_main_char3,
    "Fact-sugeno": check_fact_sugeno,
    **LEMMAS,
    "lemma-suite": check_lemma_suite,
}

THEOREM_IDS = tuple(TABLE_THEOREMS) + ("SimplexMedian",)

CHAIN_ONLY = {
    "mainChar", "WLP-WeakHomWeakHor", "WLP-WeaklyMed", "ChainStrIdemWLP", "WLP-comonot",
    "SimplexDNF", "SimplexMedian", "Uniqueness", "Sug-WeakHom", "WeakMedWeakHom", "mainChar3",
    "Weak15682", "Weak-Hor-Min-Hom", "WMD-RI", "ComponentwiseImpliesConv", "ComonotHomog",
    "ComonotNonDec",
}


# -- median identity over monotone sequences ----------------------------------


def _median_pairs(L: Lattice, n: int):
    r = L.rank
    up = [s for s in itertools.product(L.elements, repeat=n + 1)
          if all(r[s[i]] <= r[s[i + 1]] for i in range(n))]
    down = [s[::-1] for s in up]
    for a in up:
        for b in down:
            if r[a[-1]] >= r[b[-1]]:
                yield a, b


def _median_discrepancy(L, a, b):
    left = L.join_all(L.meet(p, q) for p, q in zip(a, b))
    right = med_formula(L, list(a[:-1]) + list(b))
    if (left, right) != median_lemma_sides(L, a, b):
        return {"a": a, "b": b, "detail": "median_lemma_sides disagrees with brute force"}
    if left != right:
        return {"a": a, "b": b, "detail": f"join of meets {left} != median {right}"}
    return None


def _run_median(run: TheoremRun):
    plan = run.plan
    L = plan.lattice
    if plan.mode in ("exhaustive", "monotone"):
        cases = (pair for n in range(1, plan.arity + 1) for pair in _median_pairs(L, n))
    else:
        rng = random.Random(plan.seed)
        r = L.rank

        def draw():
            n = plan.arity
            while True:
                a = tuple(sorted((rng.randrange(L.size) for _ in range(n + 1)), key=r.__getitem__))
                b = tuple(sorted((rng.randrange(L.size) for _ in range(n + 1)), key=r.__getitem__, reverse=True))
                if r[a[-1]] >= r[b[-1]]:
                    return a, b

        cases = (draw() for _ in range(plan.sample_count))
    for a, b in cases:
        run.tables_checked += 1
        d = _median_discrepancy(L, a, b)
        if d:
            run.discrepancy_count += 1
            if len(run.discrepancies) < MAX_STORED:
                run.discrepancies.append({"case": run.tables_checked - 1, **d})


def _check_slice(theorem: str, plan: SweepPlan, part: int, parts: int):
    check = TABLE_THEOREMS[theorem]
    count, found, stored = 0, 0, []
    for idx, f in enumerate(plan.tables()):
        if idx % parts != part:
            continue
        count += 1
        problems = check(f)
        if problems:
            found += 1
            if len(stored) < MAX_STORED:
                stored.append({"table": idx, "values": f.values, "problems": problems})
    return count, found, stored


def verify_theorem(
    theorem: str, plan: SweepPlan, expect_counterexample: bool = False, workers: int = 1
) -> TheoremRun:
    """Sweep the plan's tables and record every table where the statement fails.

    With several workers the table stream is dealt out round-robin and the
    per-worker reports are merged by table index, so the result does not
    depend on the worker count.
    """
    if theorem not in THEOREM_IDS:
        raise InvalidPlanError(f"unknown theorem id {theorem!r}")
    if theorem in CHAIN_ONLY and not plan.lattice.is_chain:
        raise InvalidPlanError(f"{theorem} is stated for chains only")
    run = TheoremRun(theorem, plan, expect_counterexample=expect_counterexample)
    start = time.perf_counter()
    if theorem == "SimplexMedian":
        _run_median(run)
    else:
        if workers > 1:
            jobs = [(theorem, plan, k, workers) for k in range(workers)]
            with ProcessPoolExecutor(workers) as pool:
                parts = list(pool.map(_check_slice, *zip(*jobs)))
        else:
            parts = [_check_slice(theorem, plan, 0, 1)]
        for count, found, stored in parts:
            run.tables_checked += count
            run.discrepancy_count += found
            run.discrepancies.extend(stored)
        run.discrepancies.sort(key=lambda d: d["table"])
        del run.discrepancies[MAX_STORED:]
    run.elapsed = time.perf_counter() - start
    return run
