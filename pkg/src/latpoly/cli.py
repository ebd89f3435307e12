"""latpoly command line.

Exit codes: 0 verdict true or clean run, 1 verdict false or discrepancy,
2 usage or validation error.  Reports go to stdout and are deterministic;
timings go to stderr.
"""

from __future__ import annotations

import argparse
import sys

from . import io
from .decide import characterize, decide_polynomial, decide_sugeno, decide_term
from .errors import LatPolyError
from .poly import (
    FuzzyMeasure,
    alpha_from_oracle,
    alpha_star,
    beta_from_oracle,
    beta_star,
    eval_cnf,
    eval_dnf,
    eval_simplex,
    is_unique_cnf,
    is_unique_dnf,
    sugeno_eval,
)
from .props import PROPERTIES, Domain, range_hull
from .harness import registry as reg
from .harness.sweep import MODES, RANDOM_MONOTONE, SweepPlan
from .harness.theorems import THEOREM_IDS, verify_theorem

S_PROPS = {"idempotent", "min-homogeneous", "max-homogeneous", "horizontally-minitive", "horizontally-maxitive"}
DOMAIN_PROPS = {
    "min-homogeneous",
    "max-homogeneous",
    "horizontally-minitive",
    "horizontally-maxitive",
    "median-decomposable",
    "conservative",
}
DECIDERS = {"poly": decide_polynomial, "sugeno": decide_sugeno, "term": decide_term}


class UsageError(LatPolyError, ValueError):
    pass


def cmd_eval(args):
    c = io.load_coefmap(args.func)
    L = c.lattice
    x = io.parse_tuple(L, args.at, c.arity)
    if args.form == "dnf":
        v = eval_dnf(c, x)
    elif args.form == "cnf":
        v = eval_cnf(c, x)
    elif args.form == "simplex":
        v = eval_simplex(c, x)
    else:
        v = sugeno_eval(FuzzyMeasure(L, c.arity, c.values), x)
    return {"form": args.form, "at": io.tuple_out(L, x), "value": io.element_out(L, v)}, 0


def cmd_canon(args):
    f = io.load_table(args.table)
    L = f.lattice
    poly = decide_polynomial(f)
    if not poly:
        raise UsageError(f"not a polynomial function; the extension disagrees at {io.tuple_out(L, poly.counterexample)}")
    a, b = alpha_from_oracle(f), beta_from_oracle(f)
    out = {"alpha": io.coefmap_obj(a), "beta": io.coefmap_obj(b)}
    if L.is_chain:
        out["alpha_star"] = io.coefmap_obj(alpha_star(a))
        out["beta_star"] = io.coefmap_obj(beta_star(b))
        out["unique_dnf"] = is_unique_dnf(f)
        out["unique_cnf"] = is_unique_cnf(f)
    else:
        out["note"] = "coefficient intervals are computed on chains only"
    return out, 0


def cmd_check(args):
    f = io.load_table(args.table)
    check = PROPERTIES[args.prop]
    kwargs = {}
    if args.prop in S_PROPS:
        kwargs["S"] = range_hull(f) if args.s == "range" else None
    elif args.s is not None:
        raise UsageError(f"--s does not apply to {args.prop}")
    if args.prop in DOMAIN_PROPS:
        kwargs["domain"] = Domain(args.domain)
    elif args.domain != "full":
        raise UsageError(f"--domain does not apply to {args.prop}")
    rep = check(f, **kwargs)
    return io.report_out(f.lattice, rep), 0 if rep.holds else 1


def cmd_decide(args):
    f = io.load_table(args.table)
    L = f.lattice
    d = DECIDERS[args.cls](f)
    out = {"class": args.cls, "verdict": d.verdict}
    if d.verdict:
        out["certificate"] = io.coefmap_obj(d.certificate)
    else:
        out["counterexample"] = io.tuple_out(L, d.counterexample)
        out["reason"] = d.reason
    return out, 0 if d.verdict else 1


def cmd_characterize(args):
    f = io.load_table(args.table)
    bm = characterize(f)
    out = {"polynomial": bm.polynomial, "bundles": bm.bundles, "disagreements": bm.disagreements()}
    return out, 0 if bm.agrees() else 1


def cmd_verify(args):
    L = io.load_lattice(args.lattice)
    mode = RANDOM_MONOTONE if args.mode == "random" else args.mode
    plan = SweepPlan(L, args.arity, mode, args.samples or 0, args.seed)
    run = verify_theorem(args.theorem, plan, args.expect_counterexample, args.workers)
    print(f"elapsed {run.elapsed:.2f}s", file=sys.stderr)
    disc = []
    for d in run.discrepancies:
        d = dict(d)
        if "values" in d:
            d["values"] = io.tuple_out(L, d["values"])
        for k in ("a", "b"):
            if k in d:
                d[k] = io.tuple_out(L, d[k])
        disc.append(d)
    out = {
        "theorem": run.theorem,
        "plan": plan.describe(),
        "expect_counterexample": run.expect_counterexample,
        "tables_checked": run.tables_checked,
        "discrepancy_count": run.discrepancy_count,
        "passed": run.passed,
        "discrepancies": disc,
    }
    return out, 0 if run.passed else 1


def cmd_counterexample(args):
    if args.name is None:
        return {"entries": [{"name": e.name, "note": e.note} for e in reg.registry()]}, 0
    try:
        e = reg.entry(args.name)
    except KeyError as err:
        raise UsageError(err.args[0]) from None
    L = e.lattice
    rows = []
    for (prop, expected), rep in zip(e.profile, reg.replay(e)):
        rows.append({"property": prop, "expected": expected, "got": rep.holds, "witness": io.witness_out(L, rep.witness)})
    problems = reg.mismatches(e)
    out = {
        "name": e.name,
        "note": e.note,
        "table": io.table_obj(e.table),
        "profile": rows,
        "matches": not problems,
    }
    if problems:
        out["mismatches"] = problems
    return out, 0 if not problems else 1


# -- text rendering -------------------------------------------------------------


def render_text(obj, indent=0) -> str:
    pad = "  " * indent
    lines = []
    for k, v in obj.items():
        if isinstance(v, dict) and v and all(isinstance(x, (bool, type(None))) for x in v.values()):
            lines.append(f"{pad}{k}:")
            width = max(len(str(name)) for name in v)
            for name, x in v.items():
                shown = "n/a" if x is None else ("true" if x else "false")
                lines.append(f"{pad}  {str(name).ljust(width)}  {shown}")
        elif isinstance(v, dict):
            lines.append(f"{pad}{k}:")
            lines.append(render_text(v, indent + 1))
        elif isinstance(v, list) and v and all(isinstance(x, dict) for x in v):
            lines.append(f"{pad}{k}:")
            for x in v:
                lines.append(f"{pad}  - " + ", ".join(f"{a}={_scalar(b)}" for a, b in x.items()))
        else:
            lines.append(f"{pad}{k}: {_scalar(v)}")
    return "\n".join(lines)


def _scalar(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "null"
    if isinstance(v, list):
        return "(" + ",".join(str(x) for x in v) + ")"
    return str(v)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="latpoly", description="Lattice polynomial functions on finite lattices.")
    p.add_argument("--format", choices=("json", "text"), default="json", help="report format (default json)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("eval", help="evaluate a coefficient map at a tuple")
    s.add_argument("--func", required=True, help="coefficient map file")
    s.add_argument("--at", required=True, help='tuple such as "(1,2)"')
    s.add_argument("--form", choices=("dnf", "cnf", "simplex", "sugeno"), default="dnf")
    s.set_defaults(run=cmd_eval)

    s = sub.add_parser("canon", help="canonical DNF/CNF coefficients of a polynomial table")
    s.add_argument("--table", required=True)
    s.set_defaults(run=cmd_canon)

    s = sub.add_parser("check", help="check one property of a table")
    s.add_argument("--table", required=True)
    s.add_argument("--prop", required=True, choices=sorted(PROPERTIES))
    s.add_argument("--domain", choices=[d.value for d in Domain], default="full")
    s.add_argument("--s", choices=("range", "all"), default=None, help="constant set: range hull or all of L")
    s.set_defaults(run=cmd_check)

    s = sub.add_parser("decide", help="decide membership in a function class")
    s.add_argument("--table", required=True)
    s.add_argument("--class", dest="cls", choices=sorted(DECIDERS), default="poly")
    s.set_defaults(run=cmd_decide)

    s = sub.add_parser("characterize", help="evaluate every condition bundle against the polynomial decision")
    s.add_argument("--table", required=True)
    s.set_defaults(run=cmd_characterize)

    s = sub.add_parser("verify", help="sweep tables and check a theorem or lemma")
    s.add_argument("--theorem", required=True, choices=THEOREM_IDS)
    s.add_argument("--lattice", required=True)
    s.add_argument("--arity", type=int, required=True)
    s.add_argument("--mode", choices=MODES + ("random",), default="exhaustive", help="'random' means random-monotone")
    s.add_argument("--samples", type=int)
    s.add_argument("--seed", type=int)
    s.add_argument("--expect-counterexample", action="store_true")
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(run=cmd_verify)

    s = sub.add_parser("counterexample", help="replay a registry entry (list entries without a name)")
    s.add_argument("name", nargs="?")
    s.set_defaults(run=cmd_counterexample)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "s", None) is None and args.command == "check" and args.prop in S_PROPS:
        args.s = "all"
    try:
        out, code = args.run(args)
    except (LatPolyError, ValueError) as err:
        print(io.dumps(io.error_obj(err)), file=sys.stderr)
        return 2
    print(io.dumps(out) if args.format == "json" else render_text(out))
    return code


if __name__ == "__main__":
    sys.exit(main())
