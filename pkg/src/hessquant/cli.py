"""``hessquant`` command line: build objects, run suites, render diagrams.

Exit codes: 0 success, 1 a verification check failed, 2 bad input or an
exhausted Gröbner budget.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from . import coordring as cr
from . import fij, hessfn, ideal, quantum, symfun
from .poly import DEFAULT_REGISTRY as REG, Polynomial, serialize, to_json
from .verify import DEFAULT_SEED, GROEBNER_DEFAULT_N, POLY_DEFAULT_N, SUITES, SuiteConfig, run_suites

GEN_OBJECTS = {
    # name: (index names, help)
    "f": (("i", "j"), "f_{i,j}"),
    "F": (("i", "j"), "F_{i,j}"),
    "E": (("i", "n"), "E_i^(n)"),
    "hE": (("i",), "E_i^(n) truncated by --h"),
    "e": (("i", "n"), "e_i^(n)"),
    "h_sym": (("i", "n"), "complete homogeneous h_i^(n)"),
    "nu": (("i", "j", "n"), "nilpotent minor nu_{i,j}"),
    "xi": (("i", "j", "n"), "semisimple minor xi_{i,j}"),
}


class UsageError(Exception):
    pass


def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    # the subparser copy uses SUPPRESS so it never clobbers a flag given before the subcommand
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", default=d(False), help="emit JSON")
    p.add_argument("--seed", type=int, default=d(DEFAULT_SEED), help="seed for randomized checks")
    p.add_argument("--n-max", type=int, default=d(None), help="largest n exercised by verify")
    p.add_argument("--order", choices=("grevlex", "grlex"), default=d("grevlex"), help="Gröbner term order")
    p.add_argument("--degree-bound", type=int, default=d(None), help="truncate Hilbert series here")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _global_flags(suppress=True)
    parser = argparse.ArgumentParser(prog="hessquant", parents=[_global_flags(suppress=False)],
                                     description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="print a polynomial")
    g.add_argument("object", choices=sorted(GEN_OBJECTS))
    g.add_argument("indices", type=int, nargs="*")
    g.add_argument("--n", type=int, help="ambient n (alternative to the last index)")
    g.add_argument("--h", help="Hessenberg function for hE, e.g. 3,4,4,5,5")
    g.add_argument("--method", help="construction route, e.g. closed, charpoly, quantize")

    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("suite", choices=sorted(SUITES) + ["all"])
    v.add_argument("--jobs", type=int, default=1, help="worker processes across suites")
    v.add_argument("--max-pairs", type=int, default=200_000, help="Gröbner pair budget")
    v.add_argument("--verbose", action="store_true", help="list passing checks too")

    p = sub.add_parser("presentation", parents=[common], help="generators of a presentation")
    p.add_argument("target", choices=sorted(cr.TARGET_ALIASES))
    p.add_argument("h")
    p.add_argument("--hilbert", action="store_true", help="also compute the Hilbert series")

    d = sub.add_parser("diagram", parents=[common], help="draw the Hessenberg space")
    d.add_argument("h")
    d.add_argument("--dual", action="store_true")

    for name, text in (("dual", "print h*"), ("dim", "dimension of Hess(x, h)")):
        s = sub.add_parser(name, parents=[common], help=text)
        s.add_argument("h")
    return parser


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        print(text)


def _parse_h(text: str) -> hessfn.HessenbergFunction:
    try:
        return hessfn.parse_csv(text)
    except hessfn.InvalidHessenbergFunction as exc:
        raise UsageError(f"invalid Hessenberg function {text!r}: {exc}") from None


def _build(args) -> Polynomial:
    names, _ = GEN_OBJECTS[args.object]
    idx = list(args.indices)
    if args.object == "hE":
        if args.h is None:
            raise UsageError("hE needs --h")
        h = _parse_h(args.h)
        if len(idx) != 1:
            raise UsageError("hE takes one index i")
        return quantum.truncated_E(h, idx[0], h.n)
    if "n" in names and args.n is not None and len(idx) == len(names) - 1:
        idx.append(args.n)
    if len(idx) != len(names):
        raise UsageError(f"{args.object} takes indices {' '.join(names)}")
    vals = dict(zip(names, idx))
    method = args.method
    o = args.object
    if o == "f":
        return fij.f_poly(vals["i"], vals["j"], method or "recursion")
    if o == "F":
        return quantum.F_poly(vals["i"], vals["j"], method or "recursion")
    if o == "E":
        return quantum.E_poly(vals["i"], vals["n"], method or "recursion")
    for k, v in vals.items():
        if v < 0:
            raise UsageError(f"index {k} must be nonnegative")
    if o == "e":
        return symfun.elementary(vals["i"], vals["n"])
    if o == "h_sym":
        return symfun.complete(vals["i"], vals["n"])
    choice = cr.NILPOTENT if o == "nu" else cr.SEMISIMPLE
    return cr.defining_minor(choice, vals["i"], vals["j"], vals["n"])


def cmd_gen(args) -> int:
    p = _build(args)
    _emit(args, {"object": args.object, "indices": args.indices, "text": serialize(p), **to_json(p)},
          serialize(p))
    return 0


def cmd_verify(args) -> int:
    if args.n_max is not None and args.n_max < 2:
        raise UsageError("--n-max must be at least 2")
    cfg = SuiteConfig(
        n_max=args.n_max or POLY_DEFAULT_N,
        gb_n_max=args.n_max or GROEBNER_DEFAULT_N,
        seed=args.seed,
        order=args.order,
        degree_bound=args.degree_bound,
        max_pairs=args.max_pairs,
    )
    reports = run_suites([args.suite], cfg, jobs=args.jobs)
    passed = all(r.passed for r in reports)
    payload = {
        "passed": passed,
        "config": {"n_max": cfg.n_max, "gb_n_max": cfg.gb_n_max, "seed": cfg.seed, "order": cfg.order,
                   "degree_bound": cfg.degree_bound},
        "reports": [r.to_json() for r in reports],
    }
    lines = [r.to_text(args.verbose) for r in reports]
    total = sum(len(r.checks) for r in reports)
    failed = sum(len(r.failures) for r in reports)
    lines.append(f"{'PASS' if passed else 'FAIL'}: {total - failed}/{total} checks")
    _emit(args, payload, "\n".join(lines))
    return 0 if passed else 1


def _presentation_ring(target: str, h: hessfn.HessenbergFunction) -> List[int]:
    n = h.n
    if cr.TARGET_ALIASES[target] == cr.COHOMOLOGY:
        return [REG.x_id(k) for k in range(1, n + 1)]
    gone = hessfn.q_vanishing_set(h) if cr.TARGET_ALIASES[target] == cr.COORD_NILPOTENT else set()
    return [v for v in cr.xq_variables(n) if REG.kind(v) != "q" or tuple(REG.indices(v)) not in gone]


def cmd_presentation(args) -> int:
    h = _parse_h(args.h)
    gens = cr.presentation_generators(args.target, h)
    ring = _presentation_ring(args.target, h)
    payload = {
        "target": cr.TARGET_ALIASES[args.target],
        "h": list(h.values),
        "variables": [{"name": REG.name(v), "degree": REG.degree(v)} for v in ring],
        "generators": [serialize(g) for g in gens],
        "degrees": [g.homogeneous_degree() for g in gens],
    }
    lines = [f"target: {payload['target']}  h = ({h})",
             "variables: " + ", ".join(REG.name(v) for v in ring)]
    lines += [f"  [{d}] {t}" for t, d in zip(payload["generators"], payload["degrees"])]
    if args.hilbert:
        bound = args.degree_bound if args.degree_bound is not None else h.n * (h.n - 1) + 2
        gb = ideal.buchberger(gens, args.order, variables=ring)
        hs = ideal.hilbert_series(gb, bound)
        payload["hilbert"] = hs.to_json()
        lines.append(f"hilbert (through t^{bound}): {hs.to_text()}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_diagram(args) -> int:
    h = _parse_h(args.h)
    shown = hessfn.dual(h) if args.dual else h
    grid = hessfn.diagram(shown)
    _emit(args, {"h": list(shown.values), "rows": grid.split("\n")}, grid)
    return 0


def cmd_dual(args) -> int:
    d = hessfn.dual(_parse_h(args.h))
    _emit(args, {"dual": list(d.values)}, str(d))
    return 0


def cmd_dim(args) -> int:
    h = _parse_h(args.h)
    d = hessfn.dimension(h)
    _emit(args, {"h": list(h.values), "dimension": d}, str(d))
    return 0


COMMANDS = {
    "gen": cmd_gen,
    "verify": cmd_verify,
    "presentation": cmd_presentation,
    "diagram": cmd_diagram,
    "dual": cmd_dual,
    "dim": cmd_dim,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except ideal.BudgetExceeded as exc:
        print(f"error: Gröbner budget exhausted: {exc}", file=sys.stderr)
        return 2
    except (UsageError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
