"""Command-line front end.

Subcommands
-----------
poly        independence polynomial coefficients and independence number
invariants  Betti numbers, dimensions, primes, Alexander dual
generators  minimal generators in descending order with set sizes
verify      run brute-force oracle cross-checks

Exit codes: 0 success, 1 verification failure, 2 input error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .graph import FamilySpec, Graph, build_family, parse_edge_list
from .ideal import find_linear_quotient_order, ideal_of_independent_sets, verify_linear_quotients
from .indep import independence_polynomial
from .invariants import (
    DEFAULT_DUAL_BUDGET,
    alexander_dual,
    betti_numbers,
    invariant_report,
    primary_decomposition,
)
from .oracle import OracleSizeError, betti_table_oracle, intersect_all

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3

CHECKS = ("quotients", "primdec", "betti", "dual")
DEFAULT_CAPS = {"quotients": 14, "primdec": 5, "betti": 12, "dual": 16}


class CapExceeded(Exception):
    pass


def _load_graph(args) -> Graph:
    if args.family is not None:
        return build_family(FamilySpec.parse(args.family))
    with open(args.edges, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def _emit(args, payload: dict, plain: str):
    if args.format == "json":
        sys.stdout.write(json.dumps(payload) + "\n")
    else:
        sys.stdout.write(plain.rstrip("\n") + "\n")


def cmd_poly(args, g: Graph) -> int:
    poly = independence_polynomial(g)
    coeffs = list(poly)
    plain = f"I(G;x) coefficients: {' '.join(map(str, coeffs))}\nalpha: {poly.degree}"
    _emit(args, {"coeffs": coeffs, "alpha": poly.degree}, plain)
    return EXIT_OK


def cmd_invariants(args, g: Graph) -> int:
    report = invariant_report(g, dual_budget=args.dual_budget)
    d = report.to_dict()
    plain = "\n".join(f"{k}: {v}" for k, v in d.items())
    _emit(args, d, plain)
    return EXIT_OK


def cmd_generators(args, g: Graph) -> int:
    count = independence_polynomial(g)(1)
    if count > args.max_gens:
        print(f"error: {count} generators exceeds --max-gens {args.max_gens}", file=sys.stderr)
        return EXIT_CAP
    _, order = ideal_of_independent_sets(g)
    gens = [str(m) for m in order.monomials]
    # |set(m_i)| = |S_i| for this order; `verify --checks quotients` checks it
    sizes = [s.bit_count() for s in order.sets]
    plain = "\n".join(f"{m}\t{k}" for m, k in zip(gens, sizes))
    _emit(args, {"generators": gens, "set_sizes": sizes}, plain)
    return EXIT_OK


def _check_quotients(g: Graph, caps, threads):
    if g.n > caps["quotients"]:
        raise CapExceeded
    ideal, order = ideal_of_independent_sets(g)
    report = verify_linear_quotients(order)
    poly = independence_polynomial(g)
    hist = [0] * (max(report.set_sizes) + 1)
    for k in report.set_sizes:
        hist[k] += 1
    ok = report.ok and hist == list(poly) and all(m.degree == g.n for m in ideal.gens)
    return ok, {"generators": len(order), "violations": [i for i, _ in report.violations]}


def _check_primdec(g: Graph, caps, threads):
    if g.n > caps["primdec"]:
        raise CapExceeded
    ideal, _ = ideal_of_independent_sets(g)
    comps = [p.as_ideal() for p in primary_decomposition(g)]
    equal = intersect_all(comps) == ideal
    redundant = [
        str(primary_decomposition(g)[k])
        for k in range(len(comps))
        if intersect_all(comps[:k] + comps[k + 1 :]) == ideal
    ]
    return equal and not redundant, {"intersection_equal": equal, "redundant": redundant}


def _check_betti(g: Graph, caps, threads):
    ideal, _ = ideal_of_independent_sets(g)
    try:
        table = betti_table_oracle(ideal, variable_cap=caps["betti"], n_jobs=threads)
    except OracleSizeError:
        raise CapExceeded from None
    formula = betti_numbers(independence_polynomial(g))
    off = table.off_strand(g.n)
    totals = table.totals()
    ok = totals == formula and not off
    return ok, {"oracle": totals, "formula": formula, "off_strand": len(off)}


def _check_dual(g: Graph, caps, threads, budget=DEFAULT_DUAL_BUDGET):
    dual = alexander_dual(g)
    if len(dual) > caps["dual"]:
        raise CapExceeded
    res = find_linear_quotient_order(dual, budget)
    complete = g.is_complete()
    info = {"dual_linear_resolution": "undecided" if res.found is None else res.found, "complete": complete}
    if res.found is None:
        return None, info
    return res.found == complete, info


def cmd_verify(args, g: Graph) -> int:
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        print(f"error: unknown checks {unknown}; choose from {','.join(CHECKS)}", file=sys.stderr)
        return EXIT_INPUT
    caps = dict(DEFAULT_CAPS)
    if args.max_verify_vertices is not None:
        v = args.max_verify_vertices
        caps.update(quotients=v, primdec=v, betti=2 * v)
    runners = {
        "quotients": _check_quotients,
        "primdec": _check_primdec,
        "betti": _check_betti,
        "dual": lambda g, c, t: _check_dual(g, c, t, args.dual_budget),
    }
    results = []
    failed = False
    for name in checks:
        t0 = time.perf_counter()
        entry = {"check": name}
        try:
            ok, info = runners[name](g, caps, args.threads)
            entry["status"] = "undecided" if ok is None else ("pass" if ok else "fail")
            entry.update(info)
            failed |= ok is False
        except CapExceeded:
            entry["status"] = "skipped: over cap"
        if args.timing:
            entry["seconds"] = round(time.perf_counter() - t0, 6)
        results.append(entry)
    payload = {"n": g.n, "edges": g.num_edges, "ok": not failed, "checks": results}
    plain = "\n".join(f"{r['check']}: {r['status']}" for r in results)
    _emit(args, payload, plain)
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="indideal",
        description="Monomial ideals of independent sets of graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", metavar="SPEC", help="path:N, cycle:N, cyclepow:N:D, centipede:N, complete:N")
    src.add_argument("--edges", metavar="FILE", help="edge-list file")
    common.add_argument("--format", choices=("json", "plain"), default="json")
    common.add_argument("--threads", type=int, default=1, help="worker processes for the Betti oracle")
    common.add_argument("--dual-budget", type=int, default=DEFAULT_DUAL_BUDGET,
                        help="node budget for the dual linear-quotient search")

    sub.add_parser("poly", parents=[common], help="independence polynomial")
    sub.add_parser("invariants", parents=[common], help="full invariant report")
    p_gen = sub.add_parser("generators", parents=[common], help="ordered minimal generators")
    p_gen.add_argument("--max-gens", type=int, default=1 << 20)
    p_ver = sub.add_parser("verify", parents=[common], help="oracle cross-checks")
    p_ver.add_argument("--checks", default=",".join(CHECKS))
    p_ver.add_argument("--max-verify-vertices", type=int, default=None,
                       help="override vertex caps of the quotients, primdec and betti checks")
    p_ver.add_argument("--timing", action="store_true", help="include per-check wall time")
    return parser


COMMANDS = {
    "poly": cmd_poly,
    "invariants": cmd_invariants,
    "generators": cmd_generators,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        g = _load_graph(args)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return COMMANDS[args.command](args, g)


if __name__ == "__main__":
    sys.exit(main())
