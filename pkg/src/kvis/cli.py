"""Command-line front end: ``kvis solve|sweep|family|reduce|bounds``.

Exit codes: 0 success, 2 input or parameter error, 3 time budget exhausted,
4 internal invariant violated. ``KVIS_THREADS`` sets the solver's worker
count; output does not depend on it.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bounds import bound_report
from .errors import BudgetExceeded, InvariantViolation, KvisError
from .families import FamilySpec, expected_mu, generate_annotated
from .graph import (Graph, all_pairs, clique_number, max_independent_set, read_edge_list,
                    to_edge_list)
from .reduction import build_gprime, expected_mu_gprime, proof_witness_set
from .solver import mu_bruteforce, mu_k_exact, solve
from .visibility import is_k_mv_set

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_INVARIANT = 0, 2, 3, 4
REDUCE_EXACT_MAX_BASE = 4
SWEEP_PLAIN_CHECK_MAX_N = 14


def _labels(g: Graph, vertices) -> list[int]:
    return sorted(g.label(v) for v in vertices)


def _dump(obj) -> str:
    return json.dumps(obj)


def _parse_params(pairs: list[str] | None) -> dict[str, int]:
    params = {}
    for item in pairs or []:
        key, sep, value = item.partition("=")
        if not sep:
            raise argparse.ArgumentTypeError(f"parameter {item!r} is not of the form key=value")
        try:
            params[key.strip()] = int(value)
        except ValueError:
            raise argparse.ArgumentTypeError(f"parameter {item!r} needs an integer value") from None
    return params


def cmd_solve(args) -> int:
    g = read_edge_list(args.input)
    budget = args.budget_ms / 1000.0 if args.budget_ms is not None else None
    base = {"n": g.n, "m": g.m, "k": args.k}
    try:
        if args.method == "brute":
            res = solve(g, args.k, method="brute")
        else:
            res = mu_k_exact(g, args.k, budget=budget)
    except BudgetExceeded as exc:
        if args.json:
            print(_dump({**base, "lower_bound": exc.lower_bound,
                         "witness": _labels(g, exc.witness), "nodes": exc.nodes_explored,
                         "elapsed_ms": round(exc.elapsed * 1000, 3), "method": args.method}))
        else:
            print(f"budget exhausted: mu_{args.k} >= {exc.lower_bound}", file=sys.stderr)
        return EXIT_BUDGET
    if args.json:
        print(_dump({**base, "k_effective": res.k_effective, "clamped": res.clamped,
                     "mu": res.mu, "witness": _labels(g, res.witness),
                     "nodes": res.nodes_explored, "elapsed_ms": round(res.elapsed * 1000, 3),
                     "method": res.method}))
        return EXIT_OK
    note = f" (k clamped to diameter {res.k_effective})" if res.clamped else ""
    print(f"mu_{res.k_effective} = {res.mu}{note}")
    if args.witness:
        print("witness: " + " ".join(map(str, _labels(g, res.witness))))
    return EXIT_OK


def cmd_sweep(args) -> int:
    g = read_edge_list(args.input)
    g.require_connected()
    dm = all_pairs(g)
    rows = [(k, mu_k_exact(g, k, dm).mu) for k in range(1, max(dm.diameter, 1) + 1)]
    omega = clique_number(g)
    mu = rows[-1][1]
    plain = mu_bruteforce(g, dm) if g.n <= SWEEP_PLAIN_CHECK_MAX_N else None
    monotone = all(a <= b for (_, a), (_, b) in zip(rows, rows[1:]))
    consistent = monotone and rows[0][1] == omega and (plain is None or plain == mu)
    if args.json:
        print(_dump({"n": g.n, "m": g.m, "diameter": dm.diameter, "omega": omega, "mu": mu,
                     "mu_plain": plain, "rows": [{"k": k, "mu": v} for k, v in rows],
                     "monotone": monotone, "consistent": consistent}))
    else:
        print("k\tmu_k")
        for k, v in rows:
            print(f"{k}\t{v}")
        print(f"omega={omega} mu={mu}" + (f" mu(plain)={plain}" if plain is not None else ""))
    if not consistent:
        print("chain violation: solver invariant broken", file=sys.stderr)
        return EXIT_INVARIANT
    return EXIT_OK


def _family_spec(args) -> FamilySpec:
    inner = None
    if args.inner:
        inner = FamilySpec.of(args.inner, **_parse_params(args.inner_param))
    return FamilySpec.of(args.name, inner=inner, **_parse_params(args.param))


def cmd_family(args) -> int:
    spec = _family_spec(args)
    g, roles = generate_annotated(spec)
    if args.emit:
        with open(args.emit, "w", encoding="utf-8") as fh:
            fh.write(to_edge_list(g))
        with open(args.emit + ".roles", "w", encoding="utf-8") as fh:
            fh.write("".join(f"{v} {role}\n" for v, role in enumerate(roles)))
    dm = all_pairs(g)
    ks = [args.k] if args.k is not None else list(range(1, max(dm.diameter, 1) + 1))
    rows = []
    for k in ks:
        row = {"k": k, "expected": expected_mu(spec, k)}
        if args.check:
            row["solved"] = mu_k_exact(g, k, dm).mu
            row["match"] = None if row["expected"] is None else row["expected"] == row["solved"]
        rows.append(row)
    if args.json:
        print(_dump({"family": spec.describe(), "n": g.n, "m": g.m, "diameter": dm.diameter,
                     "rows": rows}))
    else:
        print(f"{spec.describe()}: n={g.n} m={g.m} diameter={dm.diameter}")
        for row in rows:
            exp = "no formula" if row["expected"] is None else row["expected"]
            if args.check:
                verdict = {True: "match", False: "MISMATCH", None: "-"}[row["match"]]
                print(f"k={row['k']}: expected {exp}, solved {row['solved']}, {verdict}")
            else:
                print(f"k={row['k']}: expected {exp}")
    if any(row.get("match") is False for row in rows):
        return EXIT_INVARIANT
    return EXIT_OK


def cmd_reduce(args) -> int:
    base = read_edge_list(args.input)
    layout = build_gprime(base)
    formula = expected_mu_gprime(layout, args.k)
    gp = layout.gprime
    if args.emit:
        with open(args.emit, "w", encoding="utf-8") as fh:
            fh.write(to_edge_list(gp, use_labels=False))
        with open(args.emit + ".roles", "w", encoding="utf-8") as fh:
            fh.write(layout.role_table())
    out = {"base_n": base.n, "base_m": base.m, "base_diameter": layout.base_diameter,
           "n": gp.n, "m": gp.m, "k": args.k, "formula": formula}
    ok = True
    if args.verify_construction or args.exact:
        dm = all_pairs(gp)
        if dm.diameter != layout.base_diameter:
            raise InvariantViolation("gadget diameter differs from base diameter")
        witness = proof_witness_set(layout, args.k, max_independent_set(base))
        valid = is_k_mv_set(gp, dm, witness, args.k)
        out.update(witness_size=len(witness), witness_valid=valid)
        ok = ok and valid and len(witness) == formula
    if args.exact:
        if base.n > REDUCE_EXACT_MAX_BASE and not args.force:
            raise KvisError(f"exact gadget solves are limited to bases of order "
                            f"<= {REDUCE_EXACT_MAX_BASE}; pass --force to override")
        res = mu_k_exact(gp, args.k, dm)
        out.update(mu=res.mu, hub_in_witness=layout.hub in res.witness,
                   match=res.mu == formula)
        ok = ok and res.mu == formula
    if args.json:
        print(_dump(out))
    else:
        print(f"gadget: n={gp.n} m={gp.m} diameter={layout.base_diameter}; "
              f"formula mu_{args.k} = {formula}")
        if "witness_size" in out:
            print(f"proof witness: size {out['witness_size']}, "
                  f"{'valid' if out['witness_valid'] else 'INVALID'}")
        if "mu" in out:
            print(f"exact mu_{args.k} = {out['mu']} ({'match' if out['match'] else 'MISMATCH'})")
    return EXIT_OK if ok else EXIT_INVARIANT


def cmd_bounds(args) -> int:
    g = read_edge_list(args.input)
    report = bound_report(g, args.k)
    if args.json:
        print(_dump(report.to_dict()))
    else:
        print(report.format())
    return EXIT_INVARIANT if report.failures() else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kvis", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="exact mu_k of an edge-list graph")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=("bb", "brute"), default="bb")
    p.add_argument("--witness", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--budget-ms", type=int)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("sweep", help="mu_k for every k up to the diameter")
    p.add_argument("--input", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("family", help="generate a named family and compare with its formula")
    p.add_argument("--name", required=True)
    p.add_argument("--param", action="append", metavar="KEY=VALUE")
    p.add_argument("--inner")
    p.add_argument("--inner-param", action="append", metavar="KEY=VALUE")
    p.add_argument("--emit", metavar="PATH")
    p.add_argument("--k", type=int)
    p.add_argument("--check", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("reduce", help="build the independent-set gadget graph")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--emit", metavar="PATH")
    p.add_argument("--verify-construction", action="store_true")
    p.add_argument("--exact", action="store_true")
    p.add_argument("--force", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("bounds", help="evaluate the general bounds")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bounds)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (KvisError, OSError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
