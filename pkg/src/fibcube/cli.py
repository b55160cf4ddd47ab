"""Command-line interface.

Subcommands: fib, vertices, seq, poly, pack, ratio, selftest.  Most accept
``--format human|json|csv``.  JSON output is a single object with keys
``command``, ``params`` and ``result``; values that can exceed native JSON
integer precision are emitted as decimal strings, rationals as "a/b".  CSV
output is a header row followed by data rows, never quoted (no field ever
contains a comma).

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
limit hit (time or node budget; the printed result is then a lower bound).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .core import CapacityError, build_cube, fib
from .packing import SolverConfig, max_packing, verify_packing
from .polynomials import derive_poly, table1
from .sequences import coverage_ratio, packing_sequence, uncovered_sequence
from .selftest import run_all


def _emit_json(command: str, params: dict, result: dict) -> None:
    print(json.dumps({"command": command, "params": params, "result": result}, indent=2))


def _emit_csv(header: list[str], rows: list[list[object]]) -> None:
    print(",".join(header))
    for row in rows:
        print(",".join(str(field) for field in row))


def _cmd_fib(args: argparse.Namespace) -> int:
    if (args.n is None) == (args.n_max is None):
        print("error: provide exactly one of --n or --n-max", file=sys.stderr)
        return 2
    ns = [args.n] if args.n is not None else list(range(args.n_max + 1))
    rows = [(n, fib(n)) for n in ns]
    if args.format == "json":
        params = {"n": args.n} if args.n is not None else {"n_max": args.n_max}
        _emit_json("fib", params, {"values": [{"n": n, "value": str(v)} for n, v in rows]})
    elif args.format == "csv":
        _emit_csv(["n", "fib"], [[n, v] for n, v in rows])
    elif args.n is not None:
        print(rows[0][1])
    else:
        for n, v in rows:
            print(f"{n}\t{v}")
    return 0


def _cmd_vertices(args: argparse.Namespace) -> int:
    cube = build_cube(args.n)
    if args.format == "json":
        result = {
            "n": args.n,
            "count": str(len(cube.vertices)),
            "vertices": [str(v) for v in cube.vertices],
        }
        _emit_json("vertices", {"n": args.n}, result)
    elif args.format == "csv":
        rows = [[i, v.bits, str(v)] for i, v in enumerate(cube.vertices)]
        _emit_csv(["index", "value", "string"], rows)
    else:
        for v in cube.vertices:
            print(str(v))
    return 0


def _cmd_seq(args: argparse.Namespace) -> int:
    fn = uncovered_sequence if args.kind == "p" else packing_sequence
    rows = [(n, fn(args.k, n)) for n in range(args.n_max + 1)]
    params = {"kind": args.kind, "k": args.k, "n_max": args.n_max}
    if args.format == "json":
        _emit_json("seq", params, {"rows": [{"n": n, "value": str(v)} for n, v in rows]})
    elif args.format == "csv":
        _emit_csv(["n", "value"], [[n, v] for n, v in rows])
    else:
        for n, v in rows:
            print(f"{n}\t{v}")
    return 0


def _cmd_poly(args: argparse.Namespace) -> int:
    residues = [args.r] if args.r is not None else [0, 1, 2]
    if args.check_table1 and args.k > 4:
        print("error: --check-table1 only covers k <= 4", file=sys.stderr)
        return 2
    polys = [derive_poly(args.k, r) for r in residues]
    check = None
    if args.check_table1:
        check = all(p == table1(args.k, p.r) for p in polys)
    params = {"k": args.k}
    if args.r is not None:
        params["r"] = args.r
    if args.check_table1:
        params["check_table1"] = True
    if args.format == "json":
        result: dict = {"polynomials": [p.to_json() for p in polys]}
        if check is not None:
            result["table_check"] = "PASS" if check else "FAIL"
        _emit_json("poly", params, result)
    elif args.format == "csv":
        rows = []
        for p in polys:
            coeffs = p.coeffs if p.coeffs else (Fraction(0),)
            for power, c in enumerate(coeffs):
                rows.append([p.k, p.r, power, c])
        _emit_csv(["k", "r", "power", "coefficient"], rows)
    else:
        if args.r is not None:
            print(str(polys[0]))
        else:
            for p in polys:
                print(f"r={p.r}: {p}")
        if check is not None:
            print(f"table check: {'PASS' if check else 'FAIL'}")
    return 0 if check is not False else 1


def _cmd_pack(args: argparse.Namespace) -> int:
    config = SolverConfig() if args.time_limit is None else SolverConfig(time_limit=args.time_limit)
    result = max_packing(args.n, args.k, config)
    witness_ok = verify_packing(build_cube(args.n), result)
    expect_q = packing_sequence(args.k, args.n)
    expect_p = uncovered_sequence(args.k, args.n)
    consistent = result.size == expect_q and len(result.uncovered) == expect_p

    params = {"n": args.n, "k": args.k, "witness": bool(args.witness)}
    if args.time_limit is not None:
        params["time_limit"] = args.time_limit
    payload = {
        "size": str(result.size),
        "covered": str(result.covered_count),
        "uncovered_count": str(len(result.uncovered)),
        "optimal": result.optimal,
        "witness_valid": witness_ok,
        "recurrence_size": str(expect_q),
        "recurrence_uncovered": str(expect_p),
        "consistent": consistent,
        "nodes_explored": str(result.nodes_explored),
    }
    if args.witness:
        payload["patterns"] = [str(p) for p in result.chosen]
        payload["uncovered_vertices"] = [str(v) for v in result.uncovered]

    if args.format == "json":
        _emit_json("pack", params, payload)
    elif args.format == "csv":
        rows = [[key, value] for key, value in payload.items() if not isinstance(value, list)]
        if args.witness:
            rows += [[f"pattern_{i}", s] for i, s in enumerate(payload["patterns"])]
            rows += [[f"uncovered_{i}", s] for i, s in enumerate(payload["uncovered_vertices"])]
        _emit_csv(["field", "value"], rows)
    else:
        print(f"n={args.n} k={args.k}")
        print(f"packing size: {result.size} (covers {result.covered_count} vertices)")
        print(f"uncovered: {len(result.uncovered)}")
        print(f"recurrence: size {expect_q}, uncovered {expect_p}")
        if args.witness:
            for p in result.chosen:
                print(f"pattern: {p}")
            for v in result.uncovered:
                print(f"uncovered vertex: {v}")
        if not result.optimal:
            print("time limit exceeded: size is a lower bound, optimality not proven")
        else:
            print("CONSISTENT" if consistent else "INCONSISTENT")

    if not result.optimal:
        return 3
    if not witness_ok:
        return 1
    return 0 if consistent else 1


def _cmd_ratio(args: argparse.Namespace) -> int:
    rows = []
    for n in range(args.n_max + 1):
        unc, cov = coverage_ratio(args.k, n)
        rows.append((n, unc, cov))
    params = {"k": args.k, "n_max": args.n_max}
    if args.format == "json":
        result = {
            "rows": [
                {
                    "n": n,
                    "uncovered": str(unc),
                    "covered": str(cov),
                    "uncovered_approx": f"{float(unc):.12f}",
                    "covered_approx": f"{float(cov):.12f}",
                }
                for n, unc, cov in rows
            ]
        }
        _emit_json("ratio", params, result)
    elif args.format == "csv":
        header = ["n", "uncovered_exact", "covered_exact", "uncovered_approx", "covered_approx"]
        _emit_csv(
            header,
            [[n, unc, cov, f"{float(unc):.12f}", f"{float(cov):.12f}"] for n, unc, cov in rows],
        )
    else:
        for n, unc, cov in rows:
            print(f"{n}\t{unc}\t{cov}\t{float(unc):.12f}\t{float(cov):.12f}")
    return 0


def _cmd_selftest(args: argparse.Namespace) -> int:
    results = run_all(quick=args.quick)
    for r in results:
        print(r.line())
    npass = sum(1 for r in results if r.passed)
    verdict = "PASS" if npass == len(results) else "FAIL"
    print(f"overall: {verdict} ({npass}/{len(results)} criteria passed)")
    return 0 if npass == len(results) else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibcube",
        description="Disjoint hypercube packings and uncovered-vertex counts in Fibonacci cubes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("human", "json", "csv"), default="human")

    p_fib = sub.add_parser("fib", parents=[fmt], help="Fibonacci numbers")
    p_fib.add_argument("--n", type=int)
    p_fib.add_argument("--n-max", type=int)
    p_fib.set_defaults(handler=_cmd_fib)

    p_vert = sub.add_parser("vertices", parents=[fmt], help="vertex strings of the order-n cube")
    p_vert.add_argument("--n", type=int, required=True)
    p_vert.set_defaults(handler=_cmd_vertices)

    p_seq = sub.add_parser("seq", parents=[fmt], help="recurrence tables")
    p_seq.add_argument("kind", choices=("p", "q"), help="p: uncovered counts, q: packing sizes")
    p_seq.add_argument("--k", type=int, required=True)
    p_seq.add_argument("--n-max", type=int, required=True)
    p_seq.set_defaults(handler=_cmd_seq)

    p_poly = sub.add_parser("poly", parents=[fmt], help="closed-form residue-class polynomials")
    p_poly.add_argument("--k", type=int, required=True)
    p_poly.add_argument("--r", type=int, choices=(0, 1, 2))
    p_poly.add_argument("--check-table1", action="store_true", help="compare against built-in reference coefficients (k <= 4)")
    p_poly.set_defaults(handler=_cmd_poly)

    p_pack = sub.add_parser("pack", parents=[fmt], help="exact maximum packing on the explicit cube")
    p_pack.add_argument("--n", type=int, required=True)
    p_pack.add_argument("--k", type=int, required=True)
    p_pack.add_argument("--witness", action="store_true", help="print chosen patterns and uncovered vertices")
    p_pack.add_argument("--time-limit", type=float, help="solver budget in seconds")
    p_pack.set_defaults(handler=_cmd_pack)

    p_ratio = sub.add_parser("ratio", parents=[fmt], help="exact uncovered/covered fractions")
    p_ratio.add_argument("--k", type=int, required=True)
    p_ratio.add_argument("--n-max", type=int, required=True)
    p_ratio.set_defaults(handler=_cmd_ratio)

    p_self = sub.add_parser("selftest", help="run the nine verification criteria")
    p_self.add_argument("--quick", action="store_true", help="halve the solver grid caps")
    p_self.set_defaults(handler=_cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())
