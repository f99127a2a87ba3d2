"""Command-line front end.

Exit codes: 0 all checks pass, 1 verification or consistency failure,
2 usage or parse error, 3 enumeration cap refusal.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .counting import CountReport, scan_skew
from .errors import CapExceededError, ConsistencyError, ParseError
from .hilb4 import (HILB4_TOTAL_QUOTED, dt_invariant, ec_hilb4_total,
                    goettsche_coeff, hilb4_strata, macmahon_series)
from .laurent import format_poly, parse_poly
from .spaces import dimension, ec_traced, format_space_expr, parse_space_expr
from .suites import (KATZ_FAMILIES, SUITE_NAMES, SuiteContext, canonical_json,
                     emit_report, run_suite)


def _add_format(p):
    p.add_argument("--format", choices=("text", "json"), default="text",
                   help="output format")


def _add_scan_flags(p):
    p.add_argument("--workers", type=int, default=1,
                   help="worker processes for exhaustive scans")
    p.add_argument("--cap", type=int, default=None,
                   help="enumeration cap (default 10^8; env MOTIVIC_CAP)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="motivic",
        description="Exact E-polynomial calculus with finite-field "
                    "counting oracles.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("epoly", help="evaluate E_c of a space expression")
    p.add_argument("expr", help="space expression, e.g. "
                                "'affine(3) * cone(grass(2,6))'")
    p.add_argument("--trace", action="store_true",
                   help="include the derivation steps")
    p.add_argument("--at", nargs=2, metavar=("X0", "Y0"), default=None,
                   help="also evaluate at exact rationals, e.g. --at 2 1")
    _add_format(p)
    p.set_defaults(func=_cmd_epoly)

    p = sub.add_parser("count", help="exhaustive finite-field counts")
    csub = p.add_subparsers(dest="what", required=True)
    pr = csub.add_parser("rank", help="bucket all skew matrices by rank")
    pr.add_argument("--n", type=int, required=True, help="half the size")
    pr.add_argument("--p", type=int, required=True, help="field size")
    _add_scan_flags(pr)
    _add_format(pr)
    pr.set_defaults(func=_cmd_count_rank)
    pf = csub.add_parser("pfaffian-fibre", help="count {Pf = value}")
    pf.add_argument("--n", type=int, required=True)
    pf.add_argument("--p", type=int, required=True)
    pf.add_argument("--value", type=int, required=True)
    _add_scan_flags(pf)
    _add_format(pf)
    pf.set_defaults(func=_cmd_count_fibre)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("name", metavar=f"{{{','.join(SUITE_NAMES)}}}")
    p.add_argument("--suite", default=None,
                   help="katz only: restrict to a family "
                        f"({', '.join(KATZ_FAMILIES)})")
    p.add_argument("--p", type=int, nargs="+", default=[2, 3],
                   help="field sizes for the katz suite")
    _add_scan_flags(p)
    _add_format(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("hilb4", help="four points on affine 3-space")
    p.add_argument("what", choices=("total", "strata"))
    _add_format(p)
    p.set_defaults(func=_cmd_hilb4)

    p = sub.add_parser("dt", help="plane-partition counting")
    p.add_argument("what", choices=("count",))
    p.add_argument("--m", type=int, default=4, help="partition weight")
    p.add_argument("--cap", type=int, default=12,
                   help="largest weight the enumerator will attempt")
    _add_format(p)
    p.set_defaults(func=_cmd_dt)

    p = sub.add_parser("goettsche", help="points on the affine plane")
    p.add_argument("--n", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_goettsche)

    p = sub.add_parser("report", help="run suites and emit one report")
    p.add_argument("--suites", default=",".join(SUITE_NAMES),
                   help="comma-separated suite names")
    p.add_argument("--p", type=int, nargs="+", default=[2, 3])
    _add_scan_flags(p)
    _add_format(p)
    p.set_defaults(func=_cmd_report)

    return parser


def _emit(payload, fmt, text_lines):
    if fmt == "json":
        sys.stdout.write(canonical_json(payload))
    else:
        for line in text_lines:
            print(line)


def _cmd_epoly(args):
    expr = parse_space_expr(args.expr)
    value, steps = ec_traced(expr)
    payload = {"expr": format_space_expr(expr),
               "dimension": dimension(expr),
               "ec": format_poly(value),
               "euler": str(value.eval_at(1, 1))}
    lines = []
    if args.trace:
        payload["trace"] = steps
        lines += [f"{s['space']}  ->  {s['ec']}   [{s['rule']}]"
                  for s in steps]
    lines.append(format_poly(value))
    if args.at:
        x0, y0 = (Fraction(v) for v in args.at)
        payload["value_at"] = {"x": str(x0), "y": str(y0),
                               "value": str(value.eval_at(x0, y0))}
        lines.append(f"value at ({x0}, {y0}): {value.eval_at(x0, y0)}")
    _emit(payload, args.format, lines)
    return 0


def _cmd_count_rank(args):
    scan = scan_skew(args.n, args.p, "full", args.cap, args.workers)
    payload = {"kind": "rank", "n": args.n, "p": args.p,
               "counts": {str(r): c for r, c in scan.rank_counts.items()},
               "enumeration_size": scan.total}
    lines = [f"rank {r}: {c}" for r, c in sorted(scan.rank_counts.items())]
    lines.append(f"total: {scan.total}")
    _emit(payload, args.format, lines)
    return 0


def _cmd_count_fibre(args):
    scan = scan_skew(args.n, args.p, "hist", args.cap, args.workers)
    c = args.value % args.p
    observed = scan.pf_counts[c]
    report = CountReport(label=f"pf-fibre-n{args.n}-c{c}", p=args.p,
                         observed=observed, predicted=None,
                         predicted_value=None, match=None,
                         enumeration_size=scan.total, elapsed=scan.elapsed)
    payload = report.to_json_dict()
    payload.update({"n": args.n, "value": c})
    _emit(payload, args.format,
          [f"#{{Pf = {c}}} = {observed} of {scan.total}"])
    return 0


def _ctx(args):
    return SuiteContext(p_list=tuple(args.p), cap=args.cap,
                        workers=args.workers,
                        katz_family=getattr(args, "suite", None))


def _cmd_verify(args):
    if args.suite is not None and args.name != "katz":
        print("error: --suite applies to the katz suite only",
              file=sys.stderr)
        return 2
    result = run_suite(args.name, _ctx(args))
    sys.stdout.write(emit_report([result], args.format))
    return 0 if result.passed else 1


def _cmd_report(args):
    names = [s.strip() for s in args.suites.split(",") if s.strip()]
    for name in names:
        if name not in SUITE_NAMES:
            print(f"error: unknown suite {name!r}", file=sys.stderr)
            return 2
    ctx = SuiteContext(p_list=tuple(args.p), cap=args.cap,
                       workers=args.workers)
    results = [run_suite(name, ctx) for name in names]
    sys.stdout.write(emit_report(results, args.format))
    return 0 if all(r.passed for r in results) else 1


def _cmd_hilb4(args):
    total = ec_hilb4_total()
    quoted = parse_poly(HILB4_TOTAL_QUOTED)
    if args.what == "total":
        payload = {"total": format_poly(total),
                   "quoted": HILB4_TOTAL_QUOTED,
                   "match": total == quoted,
                   "euler": str(total.eval_at(1, 1))}
        _emit(payload, args.format, [format_poly(total)])
        return 0
    strata = hilb4_strata()
    rows = []
    for s in strata:
        d = s.to_json_dict()
        d["match"] = True  # each constructor verifies its quoted form
        rows.append(d)
    payload = {"strata": rows, "total": format_poly(total),
               "match": total == quoted}
    lines = [f"{s.label}: {format_poly(s.contribution)}   [{s.citation}]"
             for s in strata]
    lines.append(f"total: {format_poly(total)}")
    _emit(payload, args.format, lines)
    return 0


def _cmd_dt(args):
    m = args.m
    count = dt_invariant(m, cap=args.cap)
    coeff = macmahon_series(max(m, 1)).integer_coefficients()[m]
    payload = {"m": m, "plane_partitions": count,
               "macmahon_coefficient": coeff, "match": count == coeff}
    lines = [f"plane partitions of weight {m}: {count}",
             f"generating-function coefficient: {coeff}"]
    if m == 4:
        euler = int(ec_hilb4_total().eval_at(1, 1))
        payload["hilb4_euler"] = euler
        payload["match"] = payload["match"] and euler == count
        lines.append(f"Euler value of the four-point total: {euler}")
    _emit(payload, args.format, lines)
    return 0 if payload["match"] else 1


def _cmd_goettsche(args):
    value = goettsche_coeff(args.n)
    payload = {"n": args.n, "ec": format_poly(value), "routes_agree": True}
    _emit(payload, args.format, [format_poly(value)])
    return 0


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except KeyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapExceededError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 3
    except ConsistencyError as exc:
        print(f"fatal: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
