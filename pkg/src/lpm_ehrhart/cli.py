"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 invalid shape, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from typing import Sequence

from .algebra import ZERO, Polynomial
from .ehrhart import (
    EhrhartReport,
    ehr_grouped,
    ehr_oracle,
    ehr_pm,
    ehr_positive,
    ehr_signed,
    ehr_snake,
    positive_decomposition,
    uniform_decomposition,
)
from .paths import enumerate_delannoy, ribbon_of
from .posets import RibbonShape, order_polynomial
from .shapes import ShapeError, SkewShape, connected, format_parts, parse_shape, rectangle
from .verify import rectangles_up_to, run_verify

EXIT_OK, EXIT_USAGE, EXIT_SHAPE, EXIT_VERIFY = 0, 1, 2, 3
METHODS = ("oracle", "signed", "grouped", "positive", "all")

log = logging.getLogger("lpm_ehrhart")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def ribbon_literal(r: RibbonShape) -> str:
    """``lambda/mu`` of a ribbon's cells, trimmed to its occupied rows and columns."""
    if not r.cells:
        return "0"
    rows = sorted({i for i, _ in r.cells})
    left = min(j for _, j in r.cells) - 1
    lam, mu = [], []
    for i in range(rows[0], rows[-1] + 1):
        cols = [j - left for (a, j) in r.cells if a == i]
        lam.append(max(cols) if cols else 0)
        mu.append(min(cols) - 1 if cols else 0)
    while mu and mu[-1] == 0:
        mu.pop()
    return format_parts(lam) + (f"/{format_parts(mu)}" if mu else "")


def _csv_rows(header: list[str], rows: list[list], polys: list[Polynomial]) -> str:
    width = max((len(p.coeffs) for p in polys), default=0)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header + [f"c{i}" for i in range(width)])
    for row, p in zip(rows, polys):
        cs = p.coeff_strings()
        w.writerow(row + cs + ["0"] * (width - len(cs)))
    return buf.getvalue().rstrip("\n")


def _dumps(data) -> str:
    return json.dumps(data, indent=2, sort_keys=False)


def _load_shape(text: str, need_connected: bool = True) -> SkewShape:
    s = parse_shape(text)
    if need_connected and not connected(s):
        raise ShapeError(f"shape {s} is not connected")
    return s


def cmd_ehrhart(args) -> int:
    s = _load_shape(args.shape)
    if args.method == "all":
        report = ehr_positive(s)
        print(_format_report(report, args.format))
        return EXIT_OK if report.agree and report.positive else EXIT_VERIFY
    if args.method == "positive":
        poly, _ = positive_decomposition(s)
    else:
        poly = {"oracle": ehr_oracle, "signed": ehr_signed, "grouped": ehr_grouped}[args.method](s)
    if args.format == "json":
        print(_dumps({"shape": s.to_json(), "method": args.method, "polynomial": poly.to_json()}))
    elif args.format == "csv":
        print(_csv_rows(["method"], [[args.method]], [poly]))
    else:
        print(poly)
    return EXIT_OK


def _format_report(report: EhrhartReport, fmt: str) -> str:
    if fmt == "json":
        return _dumps(report.to_json())
    polys = report.polynomials()
    if fmt == "csv":
        return _csv_rows(["method"], [[m] for m in polys], list(polys.values()))
    lines = [f"shape: {report.shape}"]
    lines += [f"{m:<9} {p}" for m, p in polys.items()]
    lines.append(f"agree:    {str(report.agree).lower()}")
    lines.append(f"positive: {str(report.positive).lower()}")
    lines.append("paths:")
    for w in report.witnesses:
        tag = " (min)" if w.is_min else ""
        lines.append(f"  {w.path.word or '.'}{tag}  hp={len(w.high_peaks)}  filters={w.filter_count}  {w.ehr_pm}")
    return "\n".join(lines)


def cmd_table(args) -> int:
    s = _load_shape(args.shape)
    if args.which == "delannoy":
        paths = enumerate_delannoy(s)
        polys = [ehr_snake(d) for d in paths]
        total = sum((p * d.sign for p, d in zip(polys, paths)), ZERO)
        rows = [
            {"path": d.word or ".", "diagonals": d.diagonals, "sign": d.sign,
             "ribbon": ribbon_literal(ribbon_of(d)), "ehr": p}
            for d, p in zip(paths, polys)
        ]
        header = ["path", "diagonals", "sign", "ribbon"]
    else:
        _, witnesses = positive_decomposition(s)
        total = ZERO
        rows = []
        if args.which == "grouped":
            for w in witnesses:
                p = ehr_pm(w.path, s)
                total = total + p
                rows.append({"path": w.path.word or ".", "min": w.is_min, "high_peaks": len(w.high_peaks), "ehr": p})
            header = ["path", "min", "high_peaks"]
        else:
            for w in witnesses:
                for strip in w.strips:
                    p = order_polynomial(strip).shift(1) if w.is_min else order_polynomial(strip)
                    total = total + p
                    rows.append({
                        "path": w.path.word or ".", "min": w.is_min, "strip": ribbon_literal(strip),
                        "argument": "t+1" if w.is_min else "t", "ehr": p,
                    })
            header = ["path", "min", "strip", "argument"]

    if args.format == "json":
        out = [{**{k: v for k, v in r.items() if k != "ehr"}, "ehr": r["ehr"].coeff_strings()} for r in rows]
        print(_dumps({"shape": s.to_json(), "which": args.which, "rows": out, "total": total.coeff_strings()}))
    elif args.format == "csv":
        body = [[r[h] for h in header] for r in rows] + [["total"] + [""] * (len(header) - 1)]
        print(_csv_rows(header, body, [r["ehr"] for r in rows] + [total]))
    else:
        for r in rows:
            cols = "  ".join(f"{r[h]!s:<6}" for h in header)
            print(f"{cols}  {r['ehr']}")
        print(f"total  {total}")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.max_rows < 1 or args.max_cols < 1 or args.max_t < 0 or args.jobs < 1:
        raise UsageError("--max-rows, --max-cols and --jobs must be >= 1, --max-t >= 0")
    extra = rectangles_up_to(args.rect_n) if args.rect_n else []
    result = run_verify(args.max_rows, args.max_cols, args.max_t, args.jobs, extra)
    for r in result.results:
        print(r.line())
    bad_pairs = [(a, b) for a, b, ok in result.nested if not ok]
    print(f"nested pairs: {len(result.nested)} checked, {len(bad_pairs)} failed")
    for a, b in bad_pairs:
        print(f"FAIL monotonicity {a} <= {b}")
    print(f"ribbons: {result.pp_checked} checked by two plane-partition counters up to t={args.max_t}, "
          f"{len(result.pp_failures)} failed")
    if result.ok:
        print(f"PASS ({len(result.results)} shapes)")
        return EXIT_OK
    for f in result.failures():
        print(f"FAIL {f}", file=sys.stderr)
    print(f"FAIL ({len(result.failures())} failed checks)")
    return EXIT_VERIFY


def cmd_uniform(args) -> int:
    k, n = args.k, args.n
    if not 1 <= k < n:
        raise UsageError(f"need 1 <= k < n, got k={k}, n={n}")
    groups = uniform_decomposition(k, n)
    poly = sum((sum(terms, ZERO) for _, terms in groups), ZERO)
    oracle = ehr_oracle(rectangle(k, n - k))
    agree = poly == oracle
    if args.format == "json":
        print(_dumps({
            "k": k, "n": n,
            "polynomial": poly.coeff_strings(),
            "oracle": oracle.coeff_strings(),
            "agree": agree,
            "groups": [{"path": w, "terms": [t.coeff_strings() for t in terms]} for w, terms in groups],
        }))
    elif args.format == "csv":
        print(_csv_rows(["method"], [["uniform"], ["oracle"]], [poly, oracle]))
    else:
        print(poly)
        print(f"oracle: {oracle}")
        print(f"agree: {str(agree).lower()}")
    return EXIT_OK if agree else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lpm-ehrhart", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    fmt = dict(choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("ehrhart", help="Ehrhart polynomial of a skew shape")
    p.add_argument("--shape", required=True)
    p.add_argument("--method", choices=METHODS, default="positive")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_ehrhart)

    p = sub.add_parser("table", help="per-path tables")
    p.add_argument("--shape", required=True)
    p.add_argument("--which", choices=("delannoy", "grouped", "filters"), default="delannoy")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="sweep all connected shapes in a box")
    p.add_argument("--max-rows", type=int, default=4)
    p.add_argument("--max-cols", type=int, default=4)
    p.add_argument("--max-t", type=int, default=6)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--rect-n", type=int, default=0,
                   help="also check every rectangle with n up to this value")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("uniform", help="hypersimplex Delta(k, n)")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_uniform)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ShapeError as e:
        print(f"invalid shape: {e}", file=sys.stderr)
        return EXIT_SHAPE


if __name__ == "__main__":
    sys.exit(main())
