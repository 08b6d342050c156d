"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 budget refusal,
64 usage error, 65 malformed input data.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from . import __version__
from .graphs import enumerate_wheels
from .pointcount import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    CountReport,
    classify_point,
    count_zeros,
    tabulate_by_type,
)
from .switching import cograph_to_class, orbit_has_induced_c5
from .treepoly import export_polynomial
from .verify import THEOREMS, run_theorem
from .weights import SUPPORTED_PRIMES, format_type, parse_point, weighting_to_graph

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_BUDGET = 2
EXIT_USAGE = 64
EXIT_DATA = 65

log = logging.getLogger("slopecount")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _prime(text: str) -> int:
    value = _positive(text)
    if value not in SUPPORTED_PRIMES:
        raise argparse.ArgumentTypeError(f"q must be one of {SUPPORTED_PRIMES}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--threads", type=_positive, default=None, help="worker count (default: SLOPECOUNT_THREADS or CPU count)")
    common.add_argument("--cache", type=Path, default=None, help="JSON-lines result cache")
    common.add_argument("--paranoid", action="store_true", help="use brute-force oracles instead of fast paths")
    common.add_argument("--override-budget", action="store_true", help=f"allow more than {DEFAULT_BUDGET:,} points")
    common.add_argument("--backend", choices=("cython", "numpy"), default=None)
    common.add_argument("-v", "--verbose", action="store_true")

    parser = _Parser(prog="slopecount", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("count-zeros", parents=[common], help="count common zeros of I_n or J_n over F_q")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--q", type=_prime, default=2)
    p.add_argument("--ideal", choices=("I", "J"), default="I")
    p.add_argument("--method", choices=("auto", "poly", "graph"), default="auto")

    p = sub.add_parser("classify", parents=[common], help="classify a point q:n:digits")
    p.add_argument("point")

    p = sub.add_parser("verify", parents=[common], help="run an exhaustive property suite")
    p.add_argument("--theorem", choices=THEOREMS, required=True)
    p.add_argument("--n", type=_positive, default=None)
    p.add_argument("--q", type=_prime, default=None)

    p = sub.add_parser("table", parents=[common], help="zeros and non-zeros per point type")
    p.add_argument("--n", type=_positive, default=4)
    p.add_argument("--q", type=_prime, default=3)
    p.add_argument("--ideal", choices=("I", "J"), default=None, help="tabulate an ideal instead of a single 3-wheel")

    p = sub.add_parser("export-poly", parents=[common], help="print wheel tree polynomials")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--ideal", choices=("I", "J"), default="I")
    return parser


# --- cache -----------------------------------------------------------------


def _cache_key(command: str, args) -> dict:
    return {"command": command, "n": args.n, "q": args.q, "ideal": getattr(args, "ideal", None), "version": __version__}


def cache_lookup(path: Optional[Path], key: dict) -> Optional[dict]:
    if path is None or not path.exists():
        return None
    hit = None
    with path.open() as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            try:
                entry = json.loads(line)
            except json.JSONDecodeError:
                log.warning("skipping corrupt cache line in %s", path)
                continue
            if entry.get("key") == key:
                hit = entry["result"]
    return hit


def cache_store(path: Optional[Path], key: dict, result: dict) -> None:
    if path is None:
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("a") as fh:
        fh.write(json.dumps({"key": key, "result": result}, sort_keys=True) + "\n")


# --- output ----------------------------------------------------------------


def _emit(fmt: str, data, out, csv_rows=None, text=None) -> None:
    if fmt == "json":
        out.write(json.dumps(data, sort_keys=False) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerows(csv_rows)
        out.write(buf.getvalue())
    else:
        out.write(text + "\n")


# --- subcommands -----------------------------------------------------------


def cmd_count_zeros(args, out) -> int:
    key = _cache_key("count-zeros", args)
    data = cache_lookup(args.cache, key)
    if data is None:
        method = "poly" if args.paranoid else args.method
        report = count_zeros(
            args.n,
            args.q,
            args.ideal,
            workers=args.threads,
            method=method,
            budget=None if args.override_budget else DEFAULT_BUDGET,
            backend=args.backend,
        )
        data = report.to_json()
        cache_store(args.cache, key, data)
    else:
        log.info("cache hit for %s", key)
    fields = ["n", "q", "ideal", "zeros", "total", "elapsed_ms"]
    _emit(
        args.format,
        data,
        out,
        csv_rows=[fields, [data[f] for f in fields]],
        text=f"n={data['n']} q={data['q']} ideal={data['ideal']}: {data['zeros']} zeros of {data['total']} points",
    )
    return EXIT_OK


def cmd_classify(args, out) -> int:
    try:
        a = parse_point(args.point)
    except ValueError as exc:
        print(f"slopecount: cannot parse point {args.point!r}: {exc}", file=sys.stderr)
        return EXIT_DATA
    record = classify_point(a)
    if a.q == 2:
        cls = cograph_to_class(weighting_to_graph(a))
        record["class"] = str(cls)
        record["class_has_induced_c5"] = orbit_has_induced_c5(cls, paranoid=args.paranoid)
    rows = [["field", "value"]] + [[k, json.dumps(v) if isinstance(v, (list, dict)) else v] for k, v in record.items()]
    text = "\n".join(f"{k}: {v}" for k, v in record.items())
    _emit(args.format, record, out, csv_rows=rows, text=text)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    try:
        results = run_theorem(args.theorem, n=args.n, q=args.q, backend=args.backend)
    except ValueError as exc:
        print(f"slopecount: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    passed = all(r.passed for r in results)
    data = {"theorem": args.theorem, "passed": passed, "checks": [r.to_json() for r in results]}
    rows = [["check", "checked", "failures", "passed", "counterexample"]] + [
        [r.name, r.checked, r.failures, r.passed, r.counterexample or ""] for r in results
    ]
    text = "\n".join(r.line() for r in results) + f"\n{'PASS' if passed else 'FAIL'}"
    _emit(args.format, data, out, csv_rows=rows, text=text)
    return EXIT_OK if passed else EXIT_VERIFY


def cmd_table(args, out) -> int:
    key = _cache_key("table", args)
    data = cache_lookup(args.cache, key)
    if data is None:
        report = tabulate_by_type(
            args.n,
            args.q,
            budget=None if args.override_budget else DEFAULT_BUDGET,
            backend=args.backend,
            ideal=args.ideal,
        )
        data = report.to_json()
        cache_store(args.cache, key, data)
    report = CountReport.from_json(data)
    rows = [["type", "zeros", "nonzeros"]]
    rows += [[format_type(t), z, nz] for t, (z, nz) in report.per_type.items()]
    rows.append(["total", report.zero_count, report.nonzero_count])
    text = "\n".join(f"{r[0]:>12} {r[1]:>10} {r[2]:>10}" for r in rows)
    data = dict(data, totals={"zeros": report.zero_count, "nonzeros": report.nonzero_count})
    _emit(args.format, data, out, csv_rows=rows, text=text)
    return EXIT_OK


def cmd_export_poly(args, out) -> int:
    lines = [export_polynomial(w) for w in enumerate_wheels(args.n, args.ideal)]
    if args.format == "json":
        out.write(json.dumps({"n": args.n, "ideal": args.ideal, "polynomials": lines}) + "\n")
    elif args.format == "csv":
        _emit("csv", None, out, csv_rows=[["wheel", "polynomial"]] + [
            [str(w), p] for w, p in zip(enumerate_wheels(args.n, args.ideal), lines)
        ])
    else:
        for line in lines:
            out.write(line + "\n")
    return EXIT_OK


COMMANDS = {
    "count-zeros": cmd_count_zeros,
    "classify": cmd_classify,
    "verify": cmd_verify,
    "table": cmd_table,
    "export-poly": cmd_export_poly,
}


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        return COMMANDS[args.command](args, out)
    except BudgetExceeded as exc:
        print(f"slopecount: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
