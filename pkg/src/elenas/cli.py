"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from decimal import ROUND_DOWN, Decimal

from .core import (
    DEFAULT_LIMITS,
    render_dyck,
    render_elena_word,
    render_tree,
)
from .dyck import enumerate_dyck_paths, is_nondecreasing
from .elena import count_elenas, enumerate_elenas, word_to_dyck, word_to_tree
from .genfunc import (
    asymptotics_report,
    catalog,
    count_ratio_deviation,
    height_total_series,
)
from .height4 import elena_to_height4
from .stats import CSV_HEADER, STAT_FIELDS, aggregate, rows_to_csv
from .verify import SuiteConfig, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, rows: list[dict], header: list[str], plain: list[str]):
    out = sys.stdout
    if args.json:
        out.write(json.dumps(rows, indent=2) + "\n")
    elif args.csv:
        out.write(",".join(header) + "\n")
        for r in rows:
            out.write(",".join(str(r[h]) for h in header) + "\n")
    else:
        for line in plain:
            out.write(line + "\n")


def cmd_count(args) -> int:
    if args.max_n < 1:
        raise UsageError("--max-n must be at least 1")
    nd = catalog(args.max_n)["nondecreasing_dyck"].coefficients
    rows = []
    for n in range(1, args.max_n + 1):
        if n - 1 <= args.dyck_limit:
            paths = sum(1 for p in enumerate_dyck_paths(n - 1, limit=args.dyck_limit) if is_nondecreasing(p))
        else:
            paths = nd[n - 1]  # beyond the brute-force limit, read the series
        rows.append({"n": n, "count": count_elenas(n), "nondecreasing_dyck": paths})
    plain = [f"{r['n']}, {r['count']}, {r['nondecreasing_dyck']}" for r in rows]
    _emit(args, rows, ["n", "count", "nondecreasing_dyck"], plain)
    return EXIT_OK


_RENDER = {
    "word": render_elena_word,
    "dyck": lambda w: render_dyck(word_to_dyck(w)),
    "tree": lambda w: render_tree(word_to_tree(w)),
    "height4": lambda w: render_tree(elena_to_height4(w)),
}


def cmd_enumerate(args) -> int:
    render = _RENDER[args.format]
    lines = [render(w) for w in enumerate_elenas(args.n, limit=args.word_limit)]
    if args.json:
        sys.stdout.write(json.dumps(lines, indent=2) + "\n")
    else:
        for line in lines:
            sys.stdout.write(line + "\n")
    return EXIT_OK


def cmd_stats(args) -> int:
    row = aggregate(args.n, limit=args.word_limit)
    if not args.compare:
        d = row.as_dict()
        plain = [f"{k} = {d[k]}" for k in CSV_HEADER]
        if args.csv:
            sys.stdout.write(rows_to_csv([row]))
        else:
            _emit(args, [d], list(CSV_HEADER), plain)
        return EXIT_OK

    cat = catalog(args.n)
    series_vals = {k: cat[k].coefficients[args.n] for k in STAT_FIELDS if k in cat}
    series_vals["count"] = cat["count"].coefficients[args.n]
    series_vals["height_total"] = height_total_series(args.n)[args.n]
    records = []
    ok = True
    for k in ("count",) + STAT_FIELDS:
        brute = getattr(row, k)
        verdict = "MATCH" if brute == series_vals[k] else "MISMATCH"
        ok &= verdict == "MATCH"
        records.append({"n": args.n, "statistic": k, "brute_force": brute, "series": series_vals[k], "verdict": verdict})
    width = max(len(k) for k in CSV_HEADER)
    plain = [f"n = {args.n}", f"{'statistic':<{width}}  {'brute_force':>14}  {'series':>14}  verdict"]
    plain += [
        f"{r['statistic']:<{width}}  {r['brute_force']:>14}  {r['series']:>14}  {r['verdict']}" for r in records
    ]
    _emit(args, records, ["n", "statistic", "brute_force", "series", "verdict"], plain)
    return EXIT_OK if ok else EXIT_FAIL


def _parse_orders(text: str) -> tuple[int, int, int, int]:
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--orders expects four integers, got {text!r}") from None
    if len(parts) != 4 or min(parts) < 1:
        raise UsageError("--orders expects DESC_NZ,MASTER_NZ,MASTER_NW,W1_NZ, all positive")
    return parts


def cmd_verify(args) -> int:
    if args.max_n < 2:
        raise UsageError("--max-n must be at least 2")
    d_nz, m_nz, m_nw, w1 = _parse_orders(args.orders)
    if d_nz > args.bivariate_limit:
        raise UsageError(f"descendants order {d_nz} exceeds --bivariate-limit {args.bivariate_limit}")
    if max(args.max_n, args.stats_max_n) > args.word_limit:
        raise UsageError(f"enumeration range exceeds --word-limit {args.word_limit}")
    cfg = SuiteConfig(
        max_n=args.max_n,
        stats_max_n=args.stats_max_n,
        descendants_order=d_nz,
        master_nz=m_nz,
        master_nw=m_nw,
        w1_order=w1,
        asymptotics=not args.no_asymptotics,
    )
    results = []
    for r in run_suite(cfg):
        results.append(r)
        if not (args.json or args.csv):
            sys.stdout.write(r.line() + "\n")
            sys.stdout.flush()
    failed = sum(not r.passed for r in results)
    if args.json:
        sys.stdout.write(json.dumps([r.__dict__ for r in results], indent=2) + "\n")
    elif args.csv:
        sys.stdout.write("module,operation,passed,detail\n")
        for r in results:
            detail = r.detail.replace('"', "'")
            sys.stdout.write(f'{r.module},{r.operation},{r.passed},"{detail}"\n')
    else:
        sys.stdout.write(f"{len(results) - failed} passed, {failed} failed\n")
    return EXIT_OK if failed == 0 else EXIT_FAIL


def _fmt_decimal(x: Decimal, places: int) -> str:
    # truncated, not rounded: (5 - sqrt5)/10 prints as 0.2763932022
    return str(x.quantize(Decimal(1).scaleb(-places), rounding=ROUND_DOWN))


def cmd_table(args) -> int:
    rows = asymptotics_report(args.n, budget=args.series_budget)
    records = []
    for r in rows:
        conv = Decimal(r.convergent.numerator) / Decimal(r.convergent.denominator)
        records.append(
            {
                "statistic": r.statistic,
                "n": args.n,
                "convergent": _fmt_decimal(conv, 12),
                "constant": _fmt_decimal(r.constant, 10),
                "deviation": f"{r.deviation:.3e}",
            }
        )
    if args.n <= args.series_budget:
        records.append(
            {
                "statistic": "count_ratio",
                "n": args.n,
                "convergent": "",
                "constant": _fmt_decimal(Decimal(1), 10),
                "deviation": f"{count_ratio_deviation(args.n):.3e}",
            }
        )
    header = ["statistic", "n", "convergent", "constant", "deviation"]
    width = max(len(r["statistic"]) for r in records)
    plain = [f"{'statistic':<{width}}  {'convergent':>18}  {'constant':>14}  deviation"]
    plain += [
        f"{r['statistic']:<{width}}  {r['convergent']:>18}  {r['constant']:>14}  {r['deviation']}" for r in records
    ]
    _emit(args, records, header, plain)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true", help="comma-separated output")
    fmt.add_argument("--json", action="store_true", help="JSON output")
    common.add_argument("--word-limit", type=int, default=DEFAULT_LIMITS.words, help="max Elena size to enumerate")
    common.add_argument("--dyck-limit", type=int, default=DEFAULT_LIMITS.dyck, help="max Dyck semilength to enumerate")
    common.add_argument("--bivariate-limit", type=int, default=DEFAULT_LIMITS.bivariate, help="max z-order for psi distribution")
    common.add_argument("--series-budget", type=int, default=DEFAULT_LIMITS.series, help="max n for averages")

    p = argparse.ArgumentParser(prog="elenas", description="Nondecreasing Dyck paths and Elena trees.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("count", parents=[common], help="count Elenas and nondecreasing Dyck paths")
    s.add_argument("--max-n", type=int, required=True)
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("enumerate", parents=[common], help="list every Elena of a size")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--format", choices=sorted(_RENDER), default="word")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("stats", parents=[common], help="brute-force statistic totals")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--compare", action="store_true", help="compare with series coefficients")
    s.set_defaults(func=cmd_stats)

    s = sub.add_parser("verify", parents=[common], help="run the full cross-check suite")
    s.add_argument("--max-n", type=int, default=12, help="largest tree size for exhaustive set checks")
    s.add_argument("--stats-max-n", type=int, default=14, help="largest Elena size for statistics checks")
    s.add_argument("--orders", default="8,30,10,50", help="DESC_NZ,MASTER_NZ,MASTER_NW,W1_NZ")
    s.add_argument("--no-asymptotics", action="store_true", help="skip the limiting-constant checks")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("table", parents=[common], help="averages against their limiting constants")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_table)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        sys.stderr.write(f"elenas {args.command}: error: {exc}\n")
        return EXIT_USAGE

if __name__ == "__main__":
    sys.exit(main())
