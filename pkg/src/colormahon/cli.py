"""Command line interface.

    colormahon stats --c 4 --n 5 "2[3] 1[1] 3 4[2] 5"
    colormahon table --c 4 --n 2
    colormahon verify --identity signed-even --c 4 --n 2
    colormahon verify --all --c-max 4 --n-max 4 --format json --output reports.jsonl
    colormahon conjecture --c-max 7 --n-max 2
    colormahon derangements --c 4 --n 2 --q1

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .core import (DEFAULT_BUDGET, BudgetExceeded, GroupParams, WordError,
                   enumerate_group, group_size, parse_word)
from .derangements import (DerangementPolynomials, d_counts_split,
                           signed_closed_matches)
from .identities import (BY_ID, IDENTITIES, ParityError, SuiteConfig,
                         all_passed, run_identity, run_suite)
from .qpoly import IntPolynomial, format_poly
from .stats import StatRow

BUDGET_ENV = "COLORMAHON_BUDGET"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{BUDGET_ENV} must be an integer, got {raw!r}")


def _write_table(out, header, rows, fmt):
    rows = [[str(x) for x in r] for r in rows]
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    elif fmt == "json":
        for r in rows:
            out.write(json.dumps(dict(zip(header, r))) + "\n")
    else:
        out.write("| " + " | ".join(header) + " |\n")
        out.write("|" + "|".join("---" for _ in header) + "|\n")
        for r in rows:
            out.write("| " + " | ".join(r) + " |\n")


# --- commands ---------------------------------------------------------------

def cmd_stats(args, out) -> int:
    pi = parse_word(args.word, GroupParams(args.c, args.n))
    row = StatRow.of(pi)
    if args.format == "json":
        out.write(json.dumps(row.as_dict()) + "\n")
    else:
        _write_table(out, StatRow.CSV_HEADER, [row.csv_fields()], args.format)
    return EXIT_OK


def cmd_table(args, out) -> int:
    params = GroupParams(args.c, args.n)
    header = list(StatRow.CSV_HEADER if args.verbose else StatRow.CSV_HEADER[:4])
    rows = []
    for pi in enumerate_group(params, budget=args.budget):
        fields = StatRow.of(pi).csv_fields()
        rows.append(fields if args.verbose else fields[:4])
    _write_table(out, header, rows, args.format)
    return EXIT_OK


def _range(single, lo, hi, default_hi):
    if single is not None:
        return (single,)
    return tuple(range(lo, (default_hi if hi is None else hi) + 1))


def cmd_verify(args, out) -> int:
    if args.all:
        ids = None
    elif args.identity:
        ids = tuple(args.identity)
        for i in ids:
            if i not in BY_ID:
                raise UsageError(f"unknown identity {i!r}; choose from {', '.join(BY_ID)}")
        if args.c is not None:
            for i in ids:
                if not BY_ID[i].applies(args.c):
                    raise UsageError(f"parity mismatch: {i} needs {BY_ID[i].parity} c, "
                                     f"got c={args.c}")
    else:
        raise UsageError("give --all or at least one --identity")
    config = SuiteConfig(c_range=_range(args.c, args.c_min, args.c_max, 4),
                         n_range=_range(args.n, args.n_min, args.n_max, 4),
                         budget=args.budget, identities=ids, jobs=args.jobs)
    reports = run_suite(config)
    _emit_reports(reports, args, out)
    failed = sum(r.hard_failure for r in reports)
    print(f"{len(reports)} reports, {failed} failed", file=sys.stderr)
    return EXIT_OK if all_passed(reports) else EXIT_FAIL


def _short(x) -> str:
    if isinstance(x, IntPolynomial):
        return format_poly(x)
    return f"<{len(x)} terms>"


def _emit_reports(reports, args, out):
    if args.format == "json":
        for r in reports:
            out.write(json.dumps(r.to_json(timing=args.timing)) + "\n")
        return
    header = ["identity", "c", "n", "status", "lhs"]
    rows = []
    for r in reports:
        status = "pass" if r.passed else ("fail" if r.claimed else "finding")
        if r.degenerate:
            status += " (degenerate)"
        rows.append([r.identity_id, r.c, r.n, status, _short(r.lhs)])
    _write_table(out, header, rows, args.format)


def cmd_conjecture(args, out) -> int:
    reports = []
    skipped = []
    for c in range(1, args.c_max + 1):
        for n in range(args.n_min, args.n_max + 1):
            if group_size(c, n) > args.budget:
                skipped.append((c, n))
                continue
            reports.append(run_identity("conjecture", c, n, args.budget))
    if args.format == "json":
        for r in reports:
            out.write(json.dumps(r.to_json(timing=args.timing)) + "\n")
    else:
        rows = []
        for r in reports:
            w = r.extra.get("witness")
            witness = f"t^{w['t']} q^{w['q']}: {w['coeff']} vs {w['transposed_coeff']}" if w else ""
            status = "pass" if r.passed else ("fail" if r.claimed else "finding")
            rows.append([r.c, r.n, r.group_size, status, witness])
        _write_table(out, ["c", "n", "size", "status", "witness"], rows, args.format)
    for c, n in skipped:
        print(f"skipped c={c} n={n}: group exceeds budget {args.budget}", file=sys.stderr)
    return EXIT_OK if all_passed(reports) else EXIT_FAIL


def cmd_derangements(args, out) -> int:
    c, n = args.c, args.n
    dp = DerangementPolynomials.compute(c, n, args.budget)
    total, even, odd = dp.counts
    lines: list[tuple[str, str]] = []
    closed_ok = True
    if args.q1:
        lines.append(("total", str(total)))
        lines.append(("even", str(even)))
        lines.append(("odd", str(odd)))
        lines.append(("difference", f"{even - odd:+d}"))
        if c % 2 == 0:
            f_even, f_odd, diff = d_counts_split(c, n)
            closed_ok = (f_even, f_odd) == (even, odd)
            lines.append(("formula", f"even={f_even} odd={f_odd} difference={diff:+d} "
                                     f"({'match' if closed_ok else 'MISMATCH'})"))
        else:
            lines.append(("note", "no closed form for odd c (open question)"))
    else:
        lines.append(("plain", format_poly(dp.plain)))
        if c % 2 == 0:
            closed_ok = signed_closed_matches(c, n, dp.signed)
            lines.append(("signed", format_poly(dp.signed)))
            lines.append(("signed_closed_form", "match" if closed_ok else "MISMATCH"))
            lines.append(("even_part", format_poly(dp.even_part)))
        elif args.signed:
            lines.append(("signed", format_poly(dp.signed)))
            lines.append(("note", "no closed form for odd c (open question)"))
        lines.append(("counts", f"total={total} even={even} odd={odd}"))
    if args.format == "json":
        out.write(json.dumps(dp.to_json()) + "\n")
    else:
        _write_table(out, ["quantity", "value"], lines, args.format)
    return EXIT_OK if closed_ok else EXIT_FAIL


# --- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="colormahon",
        description="Statistics and signed Mahonian identities on colored permutation groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("csv", "json", "md"), default="csv")
        p.add_argument("--budget", type=int, default=None,
                       help=f"max group elements to enumerate (default {DEFAULT_BUDGET}, "
                            f"or ${BUDGET_ENV})")
        p.add_argument("--jobs", type=int, default=1, help="worker processes")
        p.add_argument("--output", help="write to this file instead of stdout")
        p.add_argument("--timing", action="store_true", help="include elapsed times in JSON")

    p = sub.add_parser("stats", help="statistics of one colored permutation")
    p.add_argument("word")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    common(p)

    p = sub.add_parser("table", help="statistics of every element of G_{c,n}")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--verbose", action="store_true", help="add maj, col and des columns")
    common(p)

    p = sub.add_parser("verify", help="check identities against enumeration")
    p.add_argument("--identity", action="append", metavar="ID",
                   help=f"one of: {', '.join(s.identity_id for s in IDENTITIES)}")
    p.add_argument("--all", action="store_true")
    p.add_argument("--c", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--c-min", type=int, default=1)
    p.add_argument("--c-max", type=int)
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int)
    common(p)

    p = sub.add_parser("conjecture", help="search for asymmetric (inv~, fmaj) distributions")
    p.add_argument("--c-max", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--n-min", type=int, default=1)
    common(p)

    p = sub.add_parser("derangements", help="derangement polynomials and counts")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q1", action="store_true", help="print values at q=1")
    p.add_argument("--signed", action="store_true", help="also print the signed polynomial")
    common(p)
    return parser


COMMANDS = {"stats": cmd_stats, "table": cmd_table, "verify": cmd_verify,
            "conjecture": cmd_conjecture, "derangements": cmd_derangements}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    buf = io.StringIO()
    try:
        if args.budget is None:
            args.budget = _default_budget()
        if args.jobs < 1:
            raise UsageError("--jobs must be >= 1")
        code = COMMANDS[args.command](args, buf)
    except (UsageError, WordError, ParityError, BudgetExceeded, ValueError) as exc:
        print(f"colormahon {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = buf.getvalue()
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        _stdout_write(text)
    return code


def _stdout_write(text: str) -> None:
    # polynomials contain U+2212, so bypass the locale encoding
    buffer = getattr(sys.stdout, "buffer", None)
    if buffer is None:
        sys.stdout.write(text)
    else:
        sys.stdout.flush()
        buffer.write(text.encode("utf-8"))
        buffer.flush()


def run() -> None:
    """Console-script entry point."""
    sys.exit(main())


if __name__ == "__main__":
    run()
