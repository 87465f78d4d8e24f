"""Command line front end.

    srdpoly poly --n 5 --format csv
    srdpoly table --n-max 9
    srdpoly seq --name f --n-max 10 --format bfile
    srdpoly verify --suite all --n-max-oracle 7
    srdpoly enumerate --n 3 --class tilde

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
Big integers are written as decimal strings inside JSON.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Iterable, Sequence

from . import lift, recur, series, stats, unimodal
from .core import Mode, SignedSeq
from .enumeration import SeqClass, iter_codes

FORMATS = ("table", "csv", "json-lines", "bfile")
SEQUENCES: dict[str, Callable[[int], int]] = {
    "D": recur.count_D,
    "Q": recur.count_Q,
    "QB": recur.count_QB,
    "DB": recur.count_DB,
    "f": recur.count_f,
}
SUITES = ("identities", "lemmas", "injections", "series", "stats", "all")
TABLE_GUARD = 200
ENUM_GUARD = 7


def _bfile(values: Iterable[int]) -> list[str]:
    return [f"{i} {v}" for i, v in enumerate(values, 1)]


def cmd_poly(args) -> list[str]:
    p = recur.poly_Q_B(args.n)
    coeffs = p.coeffs
    if args.format == "table":
        return [str(p)]
    if args.format == "csv":
        return [",".join(map(str, coeffs)) if coeffs else "0"]
    if args.format == "json-lines":
        return [json.dumps({"n": args.n, "coeffs": [str(c) for c in coeffs]})]
    return _bfile(coeffs)


def cmd_table(args) -> list[str]:
    rows = recur.q_table(args.n_max).rows
    if args.format == "table":
        return [" ".join(map(str, r)) for r in rows]
    if args.format == "csv":
        return [",".join(map(str, r)) for r in rows]
    if args.format == "json-lines":
        return [json.dumps({"n": n, "row": [str(c) for c in r]}) for n, r in enumerate(rows)]
    return _bfile(c for r in rows for c in r)


def cmd_seq(args) -> list[str]:
    fn = SEQUENCES[args.name]
    values = [fn(n) for n in range(1, args.n_max + 1)]
    if args.format == "table":
        return [" ".join(map(str, values))]
    if args.format == "csv":
        return [",".join(map(str, values))]
    if args.format == "json-lines":
        return [json.dumps({"name": args.name, "n": n, "value": str(v)})
                for n, v in enumerate(values, 1)]
    return _bfile(values)


def run_suite(suite: str, n_max_oracle: int, n_max_rec: int,
              n_series: int = 20) -> list[recur.IdentityReport]:
    reports: list[recur.IdentityReport] = []
    if suite in ("identities", "all"):
        reports += recur.verify_identities(n_max_rec, n_max_oracle)
    if suite in ("lemmas", "all"):
        reports += lift.verify_lemmas(n_max_oracle)
    if suite in ("injections", "all"):
        reports += unimodal.verify_unimodality(n_max_rec)
        reports += unimodal.verify_injections(n_max_oracle)
    if suite in ("series", "all"):
        reports += series.verify_series(n_series)
    if suite in ("stats", "all"):
        reports += stats.verify_stats(n_max_rec)
    return reports


def cmd_verify(args) -> tuple[list[str], int]:
    reports = run_suite(args.suite, args.n_max_oracle, args.n_max_rec, args.n_series)
    if args.format == "json-lines":
        lines = [json.dumps({"identity": r.identity, "n_range": list(r.n_range),
                             "passed": r.passed, "counterexample": r.counterexample})
                 for r in reports]
    else:
        lines = [r.line() for r in reports]
    failed = sum(not r.passed for r in reports)
    if args.format != "json-lines":
        lines.append(f"{len(reports) - failed}/{len(reports)} checks passed")
    return lines, 1 if failed else 0


def _render_seq(s: SignedSeq, fmt: str, idx: int) -> list[str]:
    if fmt == "table":
        return [str(s)]
    if fmt == "csv":
        return [f"{idx},{pos},{e.value},{str(e.barred).lower()}"
                for pos, e in enumerate(s.entries, 1)]
    return [json.dumps({"index": idx,
                        "entries": [{"value": e.value, "barred": e.barred} for e in s.entries]})]


def cmd_enumerate(args, parser) -> list[str]:
    try:
        cls = SeqClass.lookup(args.cls)
    except ValueError:
        parser.error(f"unknown class {args.cls!r}")
    if args.n > ENUM_GUARD:
        parser.error(f"listing is limited to n <= {ENUM_GUARD}; use brute counts for larger n")
    if args.format == "bfile":
        parser.error("enumerate does not support --format bfile")
    lines = ["seq,pos,value,barred"] if args.format == "csv" else []
    for idx, codes in enumerate(iter_codes(args.n, cls.mode, cls), 1):
        lines += _render_seq(SignedSeq.from_codes(codes, cls.mode), args.format, idx)
    return lines


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="srdpoly",
        description="Polynomials of signed relative derangements by number of bars.")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=FORMATS, default="table")

    p = sub.add_parser("poly", help="coefficients of Q_n(t), lowest degree first")
    p.add_argument("--n", type=_nonneg, required=True)
    fmt(p)

    p = sub.add_parser("table", help="triangle of q(n, m) for n = 0..n_max")
    p.add_argument("--n-max", type=_nonneg, required=True)
    fmt(p)

    p = sub.add_parser("seq", help="counting sequences for n = 1..n_max")
    p.add_argument("--name", choices=sorted(SEQUENCES), required=True)
    p.add_argument("--n-max", type=_nonneg, required=True)
    fmt(p)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--n-max-oracle", type=_nonneg, default=6)
    p.add_argument("--n-max-rec", type=_nonneg, default=30)
    p.add_argument("--n-series", type=_nonneg, default=20)
    p.add_argument("--format", choices=("table", "json-lines"), default="table")

    p = sub.add_parser("enumerate", help="list the members of a sequence class")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--class", dest="cls", required=True,
                   help="one of: " + ", ".join(c.value for c in SeqClass) + ", tilde")
    fmt(p)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    status = 0
    if args.command == "poly":
        lines = cmd_poly(args)
    elif args.command in ("table", "seq"):
        if args.n_max > TABLE_GUARD:
            parser.error(f"--n-max is limited to {TABLE_GUARD}")
        lines = cmd_table(args) if args.command == "table" else cmd_seq(args)
    elif args.command == "verify":
        if args.n_max_oracle > 8:
            parser.error("--n-max-oracle is limited to 8")
        if args.n_series < 1:
            parser.error("--n-series must be at least 1")
        lines, status = cmd_verify(args)
    else:
        lines = cmd_enumerate(args, parser)
    out = sys.stdout
    for line in lines:
        out.write(line + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
