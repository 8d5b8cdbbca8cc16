"""Command-line entry point.

    mergecomps table --min 1 --max 64 [--step 1]
    mergecomps gen-worst 500
    mergecomps verify --max 4096 [--brute 8]
    mergecomps tree 11
    mergecomps count [--alg mergesort|bininsert] [--split floor|ceil] [FILE]

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import re
import sys
import time
from typing import IO, List, Optional, Sequence

from . import analytics as an
from . import checks, rectree
from .adversary import BRUTE_FORCE_CAP, un_sort
from .sorters import SPLITS, binary_insertion_sort, merge_sort

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

TABLE_HEADER = "n,W,B,lower,upper,epsilon,depth"


class UsageError(Exception):
    pass


def fmt_real(x: float) -> str:
    """12 significant digits, always with a decimal point or exponent."""
    s = format(x, ".12g")
    if not any(c in s for c in ".en"):
        s += ".0"
    return s


def table_lines(n_min: int, n_max: int, step: int = 1) -> List[str]:
    if n_min < 1 or n_max < n_min or step < 1:
        raise UsageError(f"need 1 <= min <= max and step >= 1 (got min={n_min}, max={n_max}, step={step})")
    lines = [TABLE_HEADER]
    for n in range(n_min, n_max + 1, step):
        row = an.analytics_row(n)
        lines.append(",".join([
            str(row.n), str(row.w), str(row.b),
            fmt_real(row.lower), fmt_real(row.upper), fmt_real(row.epsilon),
            str(row.depth),
        ]))
    return lines


def parse_keys(text: str) -> List[int]:
    """Integers separated by commas and/or whitespace; a trailing period is tolerated."""
    tokens = [tok for tok in re.split(r"[,\s]+", text.strip().rstrip(".")) if tok]
    keys = []
    for tok in tokens:
        try:
            keys.append(int(tok))
        except ValueError:
            raise UsageError(f"not an integer: {tok!r}") from None
    if not keys:
        raise UsageError("no integers in input")
    return keys


def cmd_table(args: argparse.Namespace, out: IO[str]) -> int:
    for line in table_lines(args.min, args.max, args.step):
        out.write(line + "\n")
    return EXIT_OK


def cmd_gen_worst(args: argparse.Namespace, out: IO[str]) -> int:
    n = args.n
    if n < 1:
        raise UsageError(f"n must be >= 1, got {n}")
    perm = un_sort(range(1, n + 1), args.split)
    comps = merge_sort(perm, args.split).comps
    w = an.w_closed(n)
    out.write(", ".join(map(str, perm)) + "\n")
    out.write(f"comps={comps},W={w}\n")
    return EXIT_OK if comps == w else EXIT_FAIL


def cmd_verify(args: argparse.Namespace, out: IO[str]) -> int:
    if args.max < 1:
        raise UsageError(f"--max must be >= 1, got {args.max}")
    if not 1 <= args.brute <= BRUTE_FORCE_CAP:
        raise UsageError(f"--brute must be in 1..{BRUTE_FORCE_CAP}, got {args.brute}")
    status = EXIT_OK
    for name, run in checks.suites(args.max, args.brute):
        start = time.perf_counter()
        failure = run()
        elapsed = time.perf_counter() - start
        if failure is None:
            out.write(f"PASS {name} ({elapsed:.2f}s)\n")
        else:
            out.write(f"FAIL {name}: {failure}\n")
            status = EXIT_FAIL
    out.write("all suites passed\n" if status == EXIT_OK else "verification FAILED\n")
    return status


def cmd_tree(args: argparse.Namespace, out: IO[str]) -> int:
    if args.n < 1:
        raise UsageError(f"n must be >= 1, got {args.n}")
    for line in rectree.dump_lines(rectree.build(args.n)):
        out.write(line + "\n")
    return EXIT_OK


def cmd_count(args: argparse.Namespace, out: IO[str]) -> int:
    if args.file is None or args.file == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.file) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
    keys = parse_keys(text)
    if args.alg == "mergesort":
        outcome = merge_sort(keys, args.split)
    else:
        outcome = binary_insertion_sort(keys)
    n = len(keys)
    out.write(f"n={n},comps={outcome.comps},W={an.w_closed(n)},B={an.best_case(n)}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mergecomps", description="Comparison counts for MergeSort.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="CSV of W, B, bounds and epsilon per n")
    p.add_argument("--min", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--step", type=int, default=1)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("gen-worst", help="print a worst-case permutation of 1..N")
    p.add_argument("n", type=int)
    p.add_argument("--split", choices=SPLITS, default="floor",
                   help="left block gets floor(n/2) (default) or ceil(n/2) keys")
    p.set_defaults(func=cmd_gen_worst)

    p = sub.add_parser("verify", help="run every invariant suite")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--brute", type=int, default=6, help=f"brute-force oracle size, at most {BRUTE_FORCE_CAP}")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tree", help="dump the recursion tree for N keys")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("count", help="count comparisons on integers read from FILE or stdin")
    p.add_argument("file", nargs="?")
    p.add_argument("--alg", choices=("mergesort", "bininsert"), default="mergesort")
    p.add_argument("--split", choices=SPLITS, default="floor")
    p.set_defaults(func=cmd_count)
    return parser


def main(argv: Optional[Sequence[str]] = None, out: Optional[IO[str]] = None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"mergecomps {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
