"""Command-line interface: ``vertmul {multiply,trace,table,verify,bench}``.

Exit status is 0 on success, 1 when ``verify`` finds a wrong product and 2
for usage errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence, TextIO

from . import bench
from .algorithms import Algorithm, multiply
from .corpus import EXAMPLES, worked_example
from .digits import DigitSeq, parse_signed, segment, to_text
from .errors import VertmulError
from .plum import plum_table, table_diff, theorem_disagreements
from .trace import (
    render_trace,
    trace_binary,
    trace_plum,
    trace_recursive,
    trace_schoolbook,
    trace_vertical,
)
from .vertical import DEFAULT_THRESHOLD

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
_PREFIXES = {"0b": 2, "0o": 8, "0x": 16}


class UsageError(Exception):
    pass


def _read_operands(raw: Sequence[str], stdin: TextIO) -> list[str]:
    tokens: list[str] | None = None
    out = []
    for text in raw:
        if text == "-":
            if tokens is None:
                tokens = stdin.read().split()
            if not tokens:
                raise UsageError("stdin ran out of operands")
            text = tokens.pop(0)
        out.append(text)
    return out


def parse_operand(text: str, radix: int, radix_given: bool) -> tuple[int, DigitSeq]:
    """Signed operand; ``0b``/``0o``/``0x`` prefixes pick the radix."""
    body = text.strip()
    sign = ""
    if body[:1] in "+-":
        sign, body = body[0], body[1:]
    prefix = body[:2].lower()
    if prefix in _PREFIXES:
        implied = _PREFIXES[prefix]
        if radix_given and radix != implied:
            raise UsageError(f"{text!r} is radix {implied} but --radix {radix} was given")
        radix, body = implied, body[2:]
    return parse_signed(sign + body, radix)


def _signed_text(sign: int, x: DigitSeq) -> str:
    return ("-" if sign < 0 else "") + to_text(x)


def _check_combination(algo: Algorithm, radix: int, s: int) -> None:
    if algo is Algorithm.BINARY and (radix != 2 or s != 1):
        raise UsageError("--algo binary needs --radix 2 and --segment 1")
    if algo is Algorithm.PLUM and (radix != 10 or s != 1):
        raise UsageError("--algo plum needs --radix 10 and --segment 1")
    if s < 1:
        raise UsageError("--segment must be at least 1")


def _operand_pair(args: argparse.Namespace, stdin: TextIO) -> tuple[tuple[int, DigitSeq], tuple[int, DigitSeq]]:
    texts = _read_operands(args.operands, stdin)
    if len(texts) != 2:
        raise UsageError("expected exactly two operands")
    given = args.radix is not None
    radix = args.radix if given else 10
    (sa, a), (sb, b) = (parse_operand(t, radix, given) for t in texts)
    if a.radix != b.radix:
        raise UsageError(f"operands have different radices ({a.radix} and {b.radix})")
    return (sa, a), (sb, b)


def cmd_multiply(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> int:
    (sa, a), (sb, b) = _operand_pair(args, stdin)
    algo = Algorithm(args.algo)
    _check_combination(algo, a.radix, args.segment)
    if args.segment > 1:
        product = multiply(algo, segment(a, args.segment), segment(b, args.segment), args.k, args.threshold)
    else:
        product = multiply(algo, a, b, args.k, args.threshold)
    sign = -1 if sa * sb < 0 and product.digits != (0,) else 1
    text = _signed_text(sign, product)
    if args.format == "json":
        obj = {
            "algorithm": algo.value,
            "radix": a.radix,
            "operands": [_signed_text(sa, a), _signed_text(sb, b)],
            "product": text,
        }
        out.write(json.dumps(obj) + "\n")
    else:
        out.write(text + "\n")
    return EXIT_OK


def cmd_trace(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> int:
    fmt = args.format if args.format != "csv" else "text"
    if args.example is not None:
        if args.example not in EXAMPLES:
            raise UsageError(f"unknown example {args.example!r}; known: {', '.join(EXAMPLES)}")
        out.write(render_trace(worked_example(args.example), fmt))
        return EXIT_OK
    (sa, a), (sb, b) = _operand_pair(args, stdin)
    if sa < 0 or sb < 0:
        raise UsageError("traces take non-negative operands")
    algo = Algorithm(args.algo)
    _check_combination(algo, a.radix, args.segment)
    if algo is Algorithm.VERTICAL:
        t = trace_vertical(a, b, args.segment, rewrite=args.rewrite)
    elif algo is Algorithm.SCHOOLBOOK:
        t = trace_schoolbook(a, b, args.segment)
    elif algo is Algorithm.PLUM:
        t = trace_plum(a, b)
    elif algo is Algorithm.BINARY:
        t = trace_binary(a, b)
    else:
        t = trace_recursive(a, b, args.k, args.threshold)
    out.write(render_trace(t, fmt))
    return EXIT_OK


def _plum_grid(field: str) -> list[list[int]]:
    table = plum_table()
    return [[getattr(table[a, b], field) for b in range(1, 10)] for a in range(1, 10)]


def cmd_table(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> int:
    if args.name != "plum":
        raise UsageError(f"unknown table {args.name!r}; only 'plum' is available")
    plums, carries = _plum_grid("plum"), _plum_grid("carry_j")
    diff, disagree = table_diff(), theorem_disagreements()
    if args.format == "json":
        obj = {
            "plum": plums,
            "carry": carries,
            "printed_diff": [dict(zip(("a", "b", "printed", "computed"), d)) for d in diff],
            "theorem_disagreements": [dict(zip(("a", "b", "rule", "exact"), d)) for d in disagree],
        }
        out.write(json.dumps(obj, indent=2) + "\n")
        return EXIT_OK
    if args.format == "csv":
        out.write("a,b,plum,carry\n")
        for a in range(1, 10):
            for b in range(1, 10):
                out.write(f"{a},{b},{plums[a - 1][b - 1]},{carries[a - 1][b - 1]}\n")
        return EXIT_OK
    md = args.format == "markdown"
    for title, grid in (("plum products a ♣ b", plums), ("carries J", carries)):
        out.write(f"{title}\n")
        if md:
            out.write("| a\\b | " + " | ".join(str(b) for b in range(1, 10)) + " |\n")
            out.write("|---" * 10 + "|\n")
            for a, row in enumerate(grid, 1):
                out.write(f"| {a} | " + " | ".join(str(v) for v in row) + " |\n")
        else:
            out.write("a\\b" + "".join(f"{b:>4}" for b in range(1, 10)) + "\n")
            for a, row in enumerate(grid, 1):
                out.write(f"{a:>3}" + "".join(f"{v:>4}" for v in row) + "\n")
        out.write("\n")
    out.write(f"printed table: {len(diff)} cells differ from the definition\n")
    for a, b, printed, computed in diff:
        out.write(f"  ({a},{b}): printed {printed}, computed {computed}\n")
    out.write(f"carry rule: {len(disagree)} of 45 pairs disagree with a*b\n")
    for a, b, rule, exact in disagree:
        out.write(f"  ({a},{b}): rule {rule}, exact {exact}\n")
    return EXIT_OK


def _verify_variants(radix: int) -> list[tuple[str, Algorithm, int, int]]:
    variants = [("schoolbook", Algorithm.SCHOOLBOOK, 2, 1), ("vertical", Algorithm.VERTICAL, 2, 1)]
    for k in (2, 3, 4):
        for threshold in (1, DEFAULT_THRESHOLD):
            variants.append((f"recursive k={k} t={threshold}", Algorithm.RECURSIVE, k, threshold))
    if radix == 2:
        variants.append(("binary", Algorithm.BINARY, 2, 1))
    if radix == 10:
        variants.append(("plum", Algorithm.PLUM, 2, 1))
    return variants


def cmd_verify(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> int:
    if args.cases < 0 or args.max_digits < 1:
        raise UsageError("--cases must be >= 0 and --max-digits >= 1")
    rng = random.Random(args.seed)
    radices = [args.radix] if args.radix is not None else [2, 10]
    tally: dict[str, list[int]] = {}
    failures = []
    for case in range(args.cases):
        radix = rng.choice(radices)
        a = bench.random_operand(rng.randint(1, args.max_digits), radix, rng)
        b = bench.random_operand(rng.randint(1, args.max_digits), radix, rng)
        expected = a.value * b.value
        for name, algo, k, threshold in _verify_variants(radix):
            ok = multiply(algo, a, b, k, threshold).value == expected
            tally.setdefault(name, [0, 0])[0 if ok else 1] += 1
            if not ok:
                failures.append(f"case {case}: {name} radix {radix} {to_text(a)} x {to_text(b)}")
    out.write(f"{args.cases} cases (seed {args.seed}, max digits {args.max_digits})\n")
    for name in sorted(tally):
        passed, failed = tally[name]
        out.write(f"{name}: {passed} passed, {failed} failed\n")
    for line in failures:
        out.write(f"FAIL {line}\n")
    return EXIT_FAIL if failures else EXIT_OK


def parse_grid(text: str) -> list[int]:
    """``64,128,256`` or a geometric range ``2^6..2^12``."""
    if ".." in text:
        lo, hi = text.split("..")
        base_lo, exp_lo = lo.split("^")
        base_hi, exp_hi = hi.split("^")
        if base_lo != base_hi:
            raise UsageError("grid range endpoints must share a base")
        base = int(base_lo)
        return [base**e for e in range(int(exp_lo), int(exp_hi) + 1)]
    return [int(v) for v in text.split(",") if v.strip()]


def cmd_bench(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> int:
    try:
        sizes = parse_grid(args.grid)
    except ValueError as exc:
        raise UsageError(f"bad --grid {args.grid!r}: {exc}") from None
    if not sizes or min(sizes) < 1:
        raise UsageError("--grid needs positive sizes")
    algo = Algorithm(args.algo)
    radix = args.radix if args.radix is not None else 2
    _check_combination(algo, 10 if algo is Algorithm.PLUM else 2 if algo is Algorithm.BINARY else radix, 1)
    records = bench.run_grid(algo, sizes, args.k, args.threshold, radix, args.trials, args.seed)
    fmt = "json" if args.format == "json" else "csv"
    out.write(bench.dumps(records, fmt))
    if args.fit:
        sys.stderr.write(f"exponent: {bench.fit_exponent(records):.4f}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--radix", type=int, default=None, help="operand radix (default 10)")
    common.add_argument("--segment", type=int, default=1, help="digits per block")
    common.add_argument("--algo", choices=[a.value for a in Algorithm], default=Algorithm.VERTICAL.value)
    common.add_argument("-k", type=int, default=2, help="split arity for --algo recursive")
    common.add_argument("--threshold", type=int, default=DEFAULT_THRESHOLD)
    common.add_argument("--format", choices=["text", "markdown", "json", "csv"], default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--output", "-o", default=None, help="write here instead of stdout")

    parser = argparse.ArgumentParser(prog="vertmul", description="Vertical and plum-blossom multiplication.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("multiply", parents=[common], help="print a product")
    p.add_argument("operands", nargs="+", help="two operands; '-' reads from stdin")
    p.set_defaults(func=cmd_multiply)

    p = sub.add_parser("trace", parents=[common], help="print a step trace")
    p.add_argument("operands", nargs="*")
    p.add_argument("--rewrite", action="store_true", help="rewrite radix-1 digits as -1 first")
    p.add_argument("--example", default=None, help="one of: " + ", ".join(EXAMPLES))
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("table", parents=[common], help="print a digit table")
    p.add_argument("name", help="table name (plum)")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common], help="cross-check all algorithms")
    p.add_argument("--cases", type=int, default=100)
    p.add_argument("--max-digits", type=int, default=32)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", parents=[common], help="count operations and time runs")
    p.add_argument("--grid", required=True, help="sizes, e.g. 64,128,256 or 2^6..2^12")
    p.add_argument("--trials", type=int, default=bench.DEFAULT_TRIALS)
    p.add_argument("--fit", action="store_true", help="report the fitted exponent on stderr")
    p.set_defaults(func=cmd_bench)
    return parser


def run(argv: Sequence[str] | None = None, stdout: TextIO | None = None, stdin: TextIO | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    try:
        if args.output:
            with open(args.output, "w", encoding="utf-8", newline="") as fh:
                return args.func(args, fh, stdin)
        return args.func(args, stdout, stdin)
    except (UsageError, VertmulError, ValueError) as exc:
        sys.stderr.write(f"vertmul: error: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        sys.stderr.write(f"vertmul: error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")
    sys.exit(run())
