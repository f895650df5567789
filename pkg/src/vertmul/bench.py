"""Operation counts, the analytic step model, exponent fits and exports.

Two step counts are kept apart.  :func:`model_steps` evaluates the textbook
recursion ``T(n) = k(k+1)/2 * T(n/k) + k*n/2 + 2*n`` with ``T(1) = 1``
exactly, while :func:`count_ops` tallies what an instrumented run really
does, carries and padding included.  The two share growth exponents, not
constants.
"""

from __future__ import annotations

import csv
import io
import json
import math
import random
import statistics
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Iterable, Sequence, TextIO

from .algorithms import Algorithm, multiply
from .digits import DigitSeq, Operand
from .errors import InsufficientData
from .opcount import OpCount
from .vertical import DEFAULT_THRESHOLD

__all__ = [
    "Algorithm",
    "BenchRecord",
    "CSV_COLUMNS",
    "OpCount",
    "count_ops",
    "dumps",
    "export",
    "fit_exponent",
    "implementation_steps",
    "model_steps",
    "random_operand",
    "recursion_residual",
    "run_grid",
]

CSV_COLUMNS = ("algorithm", "n", "k", "threshold", "digit_mults", "digit_adds", "wall_ns", "trials")
DEFAULT_TRIALS = 9


@dataclass
class BenchRecord:
    algorithm: Algorithm
    n: int
    k: int
    threshold: int
    counts: OpCount = field(default_factory=OpCount)
    wall_ns: int = 0
    trials: int = 0

    def row(self) -> dict[str, object]:
        return {
            "algorithm": Algorithm(self.algorithm).value,
            "n": self.n,
            "k": self.k,
            "threshold": self.threshold,
            "digit_mults": self.counts.digit_mults,
            "digit_adds": self.counts.digit_adds,
            "wall_ns": self.wall_ns,
            "trials": self.trials,
        }


def count_ops(
    algorithm: Algorithm | str,
    a: Operand,
    b: Operand,
    k: int = 2,
    threshold: int = DEFAULT_THRESHOLD,
) -> OpCount:
    """Exact digit-operation tally of one instrumented run."""
    counter = OpCount()
    multiply(algorithm, a, b, k, threshold, counter)
    return counter


def model_steps(n: int, k: int = 2) -> Fraction:
    """``T(n)`` of the analytic model for ``n`` a power of ``k``.

    >>> model_steps(4, 2)
    Fraction(39, 1)
    """
    if k < 2:
        raise ValueError("split arity must be at least 2")
    sizes = [n]
    while sizes[-1] > 1:
        if sizes[-1] % k:
            raise ValueError(f"n={n} is not a power of k={k}")
        sizes.append(sizes[-1] // k)
    t = Fraction(1)
    for size in reversed(sizes[:-1]):
        t = Fraction(k * (k + 1), 2) * t + Fraction(k * size, 2) + 2 * size
    return t


def recursion_residual(n: int, k: int, counts_fn: Callable[[int], int | Fraction]) -> Fraction:
    """``T(n) - [k(k+1)/2 * T(n/k) + k*n/2 + 2*n]`` for the step function ``counts_fn``."""
    if n % k:
        raise ValueError(f"n={n} is not divisible by k={k}")
    rhs = Fraction(k * (k + 1), 2) * Fraction(counts_fn(n // k)) + Fraction(k * n, 2) + 2 * n
    return Fraction(counts_fn(n)) - rhs


def random_operand(n: int, radix: int, rng: random.Random) -> DigitSeq:
    """An ``n``-digit operand with a nonzero leading digit."""
    lead = rng.randrange(1, radix)
    return DigitSeq(radix, (lead, *(rng.randrange(radix) for _ in range(n - 1))))


def _operands(algorithm: Algorithm, n: int, radix: int, seed: int) -> tuple[DigitSeq, DigitSeq]:
    if algorithm is Algorithm.PLUM:
        radix = 10
    elif algorithm is Algorithm.BINARY:
        radix = 2
    rng = random.Random(f"{seed}:{n}:{radix}")
    return random_operand(n, radix, rng), random_operand(n, radix, rng)


def implementation_steps(
    algorithm: Algorithm | str, n: int, k: int = 2, threshold: int = 1, radix: int = 2, seed: int = 0
) -> int:
    """Total counted steps of one run on seeded random ``n``-digit operands."""
    algorithm = Algorithm(algorithm)
    a, b = _operands(algorithm, n, radix, seed)
    return count_ops(algorithm, a, b, k, threshold).total


def run_grid(
    algorithm: Algorithm | str,
    sizes: Iterable[int],
    k: int = 2,
    threshold: int = 1,
    radix: int = 2,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
) -> list[BenchRecord]:
    """Count and time ``algorithm`` at each size.

    Counts come from one instrumented run; the wall time is the median of
    ``trials`` uninstrumented runs on the same operands.  ``trials=0`` skips
    timing.
    """
    algorithm = Algorithm(algorithm)
    records = []
    for n in sizes:
        a, b = _operands(algorithm, n, radix, seed)
        counts = count_ops(algorithm, a, b, k, threshold)
        times = []
        for _ in range(trials):
            start = time.perf_counter_ns()
            multiply(algorithm, a, b, k, threshold)
            times.append(time.perf_counter_ns() - start)
        wall = int(statistics.median(times)) if times else 0
        records.append(BenchRecord(algorithm, n, k, threshold, counts, wall, trials))
    return records


def fit_exponent(records: Sequence[BenchRecord]) -> float:
    """Least-squares slope of ``log(total steps)`` against ``log(n)``."""
    if len(records) < 4:
        raise InsufficientData(f"need at least 4 records, got {len(records)}")
    kinds = {(Algorithm(r.algorithm), r.k, r.threshold) for r in records}
    if len(kinds) > 1:
        raise ValueError("records mix algorithms, k or thresholds")
    if len({r.n for r in records}) < len(records):
        raise InsufficientData("records must have distinct sizes")
    xs = [math.log(r.n) for r in records]
    ys = [math.log(r.counts.total) for r in records]
    return statistics.linear_regression(xs, ys).slope


def _write(records: Sequence[BenchRecord], format: str, out: TextIO) -> None:
    rows = [r.row() for r in records]
    if format == "csv":
        writer = csv.DictWriter(out, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    elif format == "json":
        json.dump(rows, out, indent=2)
        out.write("\n")
    else:
        raise ValueError(f"unknown export format {format!r}")


def dumps(records: Sequence[BenchRecord], format: str = "csv") -> str:
    buf = io.StringIO()
    _write(records, format, buf)
    return buf.getvalue()


def export(records: Sequence[BenchRecord], format: str, path: str | Path) -> None:
    """Write records as CSV or JSON with a fixed column order."""
    text = dumps(records, format)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
