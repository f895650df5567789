"""Scissor products and the plum-blossom digit product.

The plum-blossom product ``a ♣ b`` of two decimal digits is the ones digit of
``a * b`` when that digit is at most 3, otherwise the ones digit minus 10, so
it always lies in ``[-6, 3]``.  Its carry ``J`` satisfies
``a * b = 10 * J + (a ♣ b)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .crossmul import window_bounds
from .digits import DigitSeq, normalize
from .errors import DigitOutOfRange, OrderViolation, UnsupportedRadix
from .opcount import OpCount

PLUM_MIN, PLUM_MAX = -6, 3

# Upper triangle of the published 9x9 plum table, row a lists columns b = a..9.
PRINTED_TABLE = {
    1: (1, 2, 3, -6, -5, -4, -3, -2, -1),
    2: (-6, -4, -2, 0, 2, -6, -4, -2),
    3: (-1, 2, -5, -2, 1, -6, -3),
    4: (-4, 0, -6, -2, 2, -4),
    5: (-5, 0, -5, 0, -5),
    6: (-4, 2, -2, -6),
    7: (-1, -4, 3),
    8: (-6, 2),
    9: (1,),
}


@dataclass(frozen=True)
class PlumEntry:
    a: int
    b: int
    plum: int
    carry_j: int


@dataclass(frozen=True)
class ScissorContext:
    """Standard number ``N = 10**n`` used by increments, complements and scissor products."""

    standard: int = 10

    def __post_init__(self) -> None:
        n = self.standard
        while n > 1 and n % 10 == 0:
            n //= 10
        if n != 1 or self.standard < 10:
            raise ValueError(f"standard number must be a positive power of 10, got {self.standard}")


def _check_digit(d: int) -> None:
    if not 1 <= d <= 9:
        raise DigitOutOfRange(f"plum products are defined for digits 1-9, got {d}")


def _plum(a: int, b: int) -> int:
    ones = (a * b) % 10
    return ones if ones <= PLUM_MAX else ones - 10


def _carry(a: int, b: int) -> int:
    return (a * b - _plum(a, b)) // 10


def plum(a: int, b: int) -> int:
    """``3 ♣ 7 = 1``, ``7 ♣ 7 = -1``, ``5 ♣ 8 = 0``."""
    _check_digit(a)
    _check_digit(b)
    return _plum(a, b)


def plum_carry(a: int, b: int) -> int:
    """The high part ``J`` with ``a * b == 10 * J + plum(a, b)``."""
    _check_digit(a)
    _check_digit(b)
    return _carry(a, b)


def theorem_carry(a: int, b: int) -> int:
    """``J`` by the four-case digit rule, for digits ``a <= b`` (swapped otherwise).

    The first case is read as ``(a == 1 or b == 9) and b - a >= 3``; the other
    grouping disagrees with ``a * b`` for (1, 1), (1, 2) and (1, 3).
    """
    _check_digit(a)
    _check_digit(b)
    if a > b:
        a, b = b, a
    if (a == 1 or b == 9) and b - a >= 3:
        return a
    if b - a >= 5:
        return a
    if 3 <= a <= b <= 7 and b - a <= 1:
        return a - 2
    return a - 1


def plum_table() -> dict[tuple[int, int], PlumEntry]:
    """Full symmetric 9x9 table keyed by ``(a, b)``."""
    return {
        (a, b): PlumEntry(a, b, _plum(a, b), _carry(a, b))
        for a in range(1, 10)
        for b in range(1, 10)
    }


def table_diff() -> list[tuple[int, int, int, int]]:
    """Cells ``(a, b, printed, computed)`` where the printed table disagrees."""
    out = []
    for a, row in PRINTED_TABLE.items():
        for b, printed in zip(range(a, 10), row):
            computed = _plum(a, b)
            if printed != computed:
                out.append((a, b, printed, computed))
    return out


def theorem_disagreements() -> list[tuple[int, int, int, int]]:
    """Pairs ``(a, b, rule J, arithmetic J)`` with ``a <= b`` where the case rule is wrong."""
    out = []
    for a in range(1, 10):
        for b in range(a, 10):
            rule, exact = theorem_carry(a, b), _carry(a, b)
            if rule != exact:
                out.append((a, b, rule, exact))
    return out


def increment(a: int, ctx: ScissorContext = ScissorContext()) -> int:
    """``a - N``; the increment of 119 relative to 100 is 19."""
    return a - ctx.standard


def complement(a: int, ctx: ScissorContext = ScissorContext()) -> int:
    return ctx.standard - a


def scissor(a: int, b: int, ctx: ScissorContext = ScissorContext()) -> int:
    """``a * b - (min(a, b) - 1) * N``, e.g. ``3 ∧ 9 = 7`` relative to 10."""
    if a < 1 or b < 1:
        raise ValueError("scissor products take positive integers")
    return a * b - (min(a, b) - 1) * ctx.standard


def scissor_decompose(a: int, b: int, ctx: ScissorContext = ScissorContext()) -> tuple[int, int]:
    """Split ``a * b`` into ``(a - 1, a ∧ b)`` so that ``a*b == (a-1)*N + a ∧ b``."""
    if a > b:
        raise OrderViolation(f"needs a <= b, got {a} > {b}")
    return a - 1, scissor(a, b, ctx)


def plum_columns(a: DigitSeq, b: DigitSeq, counter: OpCount | None = None) -> DigitSeq:
    """Uncarried columns of the plum-blossom method.

    Each inner column holds the plum products of its cross pairs plus the
    carries ``J`` of the pairs one column to the right.  The leftmost column
    uses the full products instead of plum products, and the rightmost
    column keeps the ordinary ones digit, passing the ordinary tens digit
    left.  Pairs containing a zero contribute nothing.  Each digit pair costs
    one multiplication; its plum value and carry are read off that product.

    >>> plum_columns(DigitSeq(10, (3, 8, 6)), DigitSeq(10, (4, 7))).digits
    (17, 12, -6, 2)
    """
    if a.radix != 10 or b.radix != 10:
        raise UnsupportedRadix("plum products are decimal only")
    x, y = a.digits, b.digits
    if len(x) < len(y):
        x, y = y, x
    if min(x + y) < 0 or max(x + y) > 9:
        raise DigitOutOfRange("plum multiplication needs carried decimal digits")
    m, n = len(x), len(y)
    last = m + n - 2
    if counter is not None:
        # one product per pair, then every column adds its own terms and the carries
        counter.digit_mults += m * n
        counter.digit_adds += max(0, 2 * m * n - (m + n - 1) - 1)
    if last == 0:
        return DigitSeq(10, (x[0] * y[0],))

    def pairs(t: int) -> list[tuple[int, int]]:
        lo, hi = window_bounds(t, m, n)
        return [(x[i], y[t - i]) for i in range(lo, hi + 1)]

    cols = []
    for t in range(last + 1):
        if t == 0:
            col = sum(p * q for p, q in pairs(0))
        elif t == last:
            col = sum(p * q for p, q in pairs(t)) % 10
        else:
            col = sum(_plum(p, q) for p, q in pairs(t))
        if t + 1 == last:
            col += sum(p * q for p, q in pairs(last)) // 10
        elif t < last:
            col += sum(_carry(p, q) for p, q in pairs(t + 1))
        cols.append(col)
    return DigitSeq(10, tuple(cols))


def multiply_plum(a: DigitSeq, b: DigitSeq, counter: OpCount | None = None) -> DigitSeq:
    """Decimal product by the plum-blossom method."""
    return normalize(plum_columns(a, b, counter), counter=counter)
