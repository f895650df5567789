"""Cross product sums and the column-by-column (schoolbook) product.

This is the quadratic reference multiplier; every other algorithm in the
package is checked against it.
"""

from __future__ import annotations

from dataclasses import dataclass
from operator import mul
from typing import Sequence

import numpy as np

from . import _fast
from .digits import DigitSeq, Operand, as_operand, carry_columns, expand_blocks
from .errors import LengthMismatch
from .opcount import OpCount


# below this many digits the compiled kernel is not worth the array conversion
_FAST_MIN = 12


@dataclass(frozen=True)
class Window:
    """Two equal-length digit slices whose cross product sum forms one column."""

    a_slice: tuple[int, ...]
    b_slice: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "a_slice", tuple(self.a_slice))
        object.__setattr__(self, "b_slice", tuple(self.b_slice))
        if len(self.a_slice) != len(self.b_slice):
            raise LengthMismatch(
                f"window slices differ in length: {len(self.a_slice)} vs {len(self.b_slice)}"
            )
        if not self.a_slice:
            raise LengthMismatch("a window needs at least one digit")

    def __len__(self) -> int:
        return len(self.a_slice)


def cross_sum(w: Window, counter: OpCount | None = None) -> int:
    """``a1*bn + a2*b(n-1) + ... + an*b1`` for the window ``w``.

    >>> cross_sum(Window((1, 2, 3), (4, 5, 6)))
    28
    """
    if counter is not None:
        counter.digit_mults += len(w)
        counter.digit_adds += len(w) - 1
    return sum(map(mul, w.a_slice, reversed(w.b_slice)))


def window_bounds(t: int, m: int, n: int) -> tuple[int, int]:
    """Index range ``[lo, hi]`` of the multiplicand digits in column ``t``.

    Columns are numbered from the most significant one, ``0 .. m+n-2``, for an
    ``m``-digit multiplicand and ``n``-digit multiplier; the multiplier slice is
    ``[t-hi, t-lo]``.
    """
    return max(0, t - (n - 1)), min(t, m - 1)


def windows(a: Sequence[int], b: Sequence[int]) -> list[Window]:
    """All sliding windows of a product with ``len(a) >= len(b)``, left to right."""
    m, n = len(a), len(b)
    out = []
    for t in range(m + n - 1):
        lo, hi = window_bounds(t, m, n)
        out.append(Window(a[lo : hi + 1], b[t - hi : t - lo + 1]))
    return out


def column_sums(a: Sequence[int], b: Sequence[int], counter: OpCount | None = None) -> list[int]:
    """Uncarried product columns of two digit lists (either may be longer)."""
    if len(a) < len(b):
        a, b = b, a
    m, n = len(a), len(b)
    if counter is None and n >= _FAST_MIN:
        bound = max(map(abs, a)) * max(map(abs, b)) * n
        if bound < _fast.INT64_SAFE:
            return _fast.columns(np.array(a, np.int64), np.array(b, np.int64)).tolist()
    cols = []
    terms = 0
    for t in range(m + n - 1):
        lo, hi = window_bounds(t, m, n)
        # b[t-lo], b[t-lo-1], ..., b[t-hi]
        stop = t - hi - 1
        b_rev = b[t - lo : stop if stop >= 0 else None : -1]
        cols.append(sum(map(mul, a[lo : hi + 1], b_rev)))
        terms += hi - lo + 1
    if counter is not None:
        counter.digit_mults += terms
        counter.digit_adds += terms - len(cols)
    return cols


def raw_columns(a: Operand, b: Operand, counter: OpCount | None = None) -> DigitSeq:
    """The uncarried column vector of ``a * b``, one cross sum per window.

    Segmented operands are multiplied block by block; the result is in the
    block radix.

    >>> raw_columns(DigitSeq(10, (1, 2, 3)), DigitSeq(10, (4, 5, 6))).digits
    (4, 13, 28, 27, 18)
    """
    da, _, s_a = as_operand(a)
    db, _, s_b = as_operand(b)
    if da.radix != db.radix or s_a != s_b:
        raise ValueError("operands must share radix and segment length")
    return DigitSeq(da.radix, tuple(column_sums(da.digits, db.digits, counter)))


def multiply_schoolbook(a: Operand, b: Operand, counter: OpCount | None = None) -> DigitSeq:
    """Exact product by carrying the cross-sum columns.

    The result is canonical and expressed in the base radix of the operands.
    """
    da, base, s = as_operand(a)
    raw = raw_columns(a, b, counter)
    blocks = DigitSeq(da.radix, tuple(carry_columns(raw.digits, raw.radix, counter)))
    return expand_blocks(blocks, base, s)
