"""Vertical multiplication: vertical products, running sums and the tare.

For two ``n``-digit numbers the product equals the running sums of the
vertical products ``C_i = a_i * b_i`` minus the tare, a vector of sums of
difference products ``(a_i - a_j) * (b_i - b_j)`` over mirrored index pairs.
The same identity applied block-wise gives a recursive ``k``-way multiplier
that uses ``k(k+1)/2`` half-size products per level.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _fast
from .crossmul import _FAST_MIN, Window, column_sums, window_bounds
from .digits import (
    DigitSeq,
    Operand,
    as_operand,
    carry_columns,
    expand_blocks,
    signed_value,
)
from .errors import LengthMismatch, RadixNotBinary
from .opcount import OpCount

DEFAULT_THRESHOLD = 8


@dataclass(frozen=True)
class TareVec:
    """Tare entries aligned with the product columns.

    ``entries`` has ``2n`` items: a leading zero that lines up with the carry
    column of the product, then ``0, K12, K123, ..., K(n-1)n, 0``.
    """

    radix: int
    entries: tuple[int, ...]

    @property
    def sums(self) -> tuple[int, ...]:
        """The tare written as ``(0, K12, ..., K(n-1)n, 0)``."""
        return self.entries[1:]

    @property
    def value(self) -> int:
        return signed_value(self.entries, self.radix)


@dataclass(frozen=True)
class VerticalVec:
    radix: int
    entries: tuple[int, ...]


def difference_product(a_i: int, a_j: int, b_i: int, b_j: int) -> int:
    return (a_i - a_j) * (b_i - b_j)


def mirrored_pairs(lo: int, hi: int) -> list[tuple[int, int]]:
    """Index pairs ``(lo, hi), (lo+1, hi-1), ...``; a middle index is left out."""
    return [(lo + j, hi - j) for j in range((hi - lo + 1) // 2)]


def symmetric_difference(w: Window, counter: OpCount | None = None) -> int:
    """Sum of the difference products over the mirrored pairs of a window.

    >>> symmetric_difference(Window((6, 7, 8, 9), (6, 7, 8, 9)))
    10
    """
    a, b = w.a_slice, w.b_slice
    pairs = mirrored_pairs(0, len(a) - 1)
    if counter is not None and pairs:
        counter.digit_mults += len(pairs)
        counter.digit_adds += 3 * len(pairs) - 1
    return sum(difference_product(a[i], a[j], b[i], b[j]) for i, j in pairs)


def _equal_digits(a: Operand, b: Operand) -> tuple[tuple[int, ...], tuple[int, ...], int]:
    da, _, s_a = as_operand(a)
    db, _, s_b = as_operand(b)
    if da.radix != db.radix or s_a != s_b:
        raise ValueError("operands must share radix and segment length")
    if len(da) != len(db):
        raise LengthMismatch(f"operands differ in length: {len(da)} vs {len(db)}")
    return da.digits, db.digits, da.radix


def _tare_sums(a: Sequence[int], b: Sequence[int], counter: OpCount | None = None) -> list[int]:
    n = len(a)
    if counter is None and n >= _FAST_MIN:
        bound = 4 * max(map(abs, a)) * max(map(abs, b)) * n
        if bound < _fast.INT64_SAFE:
            return _fast.tare_sums(np.array(a, np.int64), np.array(b, np.int64)).tolist()
    sums = []
    for t in range(2 * n - 1):
        lo, hi = window_bounds(t, n, n)
        total = 0
        for i, j in mirrored_pairs(lo, hi):
            total += (a[i] - a[j]) * (b[i] - b[j])
        sums.append(total)
    if counter is not None and n > 1:
        pairs = n * (n - 1) // 2
        counter.digit_mults += pairs
        # two subtractions per pair, then summing the pairs of each window
        counter.digit_adds += 2 * pairs + (pairs - (2 * n - 3))
    return sums


def tare(a: Operand, b: Operand, counter: OpCount | None = None) -> TareVec:
    """The tare of two equal-length operands.

    >>> tare(DigitSeq(10, (6, 7, 8, 9)), DigitSeq(10, (6, 7, 8, 9))).sums
    (0, 1, 4, 10, 4, 1, 0)
    """
    da, db, radix = _equal_digits(a, b)
    return TareVec(radix, (0, *_tare_sums(da, db, counter)))


def vertical_products(a: Operand, b: Operand, counter: OpCount | None = None) -> VerticalVec:
    da, db, radix = _equal_digits(a, b)
    if counter is not None:
        counter.digit_mults += len(da)
    return VerticalVec(radix, tuple(x * y for x, y in zip(da, db)))


def repunit_convolve(
    values: Sequence[int], ones: int, counter: OpCount | None = None
) -> tuple[int, ...]:
    """Multiply a column vector by ``(1, 1, ..., 1)`` with ``ones`` entries.

    Entry ``t`` is the sum of ``values[t-ones+1 .. t]``, kept as a sliding
    window so the cost is linear.

    >>> repunit_convolve((2, 1, -4, 6), 3)
    (2, 3, -1, 3, 2, 6)
    """
    out = []
    running = 0
    adds = 0
    for t in range(len(values) + ones - 1):
        if t < len(values):
            running += values[t]
            adds += t > 0
        if t >= ones:
            running -= values[t - ones]
            adds += 1
        out.append(running)
    if counter is not None:
        counter.digit_adds += adds
    return tuple(out)


def running_sums(c: VerticalVec, counter: OpCount | None = None) -> DigitSeq:
    """``C x (1, ..., 1)`` as ``2n`` columns, led by the zero carry column."""
    return DigitSeq(c.radix, (0, *repunit_convolve(c.entries, len(c.entries), counter)))


def pad_equal(a: Operand, b: Operand) -> tuple[DigitSeq, DigitSeq, int, int]:
    """Left-pad both operands with zeros to a common length.

    Returns the two block-radix sequences, the base radix and the segment length.
    """
    da, base, s_a = as_operand(a)
    db, _, s_b = as_operand(b)
    if da.radix != db.radix or s_a != s_b:
        raise ValueError("operands must share radix and segment length")
    n = max(len(da), len(db))
    da = DigitSeq(da.radix, (0,) * (n - len(da)) + da.digits)
    db = DigitSeq(db.radix, (0,) * (n - len(db)) + db.digits)
    return da, db, base, s_a


def _subtract_tare(cols: Sequence[int], k: TareVec, counter: OpCount | None) -> list[int]:
    n = len(cols) // 2
    if counter is not None and n > 1:
        counter.digit_adds += 2 * n - 3
    return [c - t for c, t in zip(cols, k.entries)]


def multiply_vertical(a: Operand, b: Operand, counter: OpCount | None = None) -> DigitSeq:
    """Product as running sums of the vertical products minus the tare.

    Shorter operands are left-padded with zeros.  The result is canonical
    and in the base radix of the operands.
    """
    da, db, base, s = pad_equal(a, b)
    cols = running_sums(vertical_products(da, db, counter), counter).digits
    cols = _subtract_tare(cols, tare(da, db, counter), counter)
    blocks = DigitSeq(da.radix, tuple(carry_columns(cols, da.radix, counter)))
    return expand_blocks(blocks, base, s)


def binary_columns(c: VerticalVec) -> tuple[int, ...]:
    """``(C, -C)``: in radix 2, ``C x (1, ..., 1) = C * 2**n - C``."""
    return (*c.entries, *(-x for x in c.entries))


def multiply_binary_identity(a: Operand, b: Operand, counter: OpCount | None = None) -> DigitSeq:
    """Radix-2 product as ``(C, -C) - K``."""
    da, db, _, s = pad_equal(a, b)
    if da.radix != 2 or s != 1:
        raise RadixNotBinary(f"needs plain radix-2 operands, got radix {da.radix}")
    c = vertical_products(da, db, counter)
    cols = binary_columns(c)
    if counter is not None:
        counter.digit_adds += len(c.entries)
    cols = _subtract_tare(cols, tare(da, db, counter), counter)
    return DigitSeq(2, tuple(carry_columns(cols, 2, counter)))


def _signed_difference(
    x: Sequence[int], y: Sequence[int], radix: int, counter: OpCount | None
) -> tuple[int, list[int]]:
    """``x - y`` for equal-length canonical digit lists as ``(sign, magnitude)``."""
    d = [p - q for p, q in zip(x, y)]
    if counter is not None:
        counter.digit_adds += len(d)
    sign = 0
    for v in d:
        if v:
            # the leading nonzero column outweighs everything to its right
            sign = 1 if v > 0 else -1
            break
    if sign < 0:
        d = [-v for v in d]
    return sign, carry_columns(d, radix, counter, width=len(d))


def split_blocks(x: Sequence[int], k: int) -> list[list[int]]:
    """Left-pad ``x`` to a multiple of ``k`` digits and cut it into ``k`` blocks."""
    m = -(-len(x) // k)
    x = [0] * (m * k - len(x)) + list(x)
    return [x[i * m : (i + 1) * m] for i in range(k)]


def _recurse(
    x: list[int],
    y: list[int],
    k: int,
    threshold: int,
    radix: int,
    counter: OpCount | None,
) -> list[int]:
    """Canonical product of equal-length digit lists, exactly ``2*len(x)`` digits."""
    n = len(x)
    if n <= threshold:
        return carry_columns(column_sums(x, y, counter), radix, counter, width=2 * n)

    xs = split_blocks(x, k)
    ys = split_blocks(y, k)
    m = len(xs[0])
    p = m * k
    width = 2 * m

    c = [_recurse(xs[i], ys[i], k, threshold, radix, counter) for i in range(k)]

    # tare[t] collects the difference products of the pairs (i, j) with i + j = t
    tare_cols: list[list[int] | None] = [None] * (2 * k - 1)
    adds = 0
    for i in range(k):
        for j in range(i + 1, k):
            sa, ma = _signed_difference(xs[i], xs[j], radix, counter)
            sb, mb = _signed_difference(ys[i], ys[j], radix, counter)
            prod = _recurse(ma, mb, k, threshold, radix, counter)
            sign = sa * sb
            acc = tare_cols[i + j]
            if acc is None:
                tare_cols[i + j] = [sign * v for v in prod]
            else:
                tare_cols[i + j] = [u + sign * v for u, v in zip(acc, prod)]
                adds += width

    result = [0] * (2 * p)
    running = [0] * width
    for t in range(2 * k - 1):
        if t < k:
            running = [u + v for u, v in zip(running, c[t])]
            adds += width if t else 0
        if t >= k:
            running = [u - v for u, v in zip(running, c[t - k])]
            adds += width
        z = running
        kt = tare_cols[t]
        if kt is not None:
            z = [u - v for u, v in zip(z, kt)]
            adds += width
        end = 2 * p - (2 * k - 2 - t) * m
        start = end - width
        result[start:end] = [u + v for u, v in zip(result[start:end], z)]
        adds += m if t else 0
    if counter is not None:
        counter.digit_adds += adds
    digits = carry_columns(result, radix, counter, width=2 * p)
    return digits[2 * (p - n) :]


def multiply_recursive(
    a: Operand,
    b: Operand,
    k: int = 2,
    threshold: int = DEFAULT_THRESHOLD,
    counter: OpCount | None = None,
) -> DigitSeq:
    """``k``-way recursive vertical multiplication.

    Each level cuts both operands into ``k`` blocks, forms the ``k`` block
    vertical products and the ``k(k-1)/2`` block difference products by
    recursion, and combines them as running sums minus tare.  Operands of at
    most ``threshold`` digits go to the schoolbook multiplier.  Signed block
    differences are multiplied as magnitudes and the sign is reapplied.
    """
    if k < 2:
        raise ValueError(f"split arity must be at least 2, got {k}")
    if threshold < 1:
        raise ValueError(f"threshold must be at least 1, got {threshold}")
    da, db, base, s = pad_equal(a, b)
    if min(da.digits + db.digits) < 0 or max(da.digits + db.digits) >= da.radix:
        raise ValueError("recursive multiplication needs carried operands")
    if counter is None and len(da) >= _FAST_MIN and _fast.fits(da.radix, len(da), k, threshold):
        digits = _fast.recursive_product(
            np.array(da.digits, np.int64), np.array(db.digits, np.int64), k, threshold, da.radix
        ).tolist()
    else:
        digits = _recurse(list(da.digits), list(db.digits), k, threshold, da.radix, counter)
    i = 0
    while i < len(digits) - 1 and digits[i] == 0:
        i += 1
    return expand_blocks(DigitSeq(da.radix, tuple(digits[i:])), base, s)
