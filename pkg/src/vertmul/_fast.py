"""Compiled kernels for the uninstrumented multipliers.

These mirror the pure-Python code paths digit for digit but run on int64
arrays, so they are only used when every intermediate column provably fits
(see :func:`fits`).  Counting runs always take the pure-Python path.
"""

from __future__ import annotations

import numpy as np
from numba import njit

_LIMIT = 1 << 60
INT64_SAFE = 1 << 62


def fits(radix: int, n: int, k: int = 2, threshold: int = 1) -> bool:
    """True when all column sums for ``n``-digit operands stay well inside int64."""
    width = max(n, threshold, 1) + 4 * k
    return width * (radix - 1) ** 2 + 8 * k * radix < _LIMIT


@njit(cache=True)
def columns(a, b):
    m = a.shape[0]
    n = b.shape[0]
    out = np.zeros(m + n - 1, np.int64)
    for i in range(m):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(n):
            out[i + j] += ai * b[j]
    return out


@njit(cache=True)
def carry_into(cols, radix, out):
    """Carry ``cols`` (at most ``len(out)`` long) into ``out``; returns the leftover carry."""
    width = out.shape[0]
    n = cols.shape[0]
    c = 0
    for i in range(width):
        d = c
        if i < n:
            d += cols[n - 1 - i]
        c = d // radix
        out[width - 1 - i] = d - c * radix
    return c


@njit(cache=True)
def tare_sums(a, b):
    n = a.shape[0]
    out = np.zeros(2 * n - 1, np.int64)
    for t in range(2 * n - 1):
        lo = max(0, t - (n - 1))
        hi = min(t, n - 1)
        total = 0
        j = 0
        while lo + j < hi - j:
            i1 = lo + j
            i2 = hi - j
            total += (a[i1] - a[i2]) * (b[i1] - b[i2])
            j += 1
        out[t] = total
    return out


@njit(cache=True)
def _carry_span(w, src, n, dst, width, radix, shift):
    """Carry ``w[src:src+n]`` into ``w[dst:dst+width]`` (``n <= width``)."""
    c = 0
    for i in range(width):
        d = c
        if i < n:
            d += w[src + n - 1 - i]
        c, w[dst + width - 1 - i] = _split(d, radix, shift)


@njit(cache=True, inline="always")
def _split(d, radix, shift):
    """``divmod(d, radix)``; a non-negative ``shift`` means ``radix == 1 << shift``."""
    if shift >= 0:
        return d >> shift, d & (radix - 1)
    q = d // radix
    return q, d - q * radix


@njit(cache=True, inline="always")
def _digit_product(w, xo, yo, oo, radix, shift):
    q, r = _split(w[xo] * w[yo], radix, shift)
    w[oo] = q
    w[oo + 1] = r


@njit(cache=True, inline="always")
def _lead_sign(w, p, q, m):
    """Sign of the leading nonzero entry of ``w[p:p+m] - w[q:q+m]``."""
    for r in range(m):
        u = w[p + r] - w[q + r]
        if u != 0:
            return 1 if u > 0 else -1
    return 0


@njit(cache=True)
def _recurse(w, xo, yo, n, oo, off, k, threshold, radix, shift):
    """Write the ``2n``-digit product of ``w[xo:xo+n]`` and ``w[yo:yo+n]`` to ``w[oo:]``.

    Everything lives in the single buffer ``w``; ``off`` is the first free slot.
    """
    if n == 1:
        _digit_product(w, xo, yo, oo, radix, shift)
        return
    if n <= threshold:
        for q in range(2 * n - 1):
            w[off + q] = 0
        for i in range(n):
            xi = w[xo + i]
            if xi == 0:
                continue
            for j in range(n):
                w[off + i + j] += xi * w[yo + j]
        _carry_span(w, off, 2 * n - 1, oo, 2 * n, radix, shift)
        return

    m = (n + k - 1) // k
    p = m * k
    width = 2 * m
    xp = off
    yp = xp + p
    cs = yp + p
    tare = cs + k * width
    da = tare + (2 * k - 1) * width
    db = da + m
    ma = db + m
    mb = ma + m
    prod = mb + m
    result = prod + width
    full = result + 2 * p
    pos = full + 2 * p

    for q in range(p - n):
        w[xp + q] = 0
        w[yp + q] = 0
    for q in range(n):
        w[xp + p - n + q] = w[xo + q]
        w[yp + p - n + q] = w[yo + q]
    for q in range((2 * k - 1) * width):
        w[tare + q] = 0

    # single-digit blocks are multiplied in place rather than through a call
    for i in range(k):
        if m == 1:
            _digit_product(w, xp + i, yp + i, cs + i * width, radix, shift)
        else:
            _recurse(w, xp + i * m, yp + i * m, m, cs + i * width, pos, k, threshold, radix, shift)
    for i in range(k):
        for j in range(i + 1, k):
            sa = _lead_sign(w, xp + i * m, xp + j * m, m)
            sb = _lead_sign(w, yp + i * m, yp + j * m, m)
            if sa == 0 or sb == 0:
                continue
            for q in range(m):
                w[da + q] = sa * (w[xp + i * m + q] - w[xp + j * m + q])
                w[db + q] = sb * (w[yp + i * m + q] - w[yp + j * m + q])
            _carry_span(w, da, m, ma, m, radix, shift)
            _carry_span(w, db, m, mb, m, radix, shift)
            if m == 1:
                _digit_product(w, ma, mb, prod, radix, shift)
            else:
                _recurse(w, ma, mb, m, prod, pos, k, threshold, radix, shift)
            s = sa * sb
            base = tare + (i + j) * width
            for q in range(width):
                w[base + q] += s * w[prod + q]

    for q in range(2 * p):
        w[result + q] = 0
    # the running sum reuses the prod slot
    for q in range(width):
        w[prod + q] = 0
    for t in range(2 * k - 1):
        if t < k:
            for q in range(width):
                w[prod + q] += w[cs + t * width + q]
        if t >= k:
            for q in range(width):
                w[prod + q] -= w[cs + (t - k) * width + q]
        start = 2 * p - (2 * k - 2 - t) * m - width
        for q in range(width):
            w[result + start + q] += w[prod + q] - w[tare + t * width + q]
    _carry_span(w, result, 2 * p, full, 2 * p, radix, shift)
    for q in range(2 * n):
        w[oo + q] = w[full + 2 * (p - n) + q]


def workspace_size(n: int, k: int, threshold: int) -> int:
    total = 0
    while n > threshold and n > 1:
        m = -(-n // k)
        p = m * k
        total += 2 * p + 2 * k * m + (2 * k - 1) * 2 * m + 4 * m + 2 * m + 4 * p
        n = m
    return total + 2 * max(n, 1)


def recursive_product(x, y, k: int, threshold: int, radix: int):
    """Product digits (length ``2n``) of equal-length int64 digit arrays."""
    n = x.shape[0]
    w = np.zeros(4 * n + workspace_size(n, k, threshold), np.int64)
    w[:n] = x
    w[n : 2 * n] = y
    shift = radix.bit_length() - 1 if radix & (radix - 1) == 0 else -1
    _recurse(w, 0, n, n, 2 * n, 4 * n, k, threshold, radix, shift)
    return w[2 * n : 4 * n].copy()
