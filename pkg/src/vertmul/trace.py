"""Step-by-step traces of the multiplication methods.

A trace lists the intermediate vectors in the order one would write them by
hand: block choice, difference products, tare, vertical products, running
sums, tare subtraction and the final carry.  Every step stores its raw
column payload; renderings show negative columns overlined.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .crossmul import column_sums
from .digits import (
    DIGIT_CHARS,
    OVERLINE,
    DigitSeq,
    balanced_rewrite,
    carried_form,
    carry_columns,
    expand_blocks,
    segment,
    signed_value,
    to_text,
)
from .plum import plum_columns
from .vertical import (
    DEFAULT_THRESHOLD,
    binary_columns,
    multiply_recursive,
    repunit_convolve,
    split_blocks,
    tare,
    vertical_products,
)


class Method(str, Enum):
    VERTICAL = "vertical"
    PLUM = "plum"
    SCHOOLBOOK = "schoolbook"
    BINARY = "binary_identity"
    RECURSIVE = "recursive"


class StepLabel(str, Enum):
    SEGMENT_CHOICE = "segment_choice"
    RAW_COLUMNS = "raw_columns"
    DIFFERENCE_PRODUCTS = "difference_products"
    TARE = "tare"
    VERTICAL_PRODUCTS = "vertical_products"
    RUNNING_SUMS = "running_sums"
    TARE_SUBTRACTION = "tare_subtraction"
    PLUM_COLUMNS = "plum_columns"
    NORMALIZATION = "normalization"


ALGORITHM_BOUNDS_NOTE = (
    "known inconsistency: the loop bounds often printed for this binary algorithm, "
    "j = 0..[i/2]+1 for i < n-1, count one pair twice whenever i is even "
    "(at i = 0 both j = 0 and j = 1 give the pair of digits 0 and 1); "
    "each tare entry here sums the pairs (j, i+1-j) with j < i+1-j exactly once"
)


@dataclass(frozen=True)
class TraceStep:
    label: StepLabel
    payload: tuple[int, ...]
    balanced: str
    summary: str
    details: tuple[str, ...] = ()


@dataclass(frozen=True)
class Trace:
    method: Method
    radix: int
    segment: int
    operands: tuple[str, str]
    steps: tuple[TraceStep, ...]
    result: str
    notes: tuple[str, ...] = field(default=())

    def with_notes(self, *notes: str) -> Trace:
        return Trace(
            self.method, self.radix, self.segment, self.operands, self.steps, self.result,
            self.notes + notes,
        )


class _Fmt:
    """Formatting helpers bound to one base radix and segment length."""

    def __init__(self, radix: int, s: int):
        self.radix = radix
        self.s = s
        self.block_radix = radix**s

    def entry(self, v: int) -> str:
        body = _digits_text(abs(v), self.radix).rjust(self.s if self.s > 1 else 0, "0")
        return "".join(ch + OVERLINE for ch in body) if v < 0 else body

    def columns(self, values: Sequence[int]) -> str:
        return "(" + ",".join(self.entry(v) for v in values) + ")"

    def number(self, columns: Sequence[int]) -> str:
        v = signed_value(columns, self.block_radix)
        return ("-" if v < 0 else "") + _digits_text(abs(v), self.radix)

    def vector_step(self, label: StepLabel, payload: Sequence[int]) -> TraceStep:
        payload = tuple(payload)
        cols = self.columns(payload)
        details = [f"columns: {cols}"]
        carried = carried_form(payload, self.block_radix)
        if carried != payload:
            details.append(f"carried: {self.columns(carried)}")
        return TraceStep(label, payload, cols, self.number(payload), tuple(details))


def _digits_text(v: int, radix: int) -> str:
    if radix > len(DIGIT_CHARS):
        return str(v)
    if v == 0:
        return "0"
    out = []
    while v:
        v, d = divmod(v, radix)
        out.append(DIGIT_CHARS[d])
    return "".join(reversed(out))


def _operand_text(x: DigitSeq) -> str:
    text = to_text(x)
    if x.canonical or text.startswith("("):
        return text
    return text.lstrip("0") or "0"


def _pair_name(i: int, j: int, n: int) -> str:
    sep = "," if n >= 10 else ""
    return f"K{i + 1}{sep}{j + 1}"


def _blocks(a: DigitSeq, b: DigitSeq, s: int) -> tuple[list[int], list[int]]:
    if s > 1:
        xa, xb = list(segment(a, s).blocks), list(segment(b, s).blocks)
    else:
        xa, xb = list(a.digits), list(b.digits)
    n = max(len(xa), len(xb))
    return [0] * (n - len(xa)) + xa, [0] * (n - len(xb)) + xb


def _difference_step(xa: Sequence[int], xb: Sequence[int], fmt: _Fmt) -> TraceStep:
    n = len(xa)
    order = sorted(((i, j) for i in range(n) for j in range(i + 1, n)), key=lambda p: (p[0] + p[1], p[0]))
    values = tuple((xa[i] - xa[j]) * (xb[i] - xb[j]) for i, j in order)
    names = " ".join(f"{_pair_name(i, j, n)}={fmt.entry(v)}" for (i, j), v in zip(order, values))
    return TraceStep(
        StepLabel.DIFFERENCE_PRODUCTS, values, fmt.columns(values), names or "none"
    )


def _segment_step(xa: Sequence[int], xb: Sequence[int], fmt: _Fmt) -> TraceStep:
    text = f"{fmt.columns(xa)} x {fmt.columns(xb)}"
    return TraceStep(StepLabel.SEGMENT_CHOICE, (*xa, *xb), text, text)


def _sub_aligned(left: Sequence[int], right: Sequence[int]) -> tuple[int, ...]:
    width = max(len(left), len(right))
    left = [0] * (width - len(left)) + list(left)
    right = [0] * (width - len(right)) + list(right)
    out = [u - v for u, v in zip(left, right)]
    while len(out) > 1 and out[0] == 0:
        out.pop(0)
    return tuple(out)


def _finish(
    method: Method,
    fmt: _Fmt,
    operands: tuple[str, str],
    steps: list[TraceStep],
    last: Sequence[int],
    notes: tuple[str, ...] = (),
) -> Trace:
    blocks = DigitSeq(fmt.block_radix, tuple(carry_columns(last, fmt.block_radix)))
    steps.append(fmt.vector_step(StepLabel.NORMALIZATION, blocks.digits))
    result = expand_blocks(blocks, fmt.radix, fmt.s)
    return Trace(method, fmt.radix, fmt.s, operands, tuple(steps), _digits_text(result.value, fmt.radix), notes)


def trace_vertical(
    a: DigitSeq, b: DigitSeq, segment_length: int = 1, rewrite: bool = False
) -> Trace:
    """Trace of running sums of the vertical products minus the tare.

    Operands may carry uncarried digits, e.g. 268 written as ``(24, 28)``.
    With ``rewrite`` every digit ``radix - 1`` is first rewritten as ``-1``
    with a carry.  The vertical products are carried into one number before
    the repunit multiplication, as in hand working.
    """
    operands = (_operand_text(a), _operand_text(b))
    if rewrite:
        a, b = balanced_rewrite(a), balanced_rewrite(b)
    fmt = _Fmt(a.radix, segment_length)
    xa, xb = _blocks(a, b, segment_length)
    n = len(xa)
    da, db = DigitSeq(fmt.block_radix, xa), DigitSeq(fmt.block_radix, xb)

    steps = []
    if (
        segment_length > 1
        or rewrite
        or len(a) != len(b)
        or not (a.canonical and b.canonical)
    ):
        steps.append(_segment_step(xa, xb, fmt))
    steps.append(_difference_step(xa, xb, fmt))
    k = tare(da, db)
    steps.append(fmt.vector_step(StepLabel.TARE, k.sums))
    c = vertical_products(da, db).entries
    c_step = fmt.vector_step(StepLabel.VERTICAL_PRODUCTS, c)
    steps.append(c_step)
    c_carried = carried_form(c, fmt.block_radix)
    running = repunit_convolve(c_carried, n)
    steps.append(fmt.vector_step(StepLabel.RUNNING_SUMS, running))
    diff = _sub_aligned(running, k.entries)
    steps.append(fmt.vector_step(StepLabel.TARE_SUBTRACTION, diff))
    return _finish(Method.VERTICAL, fmt, operands, steps, diff)


def trace_binary(a: DigitSeq, b: DigitSeq) -> Trace:
    """Trace of the radix-2 identity ``a * b = (C, -C) - K``."""
    if a.radix != 2 or b.radix != 2:
        from .errors import RadixNotBinary

        raise RadixNotBinary("binary traces need radix-2 operands")
    fmt = _Fmt(2, 1)
    xa, xb = _blocks(a, b, 1)
    da, db = DigitSeq(2, xa), DigitSeq(2, xb)
    steps = []
    if len(a) != len(b):
        steps.append(_segment_step(xa, xb, fmt))
    steps.append(_difference_step(xa, xb, fmt))
    k = tare(da, db)
    steps.append(fmt.vector_step(StepLabel.TARE, k.sums))
    c = vertical_products(da, db)
    steps.append(fmt.vector_step(StepLabel.VERTICAL_PRODUCTS, c.entries))
    cols = binary_columns(c)
    steps.append(fmt.vector_step(StepLabel.RUNNING_SUMS, cols))
    diff = _sub_aligned(cols, k.entries)
    steps.append(fmt.vector_step(StepLabel.TARE_SUBTRACTION, diff))
    return _finish(Method.BINARY, fmt, (to_text(a), to_text(b)), steps, diff, (ALGORITHM_BOUNDS_NOTE,))


def trace_plum(a: DigitSeq, b: DigitSeq) -> Trace:
    """Trace of the plum-blossom method: one step of raw columns, then carrying."""
    fmt = _Fmt(10, 1)
    raw = plum_columns(a, b).digits
    steps = [fmt.vector_step(StepLabel.PLUM_COLUMNS, raw)]
    return _finish(Method.PLUM, fmt, (to_text(a), to_text(b)), steps, raw)


def trace_schoolbook(a: DigitSeq, b: DigitSeq, segment_length: int = 1) -> Trace:
    """Trace of the cross-sum columns, optionally on blocks of ``segment_length`` digits."""
    fmt = _Fmt(a.radix, segment_length)
    xa, xb = _blocks(a, b, segment_length)
    xa = xa[next((i for i, v in enumerate(xa) if v), len(xa) - 1) :]
    xb = xb[next((i for i, v in enumerate(xb) if v), len(xb) - 1) :]
    steps = []
    if segment_length > 1:
        steps.append(_segment_step(xa, xb, fmt))
    raw = column_sums(xa, xb)
    steps.append(fmt.vector_step(StepLabel.RAW_COLUMNS, raw))
    return _finish(Method.SCHOOLBOOK, fmt, (to_text(a), to_text(b)), steps, raw)


def trace_recursive(
    a: DigitSeq, b: DigitSeq, k: int = 2, threshold: int = DEFAULT_THRESHOLD
) -> Trace:
    """Top level of the ``k``-way recursion; the block products come from
    :func:`multiply_recursive` itself."""
    n = max(len(a), len(b))
    xa = split_blocks([0] * (n - len(a)) + list(a.digits), k)
    xb = split_blocks([0] * (n - len(b)) + list(b.digits), k)
    m = len(xa[0])
    fmt = _Fmt(a.radix, m)
    R = fmt.block_radix

    def num(digits: Sequence[int]) -> int:
        return signed_value(digits, a.radix)

    def mul(x: Sequence[int], y: Sequence[int]) -> int:
        return multiply_recursive(DigitSeq(a.radix, x), DigitSeq(a.radix, y), k, threshold).value

    ba, bb = [num(x) for x in xa], [num(y) for y in xb]
    steps = [_segment_step(ba, bb, fmt)]
    c = [mul(xa[i], xb[i]) for i in range(k)]
    steps.append(fmt.vector_step(StepLabel.VERTICAL_PRODUCTS, c))

    order = sorted(((i, j) for i in range(k) for j in range(i + 1, k)), key=lambda p: (p[0] + p[1], p[0]))
    kd = {}
    for i, j in order:
        da, db = ba[i] - ba[j], bb[i] - bb[j]
        mag = mul(DigitSeq.from_int(abs(da), a.radix).digits, DigitSeq.from_int(abs(db), a.radix).digits)
        kd[i, j] = mag if da * db >= 0 else -mag
    names = " ".join(f"{_pair_name(i, j, k)}={fmt.entry(kd[i, j])}" for i, j in order)
    values = tuple(kd[p] for p in order)
    steps.append(TraceStep(StepLabel.DIFFERENCE_PRODUCTS, values, fmt.columns(values), names or "none"))

    sums = [sum(v for (i, j), v in kd.items() if i + j == t) for t in range(2 * k - 1)]
    steps.append(fmt.vector_step(StepLabel.TARE, sums))
    running = repunit_convolve(c, k)
    steps.append(fmt.vector_step(StepLabel.RUNNING_SUMS, running))
    z = tuple(u - v for u, v in zip(running, sums))
    steps.append(fmt.vector_step(StepLabel.TARE_SUBTRACTION, z))
    return _finish(
        Method.RECURSIVE, fmt, (to_text(a), to_text(b)), steps, z,
        (f"k={k}, threshold={threshold}, block length {m}",),
    )


def _text(t: Trace) -> str:
    a, b = t.operands
    lines = [f"{t.method.value}: {a} x {b} (radix {t.radix}, segment {t.segment})"]
    if not t.steps:
        return lines[0] + "\n"
    for step in t.steps:
        lines.append(f"{step.label.value}: {step.summary}")
        lines.extend(f"  {d}" for d in step.details)
    lines.append(f"result: {t.result}")
    lines.extend(f"note: {n}" for n in t.notes)
    return "\n".join(lines) + "\n"


def _markdown(t: Trace) -> str:
    a, b = t.operands
    lines = [f"### {t.method.value}: {a} x {b}", "", f"radix {t.radix}, segment {t.segment}"]
    if not t.steps:
        return "\n".join(lines) + "\n"
    lines += ["", "| step | value | columns |", "|---|---|---|"]
    for step in t.steps:
        lines.append(f"| {step.label.value} | {step.summary} | {step.balanced} |")
    lines += ["", f"**result:** {t.result}"]
    if t.notes:
        lines.append("")
        lines.extend(f"> note: {n}" for n in t.notes)
    return "\n".join(lines) + "\n"


def to_json_obj(t: Trace) -> dict:
    return {
        "method": t.method.value,
        "radix": t.radix,
        "segment": t.segment,
        "operands": list(t.operands),
        "steps": [
            {"label": s.label.value, "payload": list(s.payload), "balanced": s.balanced}
            for s in t.steps
        ],
        "result": t.result,
        "notes": list(t.notes),
    }


def render_trace(t: Trace, format: str = "text") -> str:
    """Render a trace as ``text``, ``markdown`` or ``json``."""
    if format == "text":
        return _text(t)
    if format == "markdown":
        return _markdown(t)
    if format == "json":
        return json.dumps(to_json_obj(t), ensure_ascii=False, indent=2) + "\n"
    raise ValueError(f"unknown trace format {format!r}")
