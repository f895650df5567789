"""Digit sequences, segmented numbers, carrying and balanced rendering.

Digits are stored most-significant first so that ``digits[0]`` is the
leftmost digit of the written number.  A :class:`DigitSeq` may hold any
integers as digits; column sums such as ``(4, 13, 28, 27, 18)`` or negative
digits are legal until :func:`normalize` carries them.
"""

from __future__ import annotations

import string
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence, Union

from .errors import (
    DigitOutOfRange,
    EmptyInput,
    InvalidDigit,
    NegativeValue,
    NonCanonicalBlock,
    UnsupportedRadix,
)
from .opcount import OpCount

DIGIT_CHARS = string.digits + string.ascii_lowercase
MAX_TEXT_RADIX = len(DIGIT_CHARS)
OVERLINE = "\u0305"


class Notation(str, Enum):
    UNICODE = "unicode_overline"
    ASCII = "ascii_tilde"


@dataclass(frozen=True)
class DigitSeq:
    """A radix-``radix`` number written as a list of (possibly uncarried) digits."""

    radix: int
    digits: tuple[int, ...]
    canonical: bool = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if self.radix < 2:
            raise UnsupportedRadix(f"radix must be at least 2, got {self.radix}")
        digits = tuple(map(int, self.digits))
        if not digits:
            raise EmptyInput("a digit sequence needs at least one digit")
        object.__setattr__(self, "digits", digits)
        in_range = min(digits) >= 0 and max(digits) < self.radix
        object.__setattr__(self, "canonical", in_range and (digits[0] != 0 or len(digits) == 1))

    @classmethod
    def from_int(cls, value: int, radix: int = 10) -> DigitSeq:
        if value < 0:
            raise NegativeValue(f"cannot build a digit sequence for {value}")
        out = []
        while True:
            value, r = divmod(value, radix)
            out.append(r)
            if not value:
                break
        return cls(radix, tuple(reversed(out)))

    @property
    def value(self) -> int:
        if self.canonical and self.radix <= MAX_TEXT_RADIX:
            return int("".join(map(DIGIT_CHARS.__getitem__, self.digits)), self.radix)
        total = 0
        for d in self.digits:
            total = total * self.radix + d
        return total

    def __len__(self) -> int:
        return len(self.digits)

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class SegmentedNumber:
    """A number regrouped into blocks of ``segment_length`` base-radix digits."""

    segment_length: int
    base_radix: int
    blocks: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.segment_length < 1:
            raise ValueError("segment length must be at least 1")
        if self.base_radix < 2:
            raise UnsupportedRadix(f"radix must be at least 2, got {self.base_radix}")
        if not self.blocks:
            raise EmptyInput("a segmented number needs at least one block")
        object.__setattr__(self, "blocks", tuple(int(b) for b in self.blocks))

    @property
    def block_radix(self) -> int:
        return self.base_radix**self.segment_length

    @property
    def is_canonical(self) -> bool:
        return all(0 <= b < self.block_radix for b in self.blocks)

    @property
    def value(self) -> int:
        return self.as_digits().value

    def as_digits(self) -> DigitSeq:
        """The blocks viewed as digits of radix ``base_radix ** segment_length``."""
        return DigitSeq(self.block_radix, self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)


Operand = Union[DigitSeq, SegmentedNumber]


@dataclass(frozen=True)
class BalancedRendering:
    text: str
    notation: Notation


def as_operand(x: Operand) -> tuple[DigitSeq, int, int]:
    """Return ``(digits in block radix, base radix, segment length)`` for ``x``."""
    if isinstance(x, SegmentedNumber):
        return x.as_digits(), x.base_radix, x.segment_length
    return x, x.radix, 1


def carry_columns(
    columns: Sequence[int],
    radix: int,
    counter: OpCount | None = None,
    width: int | None = None,
) -> list[int]:
    """Carry a column vector into canonical digits, most-significant first.

    Columns are processed right to left; ``divmod`` turns both overflow and
    negative columns into a carry (or borrow) for the next column.  One digit
    addition is tallied for every column that receives a nonzero carry.
    With ``width`` the result is left-padded or trimmed to exactly that many
    digits; trimming only removes zeros.
    """
    out: list[int] = []
    carry = 0
    adds = 0
    for d in reversed(columns):
        if carry:
            d += carry
            adds += 1
        carry, r = divmod(d, radix)
        out.append(r)
    while carry > 0:
        carry, r = divmod(carry, radix)
        out.append(r)
    if carry < 0:
        raise NegativeValue("column vector has a negative value")
    if counter is not None:
        counter.digit_adds += adds
    out.reverse()
    if width is None:
        i = 0
        while i < len(out) - 1 and out[i] == 0:
            i += 1
        return out[i:]
    if len(out) < width:
        return [0] * (width - len(out)) + out
    extra = len(out) - width
    if any(out[:extra]):
        raise ValueError(f"value does not fit in {width} digits")
    return out[extra:]


def normalize(
    raw: DigitSeq | Sequence[int],
    radix: int | None = None,
    counter: OpCount | None = None,
) -> DigitSeq:
    """Carry an uncarried digit vector into its canonical digit sequence.

    >>> normalize(DigitSeq(10, (4, 13, 28, 27, 18))).digits
    (5, 6, 0, 8, 8)
    """
    if isinstance(raw, DigitSeq):
        radix = raw.radix if radix is None else radix
        columns: Sequence[int] = raw.digits
    else:
        if radix is None:
            raise TypeError("radix is required for a plain column list")
        columns = list(raw)
    if not columns:
        raise EmptyInput("nothing to normalize")
    return DigitSeq(radix, tuple(carry_columns(columns, radix, counter)))


def signed_value(columns: Sequence[int], radix: int) -> int:
    total = 0
    for d in columns:
        total = total * radix + d
    return total


def carried_form(columns: Sequence[int], radix: int) -> tuple[int, ...]:
    """Carry ``columns`` keeping at least their width; a negative value comes out
    as the negated digits of its magnitude, e.g. ``(-1, 0, -1, 0, 0, 0)``."""
    value = signed_value(columns, radix)
    sign = -1 if value < 0 else 1
    mag = DigitSeq.from_int(abs(value), radix).digits
    mag = (0,) * (len(columns) - len(mag)) + mag
    return tuple(sign * d for d in mag)


def balanced_rewrite(x: DigitSeq) -> DigitSeq:
    """Rewrite every digit ``radix - 1`` as ``-1`` with a carry, so 29 becomes 3 1̄."""
    out = []
    carry = 0
    for d in reversed(x.digits):
        d += carry
        carry = 0
        if d == x.radix - 1:
            d, carry = -1, 1
        elif d == x.radix:
            d, carry = 0, 1
        out.append(d)
    if carry:
        out.append(carry)
    return DigitSeq(x.radix, tuple(reversed(out)))


def segment(x: DigitSeq, s: int, width: int | None = None) -> SegmentedNumber:
    """Group ``x`` into blocks of ``s`` digits, right to left.

    The leading block is zero-padded; ``width`` pads further on the left to a
    given number of blocks.
    """
    if s < 1:
        raise ValueError("segment length must be at least 1")
    digits = list(x.digits)
    short = -len(digits) % s
    digits = [0] * short + digits
    blocks = []
    for i in range(0, len(digits), s):
        b = 0
        for d in digits[i : i + s]:
            b = b * x.radix + d
        blocks.append(b)
    if width is not None and width > len(blocks):
        blocks = [0] * (width - len(blocks)) + blocks
    return SegmentedNumber(s, x.radix, tuple(blocks))


def flatten(x: SegmentedNumber) -> DigitSeq:
    """Expand every block into ``segment_length`` zero-padded base digits."""
    r, s = x.base_radix, x.segment_length
    out: list[int] = []
    for b in x.blocks:
        if not 0 <= b < x.block_radix:
            raise NonCanonicalBlock(f"block {b} is outside [0, {x.block_radix})")
        chunk = []
        for _ in range(s):
            b, d = divmod(b, r)
            chunk.append(d)
        out.extend(reversed(chunk))
    return DigitSeq(r, tuple(out))


def strip_zeros(x: DigitSeq) -> DigitSeq:
    i = 0
    while i < len(x.digits) - 1 and x.digits[i] == 0:
        i += 1
    return DigitSeq(x.radix, x.digits[i:]) if i else x


def expand_blocks(blocks: DigitSeq, base_radix: int, s: int) -> DigitSeq:
    """Turn a canonical block-radix result back into base-radix digits."""
    if s == 1:
        return blocks
    return strip_zeros(flatten(SegmentedNumber(s, base_radix, blocks.digits)))


def to_radix(x: DigitSeq, radix: int) -> DigitSeq:
    """Convert a canonical sequence to another radix using digit arithmetic only."""
    if radix == x.radix:
        return x
    acc = [0]
    for d in x.digits:
        cols = [c * x.radix for c in acc]
        cols[-1] += d
        acc = carry_columns(cols, radix)
    return DigitSeq(radix, tuple(acc))


def _digit_value(ch: str, radix: int) -> int:
    v = DIGIT_CHARS.find(ch.lower())
    if v < 0 or v >= radix:
        raise InvalidDigit(f"{ch!r} is not a digit in radix {radix}")
    return v


def _check_text_radix(radix: int) -> None:
    if not 2 <= radix <= MAX_TEXT_RADIX:
        raise UnsupportedRadix(f"text radix must be in [2, {MAX_TEXT_RADIX}], got {radix}")


def parse_signed(text: str, radix: int = 10) -> tuple[int, DigitSeq]:
    """Parse ``[+-]digits`` into ``(sign, magnitude)``; the sign of zero is +1."""
    _check_text_radix(radix)
    body = text.strip()
    sign = 1
    if body and body[0] in "+-":
        sign = -1 if body[0] == "-" else 1
        body = body[1:]
    body = body.replace("_", "")
    if not body:
        raise EmptyInput("no digits given")
    digits = [_digit_value(ch, radix) for ch in body]
    mag = normalize(DigitSeq(radix, tuple(digits)))
    if mag.digits == (0,):
        sign = 1
    return sign, mag


def parse_number(text: str, radix: int = 10) -> DigitSeq:
    """Parse an unsigned number; use :func:`parse_signed` when a sign may occur."""
    sign, mag = parse_signed(text, radix)
    if sign < 0:
        raise NegativeValue(f"{text!r} is negative")
    return mag


def parse_balanced(text: str, radix: int = 10) -> DigitSeq:
    """Parse text with overlined (``3̄``) or tilde-marked (``3~``) negative digits."""
    _check_text_radix(radix)
    digits: list[int] = []
    for ch in text.strip():
        if ch in (OVERLINE, "~"):
            if not digits or digits[-1] < 0:
                raise InvalidDigit(f"stray negation mark in {text!r}")
            digits[-1] = -digits[-1]
        else:
            digits.append(_digit_value(ch, radix))
    if not digits:
        raise EmptyInput("no digits given")
    return DigitSeq(radix, tuple(digits))


def _negate_text(text: str, notation: Notation) -> str:
    if notation is Notation.UNICODE:
        return "".join(ch + OVERLINE for ch in text)
    return text + "~"


def render_balanced(x: DigitSeq, notation: Notation = Notation.UNICODE) -> BalancedRendering:
    """Render digits with negative ones overlined, e.g. ``[6, -6, 3]`` as ``66̄3``."""
    _check_text_radix(x.radix)
    parts = []
    for d in x.digits:
        if abs(d) >= x.radix:
            raise DigitOutOfRange(f"digit {d} does not fit radix {x.radix}")
        ch = DIGIT_CHARS[abs(d)]
        parts.append(_negate_text(ch, notation) if d < 0 else ch)
    return BalancedRendering("".join(parts), Notation(notation))


def render_columns(
    values: Iterable[int], notation: Notation = Notation.UNICODE, width: int = 0
) -> str:
    """Render a column tuple such as ``(2,3,1̄,3,2,6)``; ``width`` zero-pads entries."""
    parts = []
    for v in values:
        body = str(abs(v)).rjust(width, "0")
        parts.append(_negate_text(body, notation) if v < 0 else body)
    return "(" + ",".join(parts) + ")"


def to_text(x: DigitSeq) -> str:
    """Plain digit string for in-range digits and radix <= 36, tuple form otherwise."""
    if x.radix <= MAX_TEXT_RADIX and all(0 <= d < x.radix for d in x.digits):
        return "".join(DIGIT_CHARS[d] for d in x.digits)
    return render_columns(x.digits)
