"""Arbitrary-radix multiplication by cross sums, vertical products with a tare,
and plum-blossom digit products, with step traces and operation counting."""

from .algorithms import Algorithm, multiply
from .crossmul import Window, cross_sum, multiply_schoolbook, raw_columns, window_bounds, windows
from .digits import (
    DigitSeq,
    Notation,
    SegmentedNumber,
    balanced_rewrite,
    flatten,
    normalize,
    parse_balanced,
    parse_number,
    parse_signed,
    render_balanced,
    segment,
    to_radix,
)
from .errors import (
    DigitOutOfRange,
    EmptyInput,
    InsufficientData,
    InvalidDigit,
    LengthMismatch,
    NegativeValue,
    NonCanonicalBlock,
    OrderViolation,
    RadixNotBinary,
    UnsupportedRadix,
    VertmulError,
)
from .opcount import OpCount
from .plum import multiply_plum, plum, plum_carry, plum_columns, plum_table, scissor
from .trace import Trace, TraceStep, render_trace
from .vertical import (
    TareVec,
    VerticalVec,
    multiply_binary_identity,
    multiply_recursive,
    multiply_vertical,
    running_sums,
    symmetric_difference,
    tare,
    vertical_products,
)

__version__ = "0.1.0"
