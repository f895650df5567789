"""One entry point for every multiplier, selected by name."""

from __future__ import annotations

from enum import Enum

from .crossmul import multiply_schoolbook
from .digits import DigitSeq, Operand
from .opcount import OpCount
from .plum import multiply_plum
from .vertical import (
    DEFAULT_THRESHOLD,
    multiply_binary_identity,
    multiply_recursive,
    multiply_vertical,
)


class Algorithm(str, Enum):
    SCHOOLBOOK = "schoolbook"
    VERTICAL = "vertical"
    RECURSIVE = "recursive"
    BINARY = "binary"
    PLUM = "plum"


def multiply(
    algorithm: Algorithm | str,
    a: Operand,
    b: Operand,
    k: int = 2,
    threshold: int = DEFAULT_THRESHOLD,
    counter: OpCount | None = None,
) -> DigitSeq:
    """Multiply with the named algorithm; ``k`` and ``threshold`` only affect ``recursive``."""
    algorithm = Algorithm(algorithm)
    if algorithm is Algorithm.SCHOOLBOOK:
        return multiply_schoolbook(a, b, counter)
    if algorithm is Algorithm.VERTICAL:
        return multiply_vertical(a, b, counter)
    if algorithm is Algorithm.RECURSIVE:
        return multiply_recursive(a, b, k, threshold, counter)
    if algorithm is Algorithm.BINARY:
        return multiply_binary_identity(a, b, counter)
    return multiply_plum(a, b, counter)
