"""The worked examples, as named traces.

Each entry rebuilds its trace from scratch, so the frozen renderings in the
test suite double as regression checks for every method.
"""

from __future__ import annotations

from typing import Callable

from .digits import DigitSeq, parse_number
from .trace import (
    Trace,
    trace_binary,
    trace_plum,
    trace_recursive,
    trace_schoolbook,
    trace_vertical,
)

MISPRINT_4657 = (
    "known misprint: the subtraction line of this example is often printed as "
    "subtracting K=(0,0,1,5,0,4,1,0), which is the tare of 6789 x 6789; the "
    "subtraction actually uses this example's own tare (0,0,8,10,6,4\u0305,0) = 90560, "
    "recomputed here from the difference products"
)


def _d(text: str, radix: int = 10) -> DigitSeq:
    return parse_number(text, radix)


_B1, _B2 = "111101", "101011"

EXAMPLES: dict[str, Callable[[], Trace]] = {
    "123x456-schoolbook": lambda: trace_schoolbook(_d("123"), _d("456")),
    "2976x2924-schoolbook-s2": lambda: trace_schoolbook(_d("2976"), _d("2924"), 2),
    "386x47-plum": lambda: trace_plum(_d("386"), _d("47")),
    "456x789-plum": lambda: trace_plum(_d("456"), _d("789")),
    "67x89-vertical": lambda: trace_vertical(_d("67"), _d("89")),
    "677x338-vertical": lambda: trace_vertical(_d("677"), _d("338")),
    "6789x6789-vertical": lambda: trace_vertical(_d("6789"), _d("6789")),
    "4657x86-vertical": lambda: trace_vertical(_d("4657"), _d("86")).with_notes(MISPRINT_4657),
    "268x47-uncarried": lambda: trace_vertical(DigitSeq(10, (24, 28)), _d("47")),
    "29x86-rewrite": lambda: trace_vertical(_d("29"), _d("86"), rewrite=True),
    "6162x8384-vertical-s2": lambda: trace_vertical(_d("6162"), _d("8384"), 2),
    "binary-identity": lambda: trace_binary(_d(_B1, 2), _d(_B2, 2)),
    "binary-vertical-s2": lambda: trace_vertical(_d(_B1, 2), _d(_B2, 2), 2),
    "binary-vertical-s3": lambda: trace_vertical(_d(_B1, 2), _d(_B2, 2), 3),
    "binary-recursive-k2": lambda: trace_recursive(_d(_B1, 2), _d(_B2, 2), 2, 1),
    "binary-recursive-k3": lambda: trace_recursive(_d(_B1, 2), _d(_B2, 2), 3, 1),
}


def worked_example(name: str) -> Trace:
    try:
        return EXAMPLES[name]()
    except KeyError:
        raise KeyError(f"unknown example {name!r}; known: {', '.join(EXAMPLES)}") from None
