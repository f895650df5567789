"""Digit-operation tallies shared by the instrumented multipliers."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass
class OpCount:
    """Number of digit multiplications and digit additions performed.

    A digit subtraction is tallied as an addition.  Instances are owned by a
    single run; concurrent runs keep private counters and combine them with
    ``+`` afterwards.
    """

    digit_mults: int = 0
    digit_adds: int = 0

    @property
    def total(self) -> int:
        return self.digit_mults + self.digit_adds

    def __add__(self, other: OpCount) -> OpCount:
        return OpCount(self.digit_mults + other.digit_mults, self.digit_adds + other.digit_adds)

    def merge(self, other: OpCount) -> None:
        self.digit_mults += other.digit_mults
        self.digit_adds += other.digit_adds
