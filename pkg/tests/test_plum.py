import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import plum_by_definition
from vertmul.crossmul import multiply_schoolbook
from vertmul.digits import DigitSeq, parse_number
from vertmul.errors import DigitOutOfRange, OrderViolation, UnsupportedRadix
from vertmul.opcount import OpCount
from vertmul.plum import (
    PRINTED_TABLE,
    ScissorContext,
    complement,
    increment,
    multiply_plum,
    plum,
    plum_carry,
    plum_columns,
    plum_table,
    scissor,
    scissor_decompose,
    table_diff,
    theorem_carry,
    theorem_disagreements,
)

digits = st.integers(1, 9)


def test_plum_examples():
    assert plum(3, 7) == 1
    assert plum(7, 7) == -1
    assert plum(5, 8) == 0
    with pytest.raises(DigitOutOfRange):
        plum(0, 3)
    with pytest.raises(DigitOutOfRange):
        plum(3, 10)


def test_plum_carry_examples():
    assert plum_carry(7, 7) == 5
    assert plum_carry(1, 9) == 1
    assert plum_carry(9, 9) == 8
    with pytest.raises(DigitOutOfRange):
        plum_carry(0, 1)


def test_table_cells():
    table = plum_table()
    assert len(table) == 81
    assert table[1, 4].plum == -6
    assert table[2, 5].plum == 0
    assert table[5, 5].plum == -5
    assert table[3, 5].plum == -5


def test_table_exhaustive():
    for (a, b), e in plum_table().items():
        assert 10 * e.carry_j + e.plum == a * b
        assert -6 <= e.plum <= 3
        assert e.plum == plum_by_definition(a, b)


def test_printed_table_has_45_cells_and_agrees():
    assert sum(len(row) for row in PRINTED_TABLE.values()) == 45
    assert table_diff() == []


def test_theorem_agrees_on_all_pairs():
    assert theorem_disagreements() == []
    for a, b in itertools.combinations_with_replacement(range(1, 10), 2):
        assert theorem_carry(a, b) == plum_carry(a, b)


def test_other_reading_of_case_one_fails():
    # "a == 1 or (b == 9 and b - a >= 3)" is wrong for small a
    def other(a, b):
        if a == 1 or (b == 9 and b - a >= 3):
            return a
        return theorem_carry(a, b)

    bad = [(a, b) for a, b in itertools.combinations_with_replacement(range(1, 10), 2)
           if other(a, b) != (a * b - plum_by_definition(a, b)) // 10]
    assert bad == [(1, 1), (1, 2), (1, 3)]


@given(digits, digits)
def test_plum_properties(a, b):
    assert plum(a, b) == plum(b, a)
    assert 10 * plum_carry(a, b) + plum(a, b) == a * b


def test_scissor_examples():
    ten, hundred = ScissorContext(10), ScissorContext(100)
    assert increment(9, ten) == -1 and complement(9, ten) == 1
    assert increment(119, hundred) == 19
    assert increment(100, hundred) == 0
    assert scissor(3, 9, ten) == 7
    assert scissor(2, 97, hundred) == 94
    assert scissor(1, 57, hundred) == 57
    assert scissor_decompose(3, 9, ten) == (2, 7)
    assert scissor_decompose(2, 97, hundred) == (1, 94)
    assert scissor_decompose(1, 8, ten) == (0, 8)
    with pytest.raises(OrderViolation):
        scissor_decompose(9, 3, ten)
    with pytest.raises(ValueError):
        ScissorContext(50)


@given(st.integers(1, 10**6), st.integers(1, 10**6), st.integers(1, 6))
def test_scissor_properties(a, b, e):
    ctx = ScissorContext(10**e)
    assert increment(a, ctx) + complement(a, ctx) == 0
    assert scissor(a, b, ctx) == scissor(b, a, ctx)
    if a <= b:
        high, low = scissor_decompose(a, b, ctx)
        assert high * ctx.standard + low == a * b


def test_plum_columns_examples():
    assert plum_columns(parse_number("386"), parse_number("47")).digits == (17, 12, -6, 2)
    assert plum_columns(parse_number("456"), parse_number("789")).digits == (35, 9, 8, -2, 4)
    assert plum_columns(parse_number("61"), parse_number("83")).digits == (51, -4, 3)
    assert plum_columns(parse_number("62"), parse_number("84")).digits == (53, -10, 8)
    assert multiply_plum(parse_number("386"), parse_number("47")).value == 18142
    assert multiply_plum(parse_number("456"), parse_number("789")).value == 359784
    assert multiply_plum(parse_number("6"), parse_number("7")).value == 42
    with pytest.raises(UnsupportedRadix):
        plum_columns(parse_number("101", 2), parse_number("11", 2))


def test_plum_exhaustive_two_digits():
    nums = [10 * a + b for a in range(1, 10) for b in range(1, 10)]
    for x in nums:
        for y in nums:
            a, b = DigitSeq.from_int(x, 10), DigitSeq.from_int(y, 10)
            assert multiply_plum(a, b) == multiply_schoolbook(a, b)


def test_plum_random_three_four_digits():
    rng = random.Random(17)
    for _ in range(10_000):
        a = DigitSeq(10, tuple(rng.randint(1, 9) for _ in range(rng.randint(3, 4))))
        b = DigitSeq(10, tuple(rng.randint(1, 9) for _ in range(rng.randint(3, 4))))
        assert multiply_plum(a, b).value == a.value * b.value


@given(st.integers(0, 10**40), st.integers(0, 10**40))
def test_plum_with_zero_digits(x, y):
    a, b = DigitSeq.from_int(x, 10), DigitSeq.from_int(y, 10)
    assert multiply_plum(a, b).value == x * y
    assert multiply_plum(a, b, OpCount()).value == x * y
