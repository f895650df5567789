import csv
import io
import json
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import model_closed_form
from vertmul.algorithms import multiply
from vertmul.bench import (
    CSV_COLUMNS,
    Algorithm,
    BenchRecord,
    OpCount,
    count_ops,
    dumps,
    export,
    fit_exponent,
    implementation_steps,
    model_steps,
    recursion_residual,
    run_grid,
)
from vertmul.digits import DigitSeq, parse_number
from vertmul.errors import InsufficientData


def test_count_examples():
    one = parse_number("7")
    assert count_ops("schoolbook", one, one) == OpCount(1, 0)
    for n in (2, 5, 9):
        a = DigitSeq(10, (9,) * n)
        assert count_ops("schoolbook", a, a).digit_mults == n * n
    assert count_ops("recursive", parse_number("11", 2), parse_number("10", 2), 2, 1).digit_mults == 3


def test_counts_are_deterministic():
    a, b = parse_number("6789"), parse_number("4657")
    for algo in Algorithm:
        if algo is Algorithm.BINARY:
            x, y = parse_number("111101", 2), parse_number("101011", 2)
        else:
            x, y = a, b
        assert count_ops(algo, x, y, 2, 1) == count_ops(algo, x, y, 2, 1)


def test_model_matches_closed_forms():
    for m in range(10):
        assert model_steps(2**m, 2) == model_closed_form(2**m, 2)
    for m in range(7):
        assert model_steps(3**m, 3) == model_closed_form(3**m, 3)
    assert model_steps(1, 4) == 1
    with pytest.raises(ValueError):
        model_steps(12, 2)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_model_residual_zero(k):
    for m in range(1, 6):
        assert recursion_residual(k**m, k, lambda n: model_steps(n, k)) == 0
    assert recursion_residual(27, 3, lambda n: model_steps(n, 3)) == Fraction(0)


def test_implementation_residuals_reported():
    res = [recursion_residual(n, 2, lambda m: implementation_steps("recursive", m, 2, 1)) for n in (16, 32, 64)]
    # the instrumented run pays for carries the model leaves out
    assert all(r.denominator == 1 for r in res)
    assert all(r > 0 for r in res)
    with pytest.raises(ValueError):
        recursion_residual(9, 2, lambda n: n)


def test_counter_completeness():
    rng = random.Random(1)
    for _ in range(30):
        a = DigitSeq.from_int(rng.randrange(1, 10**40), 10)
        b = DigitSeq.from_int(rng.randrange(1, 10**40), 10)
        for algo in (Algorithm.SCHOOLBOOK, Algorithm.VERTICAL, Algorithm.RECURSIVE, Algorithm.PLUM):
            c = OpCount()
            assert multiply(algo, a, b, 3, 2, c) == multiply(algo, a, b, 3, 2)
            assert c.digit_mults > 0


@given(st.lists(st.tuples(st.integers(0, 10**6), st.integers(0, 10**6)), min_size=1, max_size=8), st.randoms())
def test_merge_order_irrelevant(parts, rnd):
    counts = [OpCount(m, a) for m, a in parts]
    shuffled = counts[:]
    rnd.shuffle(shuffled)
    x, y = OpCount(), OpCount()
    for c in counts:
        x.merge(c)
    for c in shuffled:
        y.merge(c)
    assert x == y == sum(counts, OpCount())


@pytest.mark.parametrize("algo,k,sizes", [
    ("schoolbook", 2, [4, 8, 16, 32, 64]),
    ("recursive", 2, [4, 8, 16, 32, 64]),
    ("recursive", 3, [3, 9, 27, 81]),
    ("vertical", 2, [4, 8, 16, 32]),
])
def test_monotone_in_n(algo, k, sizes):
    totals = [r.counts.total for r in run_grid(algo, sizes, k, 1, trials=0)]
    assert totals == sorted(totals)


def test_fit_exponent_small_grid():
    records = run_grid("schoolbook", [16, 32, 64, 128], trials=0)
    assert abs(fit_exponent(records) - 2.0) < 0.05
    with pytest.raises(InsufficientData):
        fit_exponent(records[:3])
    with pytest.raises(ValueError):
        fit_exponent(records + run_grid("vertical", [8], trials=0))


def test_fit_exponent_exact_power():
    records = [BenchRecord(Algorithm.RECURSIVE, n, 2, 1, OpCount(n**3, 0)) for n in (2, 4, 8, 16)]
    assert fit_exponent(records) == pytest.approx(3.0)


def test_run_grid_times():
    (rec,) = run_grid("recursive", [32], 2, 1, trials=3)
    assert rec.trials == 3 and rec.wall_ns > 0


def test_export_csv(tmp_path):
    path = tmp_path / "empty.csv"
    export([], "csv", path)
    assert path.read_text() == ",".join(CSV_COLUMNS) + "\n"
    rec = BenchRecord(Algorithm.SCHOOLBOOK, 4, 2, 8, OpCount(16, 9), 1234, 9)
    export([rec], "csv", path)
    lines = path.read_text().splitlines()
    assert len(lines) == 2
    assert lines[1] == "schoolbook,4,2,8,16,9,1234,9"
    assert list(csv.DictReader(io.StringIO(path.read_text())))[0]["digit_mults"] == "16"


def test_export_json(tmp_path):
    recs = run_grid("recursive", [2, 4, 8, 16, 32, 64, 128, 256, 512, 1024], 2, 1, trials=0)
    path = tmp_path / "r.json"
    export(recs, "json", path)
    rows = json.loads(path.read_text())
    assert len(rows) == 10
    assert all(list(r) == list(CSV_COLUMNS) for r in rows)
    with pytest.raises(ValueError):
        dumps(recs, "xml")
