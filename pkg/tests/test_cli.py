import io
import json

import pytest

from vertmul.cli import parse_grid, run
from vertmul.corpus import EXAMPLES


def call(*argv, stdin=""):
    out = io.StringIO()
    code = run(list(argv), stdout=out, stdin=io.StringIO(stdin))
    return code, out.getvalue()


def test_multiply_examples():
    assert call("multiply", "--algo", "vertical", "6789", "6789") == (0, "46090521\n")
    assert call("multiply", "--algo", "binary", "--radix", "2", "111101", "101011") == (0, "101000111111\n")
    assert call("multiply", "6789", "6789") == (0, "46090521\n")


GOLDEN_PAIRS = [
    ("123", "456"), ("2976", "2924"), ("386", "47"), ("456", "789"), ("67", "89"),
    ("677", "338"), ("6789", "6789"), ("4657", "86"), ("268", "47"), ("29", "86"), ("6162", "8384"),
]


@pytest.mark.parametrize("algo", ["schoolbook", "vertical", "recursive", "plum"])
@pytest.mark.parametrize("a,b", GOLDEN_PAIRS)
def test_every_algo_on_golden_pairs(algo, a, b):
    assert call("multiply", "--algo", algo, a, b) == (0, f"{int(a) * int(b)}\n")


@pytest.mark.parametrize("algo", ["schoolbook", "vertical", "recursive", "binary"])
def test_binary_pair(algo):
    assert call("multiply", "--radix", "2", "--algo", algo, "111101", "101011") == (0, "101000111111\n")


def test_segment_and_recursion_flags():
    code, out = call("multiply", "--segment", "3", "--algo", "recursive", "-k", "3", "--threshold", "1",
                     "123456789123", "987654321")
    assert (code, out) == (0, f"{123456789123 * 987654321}\n")


def test_signs_prefixes_and_stdin():
    assert call("multiply", "--", "-12", "34") == (0, "-408\n")
    assert call("multiply", "--", "-12", "-34") == (0, "408\n")
    assert call("multiply", "--", "-12", "0") == (0, "0\n")
    assert call("multiply", "0x1f", "0x2") == (0, "3e\n")
    assert call("multiply", "--radix", "2", "0b11", "0b11") == (0, "1001\n")
    assert call("multiply", "-", "-", stdin="123\n456\n") == (0, "56088\n")
    code, out = call("multiply", "--format", "json", "12", "12")
    assert json.loads(out)["product"] == "144"


def test_huge_operands():
    a, b = "9" * 400, "8" * 350
    assert call("multiply", a, b) == (0, f"{int(a) * int(b)}\n")


@pytest.mark.parametrize("argv", [
    ("multiply", "1"),
    ("multiply", "12", "3z"),
    ("multiply", "--algo", "binary", "12", "3"),
    ("multiply", "--algo", "plum", "--radix", "2", "1", "1"),
    ("multiply", "--radix", "2", "0x1", "1"),
    ("multiply", "-", "-"),
    ("trace", "--", "-1", "2"),
    ("trace", "--example", "nope"),
    ("table", "scissor"),
    ("verify", "--cases", "-1"),
    ("bench", "--grid", "2^3..3^4"),
    ("bench", "--grid", "x"),
    ("frobnicate",),
    (),
])
def test_usage_errors(argv):
    assert call(*argv)[0] == 2


def test_trace_command():
    code, out = call("trace", "67", "89")
    assert code == 0 and "tare: 10\n" in out and "result: 5963\n" in out
    code, out = call("trace", "--algo", "binary", "--radix", "2", "111101", "101011")
    assert "result: 101000111111" in out
    code, out = call("trace", "--rewrite", "29", "86")
    assert "(3,1̅) x (8,6)" in out
    code, out = call("trace", "--algo", "plum", "--format", "json", "386", "47")
    assert json.loads(out)["steps"][0]["payload"] == [17, 12, -6, 2]
    for algo in ("schoolbook", "recursive"):
        assert "result: 56088" in call("trace", "--algo", algo, "123", "456")[1]


@pytest.mark.parametrize("name", sorted(EXAMPLES))
def test_trace_examples(name):
    code, out = call("trace", "--example", name)
    assert code == 0 and out.startswith(("vertical", "plum", "schoolbook", "binary", "recursive"))


def test_table_plum():
    code, out = call("table", "plum")
    assert code == 0
    assert "printed table: 0 cells differ" in out
    assert "carry rule: 0 of 45 pairs disagree" in out
    obj = json.loads(call("table", "plum", "--format", "json")[1])
    assert obj["plum"][0][3] == -6 and obj["printed_diff"] == [] and obj["theorem_disagreements"] == []
    assert len(call("table", "plum", "--format", "csv")[1].splitlines()) == 82
    assert "| 5 |" in call("table", "plum", "--format", "markdown")[1]


def test_verify():
    assert call("verify", "--cases", "0") == (0, "0 cases (seed 0, max digits 32)\n")
    code, out = call("verify", "--cases", "30", "--seed", "5", "--max-digits", "40")
    assert code == 0 and "failed" in out and "FAIL" not in out
    assert out == call("verify", "--cases", "30", "--seed", "5", "--max-digits", "40")[1]
    assert call("verify", "--cases", "20", "--radix", "16")[0] == 0


def test_bench(tmp_path):
    code, out = call("bench", "--grid", "2^2..2^5", "--algo", "recursive", "--threshold", "1", "--trials", "1")
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("algorithm,n,k") and len(lines) == 5
    path = tmp_path / "b.json"
    code, _ = call("bench", "--grid", "8,16", "--format", "json", "--trials", "0", "--output", str(path))
    assert code == 0 and len(json.loads(path.read_text())) == 2


def test_parse_grid():
    assert parse_grid("2^6..2^8") == [64, 128, 256]
    assert parse_grid("3,9,27") == [3, 9, 27]


def test_output_file(tmp_path):
    path = tmp_path / "p.txt"
    assert call("multiply", "--output", str(path), "12", "12") == (0, "")
    assert path.read_text(encoding="utf-8") == "144\n"
