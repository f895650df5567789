"""Regenerate tests/golden from the worked-example corpus.

Run by hand only after checking a diff; the golden tests compare against
the frozen files, never against this script.
"""

from pathlib import Path

from vertmul.corpus import EXAMPLES, worked_example
from vertmul.trace import render_trace

GOLDEN = Path(__file__).parent / "golden"

if __name__ == "__main__":
    for name in EXAMPLES:
        trace = worked_example(name)
        (GOLDEN / f"{name}.txt").write_text(render_trace(trace, "text"), encoding="utf-8")
    for name in ("67x89-vertical", "binary-identity"):
        (GOLDEN / f"{name}.json").write_text(render_trace(worked_example(name), "json"), encoding="utf-8")
    (GOLDEN / "67x89-vertical.md").write_text(render_trace(worked_example("67x89-vertical"), "markdown"), encoding="utf-8")
