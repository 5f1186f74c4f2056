"""Rewrite tests/data/golden from the command-line cases. Run: python3 tests/regen_golden.py"""
import contextlib
import io
import os
import sys
from pathlib import Path

HERE = Path(__file__).parent
sys.path.insert(0, str(HERE))

from cli_cases import CASES  # noqa: E402
from liemoduli.cli import main  # noqa: E402

INPUTS = HERE / "data" / "inputs"
GOLDEN = HERE / "data" / "golden"


def capture(argv):
    out, err = io.StringIO(), io.StringIO()
    cwd = os.getcwd()
    os.chdir(INPUTS)
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            status = main(argv)
    finally:
        os.chdir(cwd)
    return status, out.getvalue(), err.getvalue()


def render(status, out, err):
    return f"exit: {status}\n--- stdout\n{out}--- stderr\n{err}"


if __name__ == "__main__":
    GOLDEN.mkdir(parents=True, exist_ok=True)
    for name, argv, expected in CASES:
        status, out, err = capture(argv)
        if status != expected:
            print(f"{name}: exit {status}, expected {expected}", file=sys.stderr)
        (GOLDEN / f"{name}.txt").write_text(render(status, out, err), encoding="utf-8")
    print(f"wrote {len(CASES)} golden files to {GOLDEN}")
