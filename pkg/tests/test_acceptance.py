"""Acceptance gate: every documented desk-check criterion, run exactly and
reported one line per criterion.

Each test prints the criterion's pass/fail line before asserting, so a full
``pytest -v -s tests/test_acceptance.py`` run shows the complete scoreboard
even when a criterion fails.  Nothing here is approximate: all comparisons
inside the criteria are exact equality in the appropriate coefficient field.
"""

import subprocess
import sys

import pytest

from hlvir import selftest

_IDS = [fn.__name__ for fn in selftest.CRITERIA]


@pytest.mark.parametrize("criterion", selftest.CRITERIA, ids=_IDS)
def test_criterion(criterion):
    result = criterion()
    print(result.line())
    assert result.passed, result.line()


def test_criterion_12_full_suite_exits_clean():
    """The packaged selftest command must run the whole desk suite and exit 0
    within its time budget."""
    proc = subprocess.run(
        [sys.executable, "-m", "hlvir", "selftest", "--suite", "desk"],
        capture_output=True, text=True, timeout=900)
    print(proc.stdout.rstrip())
    tail = proc.stdout.strip().splitlines()[-1] if proc.stdout.strip() else ""
    assert proc.returncode == 0, f"selftest exited {proc.returncode}: {tail}"
