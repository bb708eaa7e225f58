"""Acceptance criteria, one test each; each prints a single PASS/FAIL line.

Run directly (``python tests/test_acceptance.py``) for just the summary lines.
"""

import subprocess
import sys
import time

import pytest

from quiverpurity import checks

SEED = checks.DEFAULT_SEED
LIMITS = {"1": 60.0, "7": 60.0}


def _line(key: str, check: checks.Check, seconds: float | None = None) -> str:
    details = " ".join(line.split(".", 1)[1] for line in check.lines()[1:] if ".observed=" not in line)
    timing = f" ({seconds:.1f}s)" if seconds is not None else ""
    return f"criterion {key}: {'PASS' if check.passed else 'FAIL'} {details}{timing}"


def _report(capsys, text: str) -> None:
    with capsys.disabled():
        print("\n" + text)


@pytest.mark.parametrize("key", list(checks.ACCEPTANCE))
def test_criterion(key, capsys):
    start = time.perf_counter()
    check = checks.ACCEPTANCE[key](SEED)
    elapsed = time.perf_counter() - start
    _report(capsys, _line(key, check, elapsed))
    assert check.passed, "\n".join(check.lines())
    if key in LIMITS:
        assert elapsed <= LIMITS[key]


def test_criterion_3_observed_law(capsys):
    """The mapping the constructions actually satisfy, reported next to criterion 3."""
    check = checks.crit3_corrected(SEED)
    _report(capsys, _line("3 (observed law)", check))
    assert check.passed


def _verify_bytes() -> bytes:
    cmd = [sys.executable, "-m", "quiverpurity", "verify", "--seed", "42", "--format", "machine"]
    return subprocess.run(cmd, capture_output=True, check=False).stdout


def test_criterion_10_determinism(capsys):
    first, second = _verify_bytes(), _verify_bytes()
    same = first == second and len(first) > 0
    _report(capsys, f"criterion 10: {'PASS' if same else 'FAIL'} bytes={len(first)} identical={same}")
    assert same


if __name__ == "__main__":
    for key, fn in checks.ACCEPTANCE.items():
        print(_line(key, fn(SEED)))
    print(_line("3 (observed law)", checks.crit3_corrected(SEED)))
    same = _verify_bytes() == _verify_bytes()
    print(f"criterion 10: {'PASS' if same else 'FAIL'} identical={same}")
