"""Acceptance criteria 1-11, one line of PASS/FAIL output per criterion.

Criterion 7 includes the odd-s branch of the hypersurface family with the
reduction exactly as displayed, ``(z_2..z_d, z_{d+1}^t)`` with ``s = 2t + 1``.
That ideal is not inside ``I`` (and is the unit ideal for s = 1), so the
criterion is red by construction; it is an expected failure here and the
corrected reduction is checked separately.
"""

import pytest

from ulrich_kit.acceptance import CRITERIA, run_criterion

_results = {}


def _result(n):
    if n not in _results:
        _results[n] = run_criterion(n)
    return _results[n]


def _report(capsys, r):
    with capsys.disabled():
        print("\n" + r.line() + " (%.1fs)" % r.seconds)
        for d in r.details:
            if d.startswith("FAIL"):
                print("    " + d)


@pytest.mark.parametrize("n", [n for n, _, _ in CRITERIA if n != 7])
def test_criterion(n, capsys):
    r = _result(n)
    _report(capsys, r)
    assert r.ok, "\n".join(r.details)


@pytest.mark.xfail(strict=True, reason="displayed odd-s reduction is not contained in I")
def test_criterion_7(capsys):
    r = _result(7)
    _report(capsys, r)
    assert r.ok


def test_criterion_7_only_fails_on_displayed_reduction():
    r = _result(7)
    failing = [d for d in r.details if d.startswith("FAIL")]
    assert failing and all("as displayed" in d for d in failing)
    assert sum(d.startswith("ok") for d in r.details) >= 5


def test_total_runtime_budget():
    total = sum(_result(n).seconds for n, _, _ in CRITERIA)
    assert total < 300
