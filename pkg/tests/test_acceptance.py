"""One test per acceptance criterion; each prints a PASS/FAIL line."""

import pytest

from arrkit.corpus import CRITERIA, run_criterion

RESULTS = {}


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA], ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, capsys):
    res = run_criterion(number)
    RESULTS[number] = res
    with capsys.disabled():
        print("\n" + res.line())
        for c in res.checks:
            if not c.ok:
                print(f"    {c.name}: expected {c.expected!r}, got {c.got!r}")
    assert res.passed, res.line()
