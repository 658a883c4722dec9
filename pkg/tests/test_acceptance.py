"""Acceptance criteria 1-12, full field set, exact checks.

Each test prints one PASS/FAIL line (shown even without ``-s``).
"""

import pytest

from redeimaps.selftest import CRITERIA


@pytest.mark.parametrize("num,name,check", CRITERIA, ids=[f"c{n:02d}-{name.replace(' ', '-')}" for n, name, _ in CRITERIA])
def test_criterion(num, name, check, capsys):
    try:
        detail = check(False)
    except AssertionError as exc:
        with capsys.disabled():
            print(f"\nFAIL criterion {num:2d} {name}: {exc}")
        raise
    with capsys.disabled():
        print(f"\nPASS criterion {num:2d} {name}: {detail}")
