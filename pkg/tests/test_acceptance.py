"""The fourteen acceptance criteria, one test each.

Every test prints a single PASS/FAIL line (visible with ``pytest -s`` or in
the -v log) and asserts the real outcome; nothing is relaxed.
"""

from __future__ import annotations

import json

import pytest

from twistrep.suite import CRITERIA, run_criterion

from conftest import ACCEPTANCE_LINES


@pytest.mark.parametrize("num", sorted(CRITERIA))
def test_criterion(num):
    res = run_criterion(num)
    status = "PASS" if res["passed"] else "FAIL"
    line = f"criterion {num:2d}: {status}  {res['title']}  ({res['seconds']:.1f}s)"
    ACCEPTANCE_LINES.append(line)
    print("\n" + line)
    if not res["passed"]:
        print(json.dumps(res["details"], indent=1, default=str))
    assert res["passed"], json.dumps(res["details"], default=str)
