"""The acceptance gate: one test per criterion, every check exact.

Each test prints its own PASS/FAIL line so the suite doubles as a manifest;
``weylbox accept`` runs the same criteria from the command line.
"""

import pytest

from weylbox.acceptance import CRITERIA, format_result, run_criterion


@pytest.mark.parametrize("key", [key for key, _ in CRITERIA])
def test_criterion(key):
    result = run_criterion(key)
    print(format_result(result))
    assert result.passed, result.detail
