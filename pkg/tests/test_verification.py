"""Tests for the verify-all check registry."""

from __future__ import annotations

from pathlib import Path
import sys

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from hadamard_lab import verification
from hadamard_lab.cli import main
from hadamard_lab.errors import ConsistencyError
from hadamard_lab.verification import CHECKS, run_verification


def test_registry_names() -> None:
    assert len(CHECKS) == 14
    assert "product table" in CHECKS
    assert "class equality sweep" in CHECKS


def test_selected_checks_pass() -> None:
    report = run_verification(["product table", "coin relations", "worked Ξ examples"])
    assert report.passed
    assert [check.name for check in report.checks] == [
        "product table",
        "coin relations",
        "worked Ξ examples",
    ]


def test_library_error_becomes_failed_check(monkeypatch) -> None:
    def broken() -> tuple[bool, str]:
        raise ConsistencyError("A_3 is not trace-free symmetric")

    monkeypatch.setitem(verification.CHECKS, "coefficient table", broken)
    report = run_verification(["coefficient table"])
    assert not report.passed
    assert report.checks[0].detail == "A_3 is not trace-free symmetric"


@pytest.mark.slow
def test_verify_all_passes(capsys) -> None:
    assert main(["verify-all"]) == 0
    out = capsys.readouterr().out
    assert '"passed": true' in out
