"""Tests for the expectation coefficients a_n, b_n."""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
import sys

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from hadamard_lab.engine import QubitState, distribution, evolve, early_expectations
from hadamard_lab.moments import (
    REFERENCE_COEFFICIENTS,
    conjecture_check,
    expectation_form,
    table_check,
)
from hadamard_lab.symmetry import exact_test_states, random_states


def test_reference_table_reproduced() -> None:
    rows = table_check()
    assert len(rows) == 10
    assert all(row.passed for row in rows)


@pytest.mark.parametrize("n", [3, 8, 10])
def test_single_coefficients(n: int) -> None:
    form = expectation_form(n)
    assert (form.a, form.b) == REFERENCE_COEFFICIENTS[n]


def test_linear_form_matches_engine_mean() -> None:
    for n in range(1, 9):
        form = expectation_form(n)
        for phi in exact_test_states():
            assert form.evaluate(phi) == distribution(evolve(phi, n)).expectation()


def test_linear_form_matches_early_closed_forms() -> None:
    for phi in exact_test_states():
        closed = early_expectations(phi)
        for n in (1, 2, 3):
            assert expectation_form(n).evaluate(phi) == closed[n]


def test_linear_form_on_float_states() -> None:
    form = expectation_form(6)
    for phi in random_states(4, seed=11):
        assert form.evaluate(phi) == pytest.approx(distribution(evolve(phi, 6)).expectation(), abs=1e-12)


def test_to_dict_renders_rationals() -> None:
    assert expectation_form(9).to_dict() == {"n": 9, "a": "293/128", "b": "25/8"}


def test_conjecture_evidence() -> None:
    report = conjecture_check(20)
    assert report.passed
    assert len(report.rows) == 20
    first = report.rows[0]
    assert first.a_n == 0
    assert first.b_next == Fraction(1)


def test_conjecture_rejects_empty_range() -> None:
    with pytest.raises(ValueError):
        conjecture_check(0)


def test_evaluate_uses_both_invariants() -> None:
    phi = QubitState.from_values(0, 1)
    form = expectation_form(3)
    # a_3 = 1/2, |α|²−|β|² = −1, αβ̄+ᾱβ = 0
    assert form.evaluate(phi) == Fraction(1, 2)
