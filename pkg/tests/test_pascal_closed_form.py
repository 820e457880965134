"""Tests for the Ξ(l, m) closed form and the word oracle."""

from __future__ import annotations

from pathlib import Path
import sys

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from hadamard_lab.core.matrices import coin_constant
from hadamard_lab.errors import EmptyWordError, OracleCapError
from hadamard_lab.pascal import coefficients, word_product, words, xi_closed, xi_oracle


@pytest.mark.parametrize(
    ("l", "m", "weights"),
    [
        (4, 0, (1, 0, 0, 0)),
        (3, 1, (2, 0, 1, 1)),
        (2, 2, (-1, 1, 0, 0)),
        (1, 3, (0, -2, 1, 1)),
        (0, 4, (0, -1, 0, 0)),
    ],
)
def test_worked_decompositions(l: int, m: int, weights: tuple[int, int, int, int]) -> None:
    decomposition = coefficients(l, m)
    assert decomposition.integer_weights() == weights
    assert decomposition.matrix() == xi_closed(l, m)


def test_single_letter_words() -> None:
    assert xi_closed(1, 0) == coin_constant("P")
    assert xi_closed(0, 1) == coin_constant("Q")
    assert xi_oracle(1, 1) == coin_constant("P") @ coin_constant("Q") + coin_constant(
        "Q"
    ) @ coin_constant("P")


def test_closed_form_matches_oracle_up_to_ten_letters() -> None:
    for n in range(1, 11):
        for l in range(n + 1):
            assert xi_closed(l, n - l) == xi_oracle(l, n - l), (l, n - l)


def test_coefficients_match_closed_form_with_r_equal_s() -> None:
    for n in range(1, 13):
        for l in range(n + 1):
            decomposition = coefficients(l, n - l)
            assert decomposition.r == decomposition.s
            assert decomposition.matrix() == xi_closed(l, n - l)


def test_decomposition_metadata() -> None:
    decomposition = coefficients(3, 1)
    assert decomposition.n == 4
    assert decomposition.site == -2
    assert decomposition.to_dict()["r"] == str(decomposition.r)


def test_empty_word_is_rejected() -> None:
    with pytest.raises(EmptyWordError):
        xi_closed(0, 0)
    with pytest.raises(EmptyWordError):
        coefficients(0, 0)
    with pytest.raises(EmptyWordError):
        xi_oracle(0, 0)
    with pytest.raises(EmptyWordError):
        word_product("")


def test_negative_counts_are_rejected() -> None:
    with pytest.raises(ValueError):
        xi_closed(-1, 2)


def test_oracle_refuses_long_words() -> None:
    with pytest.raises(OracleCapError):
        xi_oracle(9, 9)
    with pytest.raises(OracleCapError):
        xi_oracle(3, 2, cap=4)


def test_closed_form_runs_beyond_the_oracle_cap() -> None:
    assert xi_closed(30, 30).is_real()


def test_word_enumeration() -> None:
    assert words(2, 1) == ["QPP", "PQP", "PPQ"]
    assert len(words(4, 3)) == 35
    assert word_product("PQ") == coin_constant("R").scaled(1)
