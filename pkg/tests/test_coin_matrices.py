"""Tests for the coin matrices and the P/Q/R/S product table."""

from __future__ import annotations

from pathlib import Path
import sys

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from hadamard_lab.core.matrices import (
    COIN_NAMES,
    PRODUCT_TABLE,
    CoinMatrix,
    coin_constant,
    coin_mul,
    coin_relations,
    expected_product,
    verify_table,
)
from hadamard_lab.core.scalars import INV_SQRT2, ONE, ZERO, Backend, ComplexF
from hadamard_lab.errors import UnknownConstantError


def test_every_named_constant_resolves() -> None:
    for name in COIN_NAMES:
        assert isinstance(coin_constant(name), CoinMatrix)


def test_unknown_constant_raises_key_error() -> None:
    with pytest.raises(UnknownConstantError) as exc_info:
        coin_constant("X")
    assert isinstance(exc_info.value, KeyError)
    assert "X" in str(exc_info.value)


def test_hadamard_is_p_plus_q() -> None:
    H, P, Q = coin_constant("H"), coin_constant("P"), coin_constant("Q")
    assert H == P + Q
    assert H[1, 1] == -INV_SQRT2
    assert P[1, 0] == ZERO


def test_product_table_has_sixteen_passing_cells() -> None:
    report = verify_table()
    assert len(report.cells) == 16
    assert report.passed
    assert report.failures() == []


@pytest.mark.parametrize(
    ("row", "column", "expected"),
    [
        ("P", "Q", "R/√2"),
        ("Q", "Q", "-Q/√2"),
        ("R", "S", "-P/√2"),
        ("S", "R", "Q/√2"),
    ],
)
def test_product_cells_render_expected_value(row: str, column: str, expected: str) -> None:
    cell = next(c for c in verify_table().cells if (c.row, c.column) == (row, column))
    assert cell.expected == expected
    assert coin_constant(row) @ coin_constant(column) == expected_product(row, column)


def test_product_table_covers_every_ordered_pair() -> None:
    names = "PQRS"
    assert set(PRODUCT_TABLE) == {(r, c) for r in names for c in names}


def test_coin_relations_all_hold() -> None:
    results = coin_relations()
    assert len(results) == 15
    failed = [result.name for result in results if not result.passed]
    assert failed == []
    assert any(result.name == "JJ = -I" for result in results)


def test_adjoint_and_trace() -> None:
    J = coin_constant("J")
    assert J.adjoint() == J.transpose()
    assert J @ J.adjoint() == coin_constant("I")
    assert coin_constant("H").trace() == ZERO
    assert coin_constant("I").trace() == ONE + ONE


def test_apply_moves_amplitudes() -> None:
    P = coin_constant("P")
    assert P.apply((ONE, ZERO)) == (INV_SQRT2, ZERO)


def test_float_constants_match_exact() -> None:
    exact = coin_constant("H")
    floating = coin_constant("H", Backend.FLOAT)
    assert floating.backend is Backend.FLOAT
    assert isinstance(floating.a, ComplexF)
    for left, right in zip(exact.to_complex_rows(), floating.to_complex_rows()):
        assert left == pytest.approx(right)


def test_to_rows_uses_exact_text_form() -> None:
    assert coin_constant("P").to_rows() == [
        ["1+0i/√2^1", "1+0i/√2^1"],
        ["0+0i/√2^0", "0+0i/√2^0"],
    ]


def test_coin_mul_examples() -> None:
    P, Q, R = (coin_constant(name) for name in "PQR")
    assert coin_mul(P, Q) == R.scaled(1)
    assert coin_mul(coin_constant("I"), P) == P
    assert coin_mul(coin_constant("J"), coin_constant("J")) == -coin_constant("I")
