"""Tests for the limit-distribution moments."""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
import sys

import numpy as np
import pytest
from scipy import integrate

sys.path.insert(0, str(Path(__file__).parent.parent))

from hadamard_lab.errors import OddMomentError, PiCancellationError
from hadamard_lab.moments import (
    PiMultiple,
    QSqrt2,
    j_recursion,
    limit_density,
    limit_moment,
    moment_quadrature,
)
from hadamard_lab.moments.limit import EDGE, J_ZERO


def test_second_moment_is_exact() -> None:
    assert limit_moment(2).value == QSqrt2(Fraction(1), Fraction(-1, 2))
    assert float(limit_moment(2)) == pytest.approx(1 - 2**-0.5)


def test_zeroth_and_odd_moments() -> None:
    assert limit_moment(0).value == QSqrt2(Fraction(1), Fraction(0))
    assert limit_moment(5).value.is_zero()
    with pytest.raises(ValueError):
        limit_moment(-2)


def test_moments_decrease_towards_zero() -> None:
    values = [float(limit_moment(m)) for m in range(2, 30, 2)]
    assert all(later < earlier for earlier, later in zip(values, values[1:]))
    # Support is (−1/√2, 1/√2), so E(Z^2k) < 2^−k.
    assert all(value < 2.0 ** -(k + 1) for k, value in enumerate(values))


def test_density_integrates_to_one() -> None:
    assert limit_density(0.0) == pytest.approx(1 / np.pi)
    assert limit_density(0.8) == 0.0
    total, _ = integrate.quad(limit_density, -EDGE, EDGE, limit=200)
    assert total == pytest.approx(1.0, abs=1e-6)


@pytest.mark.parametrize("method", ["theta", "jacobi"])
def test_quadrature_matches_closed_form(method: str) -> None:
    for m in range(0, 15, 2):
        assert moment_quadrature(m, method) == pytest.approx(float(limit_moment(m)), abs=1e-10)


def test_quadrature_rejects_odd_orders_and_unknown_methods() -> None:
    with pytest.raises(OddMomentError):
        moment_quadrature(3)
    with pytest.raises(ValueError):
        moment_quadrature(2, method="simpson")


def test_j_recursion_first_terms() -> None:
    report = j_recursion(15)
    assert report.passed
    assert report.rows[0].j == J_ZERO
    assert report.rows[1].j.coefficient == QSqrt2(Fraction(-1, 4), Fraction(1, 4))
    assert report.rows[1].moment == limit_moment(2).value


def test_pi_must_cancel() -> None:
    with pytest.raises(PiCancellationError):
        J_ZERO.cancel()
    with pytest.raises(PiCancellationError):
        J_ZERO + PiMultiple(QSqrt2(Fraction(1)), pi_power=0)
    assert J_ZERO.over_pi().cancel() == QSqrt2(Fraction(0), Fraction(1, 4))


def test_qsqrt2_arithmetic() -> None:
    root = QSqrt2(Fraction(0), Fraction(1))
    assert root * root == QSqrt2(Fraction(2))
    assert (QSqrt2(Fraction(1), Fraction(1)) - root) == QSqrt2(Fraction(1))
    assert limit_moment(4).value.to_dict() == {"r0": "1", "r1": "-5/8"}
