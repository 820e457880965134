"""Tests for the exact and floating scalar backends."""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
import sys

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from hadamard_lab.core.scalars import (
    I_UNIT,
    INV_SQRT2,
    OMEGA,
    ONE,
    SQRT2,
    ZERO,
    Backend,
    ComplexF,
    DyadicGaussian,
    backend_of,
    dg_add,
    dg_mul,
    to_backend,
    values_agree,
)
from hadamard_lab.errors import BackendError, MixedParityError, NotRationalError, WalkLabError


def test_canonical_form_strips_common_powers_of_two() -> None:
    assert DyadicGaussian(2, 0, 2) == ONE
    assert DyadicGaussian(4, 2, 3) == DyadicGaussian(2, 1, 1)
    assert DyadicGaussian(0, 0, 7) == ZERO
    # One √2 in the denominator cannot be cleared by integer halving.
    assert DyadicGaussian(2, 0, 1).halfpow == 1


def test_negative_halfpow_is_rejected() -> None:
    with pytest.raises(ValueError):
        DyadicGaussian(1, 0, -1)


def test_instances_are_immutable() -> None:
    with pytest.raises(AttributeError):
        ONE.re = 2  # type: ignore[misc]


def test_inverse_sqrt2_squares_to_one_half() -> None:
    half = INV_SQRT2 * INV_SQRT2
    assert half == DyadicGaussian(1, 0, 2)
    assert half.to_fraction() == Fraction(1, 2)
    assert (SQRT2 * INV_SQRT2) == 1


def test_same_parity_addition_aligns_exponents() -> None:
    # 1 + 1/2 = 3/2
    total = ONE + DyadicGaussian(1, 0, 2)
    assert total.to_fraction() == Fraction(3, 2)
    assert (INV_SQRT2 + INV_SQRT2) == SQRT2


def test_mixed_parity_addition_raises() -> None:
    with pytest.raises(MixedParityError) as exc_info:
        ONE + INV_SQRT2
    assert isinstance(exc_info.value, ArithmeticError)
    assert isinstance(exc_info.value, WalkLabError)


def test_zero_absorbs_any_parity() -> None:
    assert ZERO + INV_SQRT2 == INV_SQRT2
    assert INV_SQRT2 - INV_SQRT2 == ZERO
    assert ONE + 0 == ONE
    assert 3 - ONE == DyadicGaussian(2, 0, 0)


def test_multiplication_and_imaginary_unit() -> None:
    assert I_UNIT * I_UNIT == -ONE
    assert ONE.times_i() == I_UNIT
    # ω² = i
    assert OMEGA * OMEGA == I_UNIT
    assert OMEGA * OMEGA.conjugate() == ONE


def test_abs2_is_exact() -> None:
    assert OMEGA.abs2() == 1
    assert DyadicGaussian(3, 4, 4).abs2() == Fraction(25, 16)
    assert INV_SQRT2.abs2() == Fraction(1, 2)


def test_to_fraction_requires_a_rational_value() -> None:
    with pytest.raises(NotRationalError):
        INV_SQRT2.to_fraction()
    with pytest.raises(NotRationalError):
        I_UNIT.to_fraction()
    assert ZERO.scaled(3).to_fraction() == 0


def test_scaled_multiplies_by_inverse_root_two() -> None:
    assert ONE.scaled(1) == INV_SQRT2
    assert ONE.scaled(4).to_fraction() == Fraction(1, 4)


def test_text_form_parses_back() -> None:
    value = DyadicGaussian(-3, 5, 3)
    assert str(value) == "-3+5i/√2^3"
    assert DyadicGaussian.parse(str(value)) == value
    assert DyadicGaussian.parse("1-1i/√2^1") == OMEGA.conjugate()
    with pytest.raises(ValueError):
        DyadicGaussian.parse("1/2")


def test_to_complex_matches_value() -> None:
    z = OMEGA.to_complex()
    assert z == pytest.approx(complex(2**-0.5, 2**-0.5))


def test_float_backend_shares_the_interface() -> None:
    z = ComplexF.from_complex(0.6 + 0.8j)
    assert z.abs2() == pytest.approx(1.0)
    assert (z * z.conjugate()).real_value() == pytest.approx(1.0)
    assert z.times_i().to_complex() == pytest.approx(-0.8 + 0.6j)
    assert z.scaled(2).to_complex() == pytest.approx((0.6 + 0.8j) / 2)
    assert backend_of(z) is Backend.FLOAT
    assert backend_of(ONE) is Backend.EXACT


def test_backend_conversion_only_goes_exact_to_float() -> None:
    converted = to_backend(INV_SQRT2, Backend.FLOAT)
    assert isinstance(converted, ComplexF)
    assert converted.re == pytest.approx(2**-0.5)
    with pytest.raises(BackendError):
        to_backend(ComplexF(1.0, 0.0), Backend.EXACT)


def test_values_agree_is_exact_for_rationals() -> None:
    assert values_agree(Fraction(1, 3), Fraction(1, 3), 1e-12)
    assert not values_agree(Fraction(1, 3), Fraction(1, 3) + Fraction(1, 10**20), 1e-12)
    assert values_agree(Fraction(1, 3), 1 / 3, 1e-12)


def test_dg_mul_examples() -> None:
    half = dg_mul(INV_SQRT2, INV_SQRT2)
    assert (half.re, half.im, half.halfpow) == (1, 0, 2)
    assert half.to_fraction() == Fraction(1, 2)
    assert dg_mul(I_UNIT, I_UNIT) == -ONE
    assert dg_mul(OMEGA, OMEGA.conjugate()) == ONE


def test_integer_values_hash_like_ints() -> None:
    assert ONE == 1
    assert hash(ONE) == hash(1)
    assert hash(DyadicGaussian(-6, 0, 2)) == hash(-3)
    assert {1: "one"}[ONE] == "one"
    assert {ONE, 1} == {1}


def test_canonicalization_is_idempotent() -> None:
    rng = np.random.default_rng(7)
    for re_, im, halfpow in rng.integers((-64, -64, 0), (65, 65, 12), size=(500, 3)):
        value = DyadicGaussian(int(re_), int(im), int(halfpow))
        again = DyadicGaussian(value.re, value.im, value.halfpow)
        assert (again.re, again.im, again.halfpow) == (value.re, value.im, value.halfpow)


@pytest.mark.slow
def test_exact_arithmetic_tracks_floats() -> None:
    rng = np.random.default_rng(20260131)
    for _ in range(10_000):
        parity = int(rng.integers(0, 2))
        a, b, c, d = (int(v) for v in rng.integers(-16, 17, size=4))
        s, t = (parity + 2 * int(v) for v in rng.integers(0, 4, size=2))
        x = DyadicGaussian(a, b, s)
        y = DyadicGaussian(c, d, t)
        product = dg_mul(x, y).to_complex()
        total = dg_add(x, y).to_complex()
        assert abs(product - x.to_complex() * y.to_complex()) <= 1e-12
        assert abs(total - (x.to_complex() + y.to_complex())) <= 1e-12
