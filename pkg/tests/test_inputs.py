"""Tests for initial-state parsing."""

from __future__ import annotations

from pathlib import Path
import sys

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from hadamard_lab.core.scalars import I_UNIT, INV_SQRT2, OMEGA, ONE, ZERO, Backend, DyadicGaussian
from hadamard_lab.errors import BackendError, NormalizationError, StateParseError
from hadamard_lab.inputs import parse_phi, parse_scalar, resolve_state


@pytest.mark.parametrize(
    ("text", "expected"),
    [
        ("1", ONE),
        ("0", ZERO),
        ("i", I_UNIT),
        ("-i", -I_UNIT),
        ("1/sqrt2", INV_SQRT2),
        ("1/√2", INV_SQRT2),
        ("i/sqrt(2)", I_UNIT * INV_SQRT2),
        ("(1+i)/sqrt2", OMEGA),
        ("(1-i)/2", DyadicGaussian(1, -1, 2)),
        ("3/4", DyadicGaussian(3, 0, 4)),
        ("1+i/2", DyadicGaussian(2, 1, 2)),
        ("1/2+i/2", DyadicGaussian(1, 1, 2)),
        ("i/2-1/2", DyadicGaussian(-1, 1, 2)),
        ("(1+i)/2^2", DyadicGaussian(1, 1, 4)),
        ("1/2^3", DyadicGaussian(1, 0, 6)),
        ("1/sqrt2+i/sqrt2", OMEGA),
    ],
)
def test_exact_scalars(text: str, expected: DyadicGaussian) -> None:
    assert parse_scalar(text) == expected


def test_floating_scalars() -> None:
    assert parse_scalar("0.6") == pytest.approx(0.6)
    assert parse_scalar("0.8i") == pytest.approx(0.8j)
    assert parse_scalar("0.6+0.8i") == pytest.approx(0.6 + 0.8j)
    assert parse_scalar("1e-1") == pytest.approx(0.1)
    assert parse_scalar("1/3") == pytest.approx(1 / 3)


@pytest.mark.parametrize("text", ["", "abc", "1/0", "1++i", "2x", "()", "1/2/3", "(1+i/2"])
def test_malformed_scalars(text: str) -> None:
    with pytest.raises(StateParseError):
        parse_scalar(text)


def test_parse_phi_needs_two_components() -> None:
    assert parse_phi("1, 0") == (ONE, ZERO)
    with pytest.raises(StateParseError):
        parse_phi("1")
    with pytest.raises(StateParseError):
        parse_phi("1,0,0")


def test_resolve_exact_state() -> None:
    phi = resolve_state("1/sqrt2,i/sqrt2")
    assert phi.backend is Backend.EXACT
    assert phi.beta == I_UNIT * INV_SQRT2


def test_resolve_float_state() -> None:
    phi = resolve_state("0.6,0.8i", Backend.FLOAT)
    assert phi.backend is Backend.FLOAT
    assert phi.beta.to_complex() == pytest.approx(0.8j)
    converted = resolve_state("1,0", "float")
    assert converted.backend is Backend.FLOAT


def test_exact_backend_refuses_floats_and_mixed_parity() -> None:
    with pytest.raises(BackendError):
        resolve_state("0.6,0.8")
    with pytest.raises(BackendError):
        resolve_state("(1+i)/2,1/sqrt2")


def test_automatic_backend_falls_back() -> None:
    assert resolve_state("0.6,0.8", None).backend is Backend.FLOAT
    assert resolve_state("(1+i)/2,1/sqrt2", None).backend is Backend.FLOAT
    assert resolve_state("0,1", None).backend is Backend.EXACT


def test_unnormalized_input_is_rejected() -> None:
    with pytest.raises(NormalizationError):
        resolve_state("1,1")
    with pytest.raises(NormalizationError):
        resolve_state("0.6,0.9", Backend.FLOAT)


def test_denominator_binds_to_its_own_term() -> None:
    assert parse_scalar("1+i/2") != parse_scalar("(1+i)/2")
    mixed = parse_scalar("-1+i/sqrt2")
    assert isinstance(mixed, complex)
    assert mixed == pytest.approx(complex(-1, 2**-0.5))
    assert parse_scalar("1.5+i/3") == pytest.approx(complex(1.5, 1 / 3))


def test_literal_sum_over_root_two_is_not_normalized() -> None:
    with pytest.raises(NormalizationError):
        resolve_state("-1+i/sqrt2,0", None)
    with pytest.raises(BackendError):
        resolve_state("-1+i/sqrt2,0")


def test_per_term_spelling_resolves_exactly() -> None:
    phi = resolve_state("1/2+i/2,1/2-i/2")
    assert phi.backend is Backend.EXACT
    assert phi.alpha == DyadicGaussian(1, 1, 2)
    assert phi == resolve_state("(1+i)/2,(1-i)/2")
