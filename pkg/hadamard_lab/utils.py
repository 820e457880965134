"""
Hadamard Lab - shared formatting helpers.

Centralises the lossless text renderings used by every report.
"""

from __future__ import annotations

from datetime import datetime, timezone
from fractions import Fraction


def utc_now() -> datetime:
    """Return the current UTC time as a timezone-aware datetime."""
    return datetime.now(timezone.utc)


def format_rational(value: Fraction | int) -> str:
    """Render an exact rational as ``"num/den"`` (plain ``"num"`` for integers)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_float(value: float) -> str:
    """Render a float with 17 significant digits (round-trips IEEE doubles)."""
    return format(float(value), ".17g")


def format_number(value: Fraction | int | float) -> str:
    """Exact values as rationals, floats at full precision."""
    if isinstance(value, float):
        return format_float(value)
    return format_rational(value)
