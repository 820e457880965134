"""
Hadamard Lab - Limit Moments

Moments of the scaled limit Z = lim X_n/n for symmetric initial states, with
density 1/(π(1−x²)√(1−2x²)) on (−1/√2, 1/√2):

    E(Z^(2n))   = 1 − (1/√2) Σ_{k<n} C(2k, k)/8^k
    E(Z^(2n−1)) = 0

Three independent routes are provided: the closed form (exact, in Q(√2)),
numerical quadrature (scipy), and the integral recursion
J_{n+1} = J_n − π·C(2n, n)/2^(3n+2), J_0 = π/(2√2), carried with a formal
factor π that must cancel.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Any

import numpy as np
from scipy import integrate

from hadamard_lab import config
from hadamard_lab.errors import OddMomentError, PiCancellationError
from hadamard_lab.utils import format_float, format_rational

logger = logging.getLogger("hadamard.moments")

_ROOT2 = math.sqrt(2.0)
EDGE = 1.0 / _ROOT2


@dataclass(frozen=True)
class QSqrt2:
    """Exact r0 + r1·√2 with rational r0, r1."""

    r0: Fraction = Fraction(0)
    r1: Fraction = Fraction(0)

    def __add__(self, other: QSqrt2) -> QSqrt2:
        return QSqrt2(self.r0 + other.r0, self.r1 + other.r1)

    def __sub__(self, other: QSqrt2) -> QSqrt2:
        return QSqrt2(self.r0 - other.r0, self.r1 - other.r1)

    def __neg__(self) -> QSqrt2:
        return QSqrt2(-self.r0, -self.r1)

    def __mul__(self, other: QSqrt2 | Fraction | int) -> QSqrt2:
        if isinstance(other, QSqrt2):
            return QSqrt2(
                self.r0 * other.r0 + 2 * self.r1 * other.r1,
                self.r0 * other.r1 + self.r1 * other.r0,
            )
        return QSqrt2(self.r0 * other, self.r1 * other)

    __rmul__ = __mul__

    def __float__(self) -> float:
        return float(self.r0) + float(self.r1) * _ROOT2

    def is_zero(self) -> bool:
        return self.r0 == 0 and self.r1 == 0

    def to_dict(self) -> dict[str, str]:
        return {"r0": format_rational(self.r0), "r1": format_rational(self.r1)}

    def __str__(self) -> str:
        return f"{format_rational(self.r0)} + {format_rational(self.r1)}√2"


SQRT2_EXACT = QSqrt2(Fraction(0), Fraction(1))


@dataclass(frozen=True)
class PiMultiple:
    """coefficient·π^pi_power with the coefficient in Q(√2)."""

    coefficient: QSqrt2
    pi_power: int = 1

    def __add__(self, other: PiMultiple) -> PiMultiple:
        if other.pi_power != self.pi_power:
            raise PiCancellationError(
                f"cannot add π^{self.pi_power} and π^{other.pi_power} terms"
            )
        return PiMultiple(self.coefficient + other.coefficient, self.pi_power)

    def __sub__(self, other: PiMultiple) -> PiMultiple:
        return self + PiMultiple(-other.coefficient, other.pi_power)

    def scale(self, factor: QSqrt2 | Fraction | int) -> PiMultiple:
        return PiMultiple(self.coefficient * factor, self.pi_power)

    def over_pi(self) -> PiMultiple:
        return PiMultiple(self.coefficient, self.pi_power - 1)

    def cancel(self) -> QSqrt2:
        """Return the coefficient once π has dropped out."""
        if self.pi_power != 0:
            raise PiCancellationError(f"π^{self.pi_power} left in {self.coefficient}")
        return self.coefficient

    def __float__(self) -> float:
        return float(self.coefficient) * math.pi**self.pi_power


@dataclass(frozen=True)
class LimitMoment:
    order: int
    value: QSqrt2

    def __float__(self) -> float:
        return float(self.value)

    def to_dict(self) -> dict[str, Any]:
        return {"m": self.order, "exact": self.value.to_dict(), "float": format_float(float(self))}


def limit_moment(m: int) -> LimitMoment:
    if m < 0:
        raise ValueError(f"moment order must be non-negative (got {m})")
    if m % 2:
        return LimitMoment(m, QSqrt2())
    partial = sum((Fraction(comb(2 * k, k), 8**k) for k in range(m // 2)), Fraction(0))
    # (1/√2)·Σ = (Σ/2)·√2
    return LimitMoment(m, QSqrt2(Fraction(1), -partial / 2))


def limit_density(x: float | np.ndarray) -> float | np.ndarray:
    """1/(π(1−x²)√(1−2x²)) inside (−1/√2, 1/√2), zero outside."""
    values = np.asarray(x, dtype=float)
    inside = np.abs(values) < EDGE
    safe = np.where(inside, values, 0.0)
    density = np.where(inside, 1.0 / (np.pi * (1.0 - safe**2) * np.sqrt(1.0 - 2.0 * safe**2)), 0.0)
    if density.ndim == 0:
        return float(density)
    return density


def moment_quadrature(m: int, method: str = "theta") -> float:
    """
    Numerical E(Z^m) for even m.

    ``theta``: x = sin θ/√2 turns the integral into
    2^((3−m)/2)/π ∫_0^{π/2} sin^m θ/(1 + cos²θ) dθ, smooth on the interval.
    ``jacobi``: integrates x^m/(π(1−x²)√2) against the algebraic weight
    (x + 1/√2)^(−1/2)(1/√2 − x)^(−1/2).
    """
    if m < 0 or m % 2:
        raise OddMomentError(f"quadrature needs an even non-negative order (got {m})")
    tolerance = config.QUAD_TOLERANCE
    if method == "theta":
        value, error = integrate.quad(
            lambda theta: math.sin(theta) ** m / (1.0 + math.cos(theta) ** 2),
            0.0,
            math.pi / 2,
            epsabs=tolerance * 1e-2,
            epsrel=1e-13,
            limit=200,
        )
        value *= 2.0 ** ((3 - m) / 2) / math.pi
    elif method == "jacobi":
        value, error = integrate.quad(
            lambda x: x**m / (math.pi * (1.0 - x * x) * _ROOT2),
            -EDGE,
            EDGE,
            weight="alg",
            wvar=(-0.5, -0.5),
            epsabs=tolerance * 1e-2,
            epsrel=1e-13,
            limit=200,
        )
    else:
        raise ValueError(f"unknown quadrature method {method!r}; expected 'theta' or 'jacobi'")
    logger.debug("Quadrature m=%d (%s): %.17g, estimated error %.3g", m, method, value, error)
    return value


# ---------------------------------------------------------------------------
# Integral recursion
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class JRow:
    n: int
    j: PiMultiple
    moment: QSqrt2
    closed: QSqrt2

    @property
    def matches(self) -> bool:
        return self.moment == self.closed


@dataclass(frozen=True)
class JRecursionReport:
    n_max: int
    rows: tuple[JRow, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(row.matches for row in self.rows)


J_ZERO = PiMultiple(QSqrt2(Fraction(0), Fraction(1, 4)))  # π/(2√2) = π·√2/4


def j_recursion(n_max: int) -> JRecursionReport:
    """
    Build J_n by the recursion, map each to E(Z^(2n)) = 2√2·J_n/π and
    compare with the closed form exactly.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be at least 1 (got {n_max})")
    rows = []
    j = J_ZERO
    for n in range(n_max + 1):
        moment = j.scale(2 * SQRT2_EXACT).over_pi().cancel()
        closed = limit_moment(2 * n).value
        rows.append(JRow(n=n, j=j, moment=moment, closed=closed))
        if moment != closed:
            logger.warning("Recursion moment E(Z^%d) = %s differs from %s", 2 * n, moment, closed)
        step = PiMultiple(QSqrt2(Fraction(comb(2 * n, n), 2 ** (3 * n + 2))))
        j = j - step
    return JRecursionReport(n_max=n_max, rows=tuple(rows))
