"""
Hadamard Lab - Expectation Coefficients

E(X_n^φ) = −a_n(|α|² − |β|²) − b_n(αβ̄ + ᾱβ), with a_n and b_n read off the
exact matrix A_n = Σ_k k·ᵗΞΞ: a_n = −(A_n)₁₁, b_n = −(A_n)₁₂.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from hadamard_lab.core.scalars import Backend
from hadamard_lab.engine.state import Probability, QubitState
from hadamard_lab.errors import ConsistencyError
from hadamard_lab.pascal.quadratic import quadratic_form
from hadamard_lab.utils import format_rational

logger = logging.getLogger("hadamard.moments")

F = Fraction

# Tabulated values for n = 1..10: n -> (a_n, b_n)
REFERENCE_COEFFICIENTS: dict[int, tuple[Fraction, Fraction]] = {
    1: (F(0), F(1)),
    2: (F(0), F(1)),
    3: (F(1, 2), F(1)),
    4: (F(1), F(3, 2)),
    5: (F(9, 8), F(2)),
    6: (F(5, 4), F(17, 8)),
    7: (F(27, 16), F(9, 4)),
    8: (F(17, 8), F(43, 16)),
    9: (F(293, 128), F(25, 8)),
    10: (F(157, 64), F(421, 128)),
}


@dataclass(frozen=True)
class LinearForm:
    n: int
    a: Fraction
    b: Fraction

    def evaluate(self, phi: QubitState) -> Probability:
        if phi.backend is Backend.EXACT:
            return -self.a * phi.imbalance() - self.b * phi.bilinear()
        return -float(self.a) * phi.imbalance() - float(self.b) * phi.bilinear()

    def to_dict(self) -> dict[str, Any]:
        return {"n": self.n, "a": format_rational(self.a), "b": format_rational(self.b)}


def expectation_form(n: int) -> LinearForm:
    matrix = quadratic_form(n).expectation_matrix()
    a11, a12, a21, a22 = (entry.to_fraction() for entry in matrix)
    if a11 != -a22 or a12 != a21:
        raise ConsistencyError(
            f"A_{n} = [[{a11}, {a12}], [{a21}, {a22}]] is not trace-free symmetric"
        )
    return LinearForm(n=n, a=-a11, b=-a12)


@dataclass(frozen=True)
class TableRow:
    n: int
    a: Fraction
    b: Fraction
    expected_a: Fraction
    expected_b: Fraction

    @property
    def passed(self) -> bool:
        return self.a == self.expected_a and self.b == self.expected_b


def table_check() -> list[TableRow]:
    """Compare expectation_form with the tabulated coefficients."""
    rows = []
    for n, (expected_a, expected_b) in REFERENCE_COEFFICIENTS.items():
        form = expectation_form(n)
        row = TableRow(n, form.a, form.b, expected_a, expected_b)
        if not row.passed:
            logger.warning(
                "Coefficient table mismatch at n=%d: got (%s, %s), expected (%s, %s)",
                n, form.a, form.b, expected_a, expected_b,
            )
        rows.append(row)
    return rows


@dataclass(frozen=True)
class ConjectureRow:
    n: int
    a_n: Fraction
    b_next: Fraction

    @property
    def holds(self) -> bool:
        return self.b_next == self.a_n + 1


@dataclass(frozen=True)
class ConjectureReport:
    """Evidence for b_{n+1} = a_n + 1; never used as an assumption."""

    n_max: int
    rows: tuple[ConjectureRow, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(row.holds for row in self.rows)


def conjecture_check(n_max: int) -> ConjectureReport:
    if n_max < 1:
        raise ValueError(f"n_max must be at least 1 (got {n_max})")
    forms = {n: expectation_form(n) for n in range(1, n_max + 2)}
    rows = tuple(ConjectureRow(n, forms[n].a, forms[n + 1].b) for n in range(1, n_max + 1))
    report = ConjectureReport(n_max=n_max, rows=rows)
    for row in rows:
        if not row.holds:
            logger.warning("b_%d = %s differs from a_%d + 1 = %s", row.n + 1, row.b_next, row.n, row.a_n + 1)
    return report
