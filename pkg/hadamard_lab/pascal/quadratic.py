"""
Hadamard Lab - Quadratic Forms

Ψ_k^(n)(φ) = Ξ(l, m)φ with l = (n−k)/2, m = (n+k)/2, so the probability at
site k is the quadratic form φ* M_k φ with M_k = ᵗΞ(l, m)Ξ(l, m). Ξ is
real, hence the transpose coincides with the adjoint.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from hadamard_lab.core.matrices import CoinMatrix, coin_constant
from hadamard_lab.core.scalars import Backend
from hadamard_lab.engine.state import Probability, QubitState
from hadamard_lab.errors import ConsistencyError
from hadamard_lab.pascal.closed_form import xi_closed

logger = logging.getLogger("hadamard.pascal")


def _real_xi(l: int, m: int) -> CoinMatrix:
    xi = xi_closed(l, m)
    if not xi.is_real():
        raise ConsistencyError(f"Ξ({l}, {m}) has a non-real entry")
    return xi


def gram(l: int, m: int) -> CoinMatrix:
    """ᵗΞ(l, m)Ξ(l, m)."""
    xi = _real_xi(l, m)
    return xi.transpose() @ xi


def difference_matrix(l: int, m: int) -> CoinMatrix:
    """ᵗΞ(l,m)Ξ(l,m) − ᵗΞ(m,l)Ξ(m,l), always of the shape [[a, b], [b, −a]]."""
    return gram(l, m) - gram(m, l)


def _rational(matrix: CoinMatrix) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    return tuple(entry.to_fraction() for entry in matrix)  # type: ignore[return-value]


def difference_shape(matrix: CoinMatrix) -> tuple[Fraction, Fraction]:
    """Return (a, b) for a matrix [[a, b], [b, −a]]; anything else is a bug."""
    a, b, c, d = _rational(matrix)
    if a != -d or b != c:
        raise ConsistencyError(f"matrix {matrix.to_rows()} is not of the form [[a, b], [b, -a]]")
    return a, b


def _form(matrix: CoinMatrix, phi: QubitState) -> Probability:
    alpha, beta = phi.vector()
    if matrix.backend is not phi.backend:
        matrix = matrix.to_backend(phi.backend)
    top = matrix.a * alpha + matrix.b * beta
    bottom = matrix.c * alpha + matrix.d * beta
    return (alpha.conjugate() * top + beta.conjugate() * bottom).real_value()


@dataclass(frozen=True)
class QuadraticForm:
    """M_k = ᵗΞΞ for every site k = −n, −n+2, …, n at time n."""

    n: int
    matrices: dict[int, CoinMatrix] = field(default_factory=dict)

    def sites(self) -> list[int]:
        return sorted(self.matrices)

    def total(self) -> CoinMatrix:
        total = coin_constant("0")
        for matrix in self.matrices.values():
            total = total + matrix
        return total

    def probability(self, phi: QubitState, site: int) -> Probability:
        matrix = self.matrices.get(site)
        if matrix is None:
            return Fraction(0) if phi.backend is Backend.EXACT else 0.0
        return _form(matrix, phi)

    def distribution(self, phi: QubitState) -> dict[int, Probability]:
        return {site: self.probability(phi, site) for site in self.sites()}

    def expectation_matrix(self) -> CoinMatrix:
        """A_n = Σ_k k·M_k."""
        total = coin_constant("0")
        for site, matrix in self.matrices.items():
            if site:
                total = total + matrix.scale(site)
        return total

    def is_positive_semidefinite(self) -> bool:
        for matrix in self.matrices.values():
            a, b, c, d = _rational(matrix)
            if b != c or a < 0 or d < 0 or a * d - b * c < 0:
                return False
        return True


@lru_cache(maxsize=128)
def quadratic_form(n: int) -> QuadraticForm:
    if n < 1:
        raise ValueError(f"time must be at least 1 (got {n})")
    matrices = {}
    for site in range(-n, n + 1, 2):
        l, m = (n - site) // 2, (n + site) // 2
        matrices[site] = gram(l, m)
    logger.debug("Quadratic form at n=%d: %d site matrices", n, len(matrices))
    return QuadraticForm(n=n, matrices=matrices)
