"""
Hadamard Lab - Quantum Pascal Closed Form

Ξ(l, m), the sum of all ordered products of l copies of P and m copies of Q,
expressed over the basis {P, Q, R, S}:

    Ξ(l, m) = (1/√2)^(n−1) (−1)^m Σ_γ (−1)^γ C(l−1, γ−1) C(m−1, γ−1)
              [ (l−γ)/γ P − (m−γ)/γ Q + R + S ]          (l, m ≥ 1)
    Ξ(l, 0) = (1/√2)^(l−1) P
    Ξ(0, m) = (1/√2)^(m−1) (−1)^(m+1) Q

``xi_closed`` evaluates that sum literally with rational binomial weights;
``coefficients`` evaluates the per-basis closed forms (one binomial product
per term). Both carry the common factor in the √2 exponent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Any

from hadamard_lab.core.matrices import CoinMatrix, coin_constant
from hadamard_lab.core.scalars import DyadicGaussian
from hadamard_lab.errors import ConsistencyError, EmptyWordError


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def _check_word(l: int, m: int) -> int:
    if l < 0 or m < 0:
        raise ValueError(f"l and m must be non-negative (got l={l}, m={m})")
    if l + m == 0:
        raise EmptyWordError("empty word: Ξ(0, 0) needs l + m ≥ 1")
    return l + m


@dataclass(frozen=True)
class XiDecomposition:
    """Ξ(l, m) = p·P + q·Q + r·R + s·S with exact real coefficients."""

    l: int
    m: int
    p: DyadicGaussian
    q: DyadicGaussian
    r: DyadicGaussian
    s: DyadicGaussian

    @property
    def n(self) -> int:
        return self.l + self.m

    @property
    def site(self) -> int:
        return self.m - self.l

    def matrix(self) -> CoinMatrix:
        return (
            coin_constant("P").scale(self.p)
            + coin_constant("Q").scale(self.q)
            + coin_constant("R").scale(self.r)
            + coin_constant("S").scale(self.s)
        )

    def integer_weights(self) -> tuple[int, int, int, int]:
        """Coefficients with the common (1/√2)^(n−1) factor removed."""
        root_power = DyadicGaussian(1 << (self.n - 1), 0, self.n - 1)  # √2^(n−1)
        weights = []
        for coefficient in (self.p, self.q, self.r, self.s):
            value = (coefficient * root_power).to_fraction()
            if value.denominator != 1:
                raise ConsistencyError(f"non-integral weight {value} in Ξ({self.l}, {self.m})")
            weights.append(value.numerator)
        return tuple(weights)  # type: ignore[return-value]

    def to_dict(self) -> dict[str, Any]:
        return {
            "l": self.l,
            "m": self.m,
            "p": str(self.p),
            "q": str(self.q),
            "r": str(self.r),
            "s": str(self.s),
        }


def _scaled(weight: int, n: int) -> DyadicGaussian:
    return DyadicGaussian(weight, 0, n - 1)


def coefficients(l: int, m: int) -> XiDecomposition:
    n = _check_word(l, m)
    if m == 0:
        return XiDecomposition(l, m, _scaled(1, n), _scaled(0, n), _scaled(0, n), _scaled(0, n))
    if l == 0:
        return XiDecomposition(
            l, m, _scaled(0, n), _scaled(_sign(m - 1), n), _scaled(0, n), _scaled(0, n)
        )
    outer = _sign(m)
    p = outer * sum(
        _sign(g) * comb(l - 1, g) * comb(m - 1, g - 1) for g in range(1, min(l - 1, m) + 1)
    )
    q = -outer * sum(
        _sign(g) * comb(l - 1, g - 1) * comb(m - 1, g) for g in range(1, min(l, m - 1) + 1)
    )
    r = outer * sum(
        _sign(g) * comb(l - 1, g - 1) * comb(m - 1, g - 1) for g in range(1, min(l, m) + 1)
    )
    return XiDecomposition(l, m, _scaled(p, n), _scaled(q, n), _scaled(r, n), _scaled(r, n))


def _theorem_weights(l: int, m: int) -> tuple[int, int, int, int]:
    p = q = r = s = Fraction(0)
    for g in range(1, min(l, m) + 1):
        weight = _sign(g) * comb(l - 1, g - 1) * comb(m - 1, g - 1)
        p += weight * Fraction(l - g, g)
        q -= weight * Fraction(m - g, g)
        r += weight
        s += weight
    weights = []
    for value in (p, q, r, s):
        if value.denominator != 1:
            raise ConsistencyError(f"non-integral weight {value} in Ξ({l}, {m})")
        weights.append(_sign(m) * value.numerator)
    return tuple(weights)  # type: ignore[return-value]


def xi_closed(l: int, m: int) -> CoinMatrix:
    """Ξ(l, m) from the closed form, exact."""
    n = _check_word(l, m)
    P, Q = coin_constant("P"), coin_constant("Q")
    if m == 0:
        return P.scaled(l - 1)
    if l == 0:
        return Q.scale(_sign(m + 1)).scaled(m - 1)
    wp, wq, wr, ws = _theorem_weights(l, m)
    combined = (
        P.scale(wp)
        + Q.scale(wq)
        + coin_constant("R").scale(wr)
        + coin_constant("S").scale(ws)
    )
    return combined.scaled(n - 1)
