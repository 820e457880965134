"""
Hadamard Lab - Walk State Records

Value types produced by the evolution engine:
- QubitState: normalized initial chirality state φ = (α, β)
- WalkState: amplitude pair (Ψ_L, Ψ_R) per site at a fixed time
- Distribution: per-site probabilities, split by chirality
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping

from hadamard_lab import config
from hadamard_lab.core.scalars import (
    AnyScalar,
    Backend,
    ComplexF,
    DyadicGaussian,
    backend_of,
    values_agree,
    zero,
)
from hadamard_lab.errors import BackendError, NormalizationError
from hadamard_lab.utils import format_number

logger = logging.getLogger("hadamard.engine")

Vector = tuple[AnyScalar, AnyScalar]
Probability = Fraction | float


def _is_exact_input(value: object) -> bool:
    return isinstance(value, (int, DyadicGaussian)) and not isinstance(value, bool)


def _as_exact(value: int | DyadicGaussian) -> DyadicGaussian:
    return value if isinstance(value, DyadicGaussian) else DyadicGaussian(value)


def _as_float(value: object) -> ComplexF:
    if isinstance(value, ComplexF):
        return value
    if isinstance(value, DyadicGaussian):
        return ComplexF.from_complex(value.to_complex())
    return ComplexF.from_complex(complex(value))


def _parity_compatible(alpha: DyadicGaussian, beta: DyadicGaussian) -> bool:
    if alpha.is_zero() or beta.is_zero():
        return True
    return (alpha.halfpow - beta.halfpow) % 2 == 0


@dataclass(frozen=True)
class QubitState:
    """Initial state φ = ᵗ[α, β] with |α|² + |β|² = 1."""

    alpha: AnyScalar
    beta: AnyScalar

    def __post_init__(self) -> None:
        if backend_of(self.alpha) is not backend_of(self.beta):
            raise BackendError("alpha and beta must use the same scalar backend")
        if self.backend is Backend.EXACT and not _parity_compatible(self.alpha, self.beta):
            raise BackendError(
                f"exact components {self.alpha} and {self.beta} mix √2 parities; "
                "use QubitState.from_values to fall back to floats"
            )
        norm = self.norm2()
        if not values_agree(norm, Fraction(1), config.FLOAT_TOLERANCE):
            raise NormalizationError(
                f"|alpha|^2 + |beta|^2 = {format_number(norm)}, expected 1"
            )

    @classmethod
    def from_values(cls, alpha: object, beta: object) -> QubitState:
        """
        Build a state from ints, exact scalars, floats or complex numbers.

        Integers and exact scalars give the exact backend unless the two
        components mix √2 parities, in which case the state is rebuilt in
        floats (their sum under the coin would leave the exact ring).
        """
        if _is_exact_input(alpha) and _is_exact_input(beta):
            exact_alpha, exact_beta = _as_exact(alpha), _as_exact(beta)
            if _parity_compatible(exact_alpha, exact_beta):
                return cls(exact_alpha, exact_beta)
            logger.debug(
                "Components %s and %s mix √2 parities; using the float backend",
                exact_alpha,
                exact_beta,
            )
        return cls(_as_float(alpha), _as_float(beta))

    @classmethod
    def from_input(
        cls,
        alpha: object,
        beta: object,
        tolerance: float | None = None,
    ) -> QubitState:
        """
        Like ``from_values`` but floating input within ``tolerance`` of unit
        norm is renormalized instead of rejected.
        """
        if _is_exact_input(alpha) and _is_exact_input(beta):
            return cls.from_values(alpha, beta)
        tolerance = config.INPUT_TOLERANCE if tolerance is None else tolerance
        a, b = _as_float(alpha), _as_float(beta)
        norm = a.abs2() + b.abs2()
        if abs(norm - 1.0) > tolerance:
            raise NormalizationError(
                f"|alpha|^2 + |beta|^2 = {norm:.17g} is not within {tolerance:g} of 1"
            )
        scale = 1.0 / math.sqrt(norm)
        return cls(a * scale, b * scale)

    @property
    def backend(self) -> Backend:
        return backend_of(self.alpha)

    def norm2(self) -> Probability:
        return self.alpha.abs2() + self.beta.abs2()

    def imbalance(self) -> Probability:
        """|α|² − |β|²."""
        return self.alpha.abs2() - self.beta.abs2()

    def bilinear(self) -> Probability:
        """αβ̄ + ᾱβ (always real)."""
        return (self.alpha * self.beta.conjugate() + self.alpha.conjugate() * self.beta).real_value()

    def vector(self) -> Vector:
        return (self.alpha, self.beta)

    def with_phase(self, phase: AnyScalar) -> QubitState:
        """Multiply both components by a unit scalar."""
        if backend_of(phase) is not self.backend:
            return QubitState(_as_float(self.alpha) * _as_float(phase), _as_float(self.beta) * _as_float(phase))
        return QubitState(self.alpha * phase, self.beta * phase)

    def to_backend(self, backend: Backend) -> QubitState:
        if backend is self.backend:
            return self
        if backend is Backend.FLOAT:
            return QubitState(_as_float(self.alpha), _as_float(self.beta))
        raise BackendError(f"state {self.label()} has no exact representation")

    def label(self) -> str:
        return f"({self.alpha}, {self.beta})"

    def to_dict(self) -> dict[str, Any]:
        return {
            "alpha": str(self.alpha),
            "beta": str(self.beta),
            "backend": self.backend.value,
        }


@dataclass(frozen=True)
class WalkState:
    """Amplitudes Ψ_k^(n) at time ``time``; absent sites carry zero."""

    time: int
    amplitudes: Mapping[int, Vector] = field(default_factory=dict)
    backend: Backend = Backend.EXACT

    def sites(self) -> list[int]:
        return sorted(self.amplitudes)

    def amplitude(self, site: int) -> Vector:
        vector = self.amplitudes.get(site)
        if vector is None:
            nothing = zero(self.backend)
            return (nothing, nothing)
        return vector

    def total_probability(self) -> Probability:
        total: Probability = Fraction(0) if self.backend is Backend.EXACT else 0.0
        for left, right in self.amplitudes.values():
            total += left.abs2() + right.abs2()
        return total

    def agrees_with(self, other: WalkState) -> bool:
        """Site-by-site equality, missing sites counting as zero."""
        if self.backend is not other.backend:
            return False
        for site in set(self.amplitudes) | set(other.amplitudes):
            if self.amplitude(site) != other.amplitude(site):
                return False
        return True


@dataclass(frozen=True)
class Distribution:
    """P(X_n = k) = |Ψ_L,k|² + |Ψ_R,k|², kept per chirality."""

    time: int
    components: Mapping[int, tuple[Probability, Probability]] = field(default_factory=dict)
    backend: Backend = Backend.EXACT

    def sites(self) -> list[int]:
        return sorted(self.components)

    def probability(self, site: int) -> Probability:
        pair = self.components.get(site)
        if pair is None:
            return Fraction(0) if self.backend is Backend.EXACT else 0.0
        return pair[0] + pair[1]

    @property
    def probabilities(self) -> dict[int, Probability]:
        return {site: self.probability(site) for site in self.sites()}

    def total(self) -> Probability:
        return sum(self.probabilities.values(), Fraction(0) if self.backend is Backend.EXACT else 0.0)

    def moment(self, order: int) -> Probability:
        """Σ_k k^order · P(X_n = k)."""
        start: Probability = Fraction(0) if self.backend is Backend.EXACT else 0.0
        return sum((site**order * p for site, p in self.probabilities.items()), start)

    def expectation(self) -> Probability:
        return self.moment(1)

    def is_symmetric(self, tolerance: float | None = None) -> bool:
        tolerance = config.FLOAT_TOLERANCE if tolerance is None else tolerance
        return all(
            values_agree(self.probability(site), self.probability(-site), tolerance)
            for site in self.components
        )

    def to_csv(self) -> str:
        lines = ["k,p"]
        lines.extend(f"{site},{format_number(p)}" for site, p in self.probabilities.items())
        return "\n".join(lines) + "\n"
