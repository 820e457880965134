"""
Hadamard Lab - Errors

Every failure raised by the library derives from ``WalkLabError`` so the CLI
and HTTP surfaces can catch one type and respond with a structured message.
Each subclass also derives from the closest builtin exception.
"""

from __future__ import annotations


class WalkLabError(Exception):
    """Base class for library errors."""

    def __init__(self, reason: str) -> None:
        super().__init__(reason)
        self.reason = reason


class UnknownConstantError(WalkLabError, KeyError):
    """Raised for a coin constant name outside {H, P, Q, R, S, J, I, 0}."""

    def __str__(self) -> str:
        return self.reason


class MixedParityError(WalkLabError, ArithmeticError):
    """Sum of exact scalars whose √2 exponents differ by an odd amount."""


class NotRationalError(WalkLabError, ValueError):
    """Exact scalar requested as a rational but it is not one."""


class NormalizationError(WalkLabError, ValueError):
    """Initial qubit state does not satisfy |α|² + |β|² = 1."""


class BackendError(WalkLabError, ValueError):
    """Exact backend requested for a state it cannot represent."""


class StateParseError(WalkLabError, ValueError):
    """Textual initial state could not be parsed."""


class EmptyWordError(WalkLabError, ValueError):
    """Ξ(0, 0) requested: there is no word of length zero to sum."""


class OracleCapError(WalkLabError, ValueError):
    """Brute-force enumeration requested above the configured word length."""


class ClusterRangeError(WalkLabError, ValueError):
    """Cluster count requested for a γ outside the kind's admissible range."""


class ConsistencyError(WalkLabError, RuntimeError):
    """An identity that must hold by construction failed."""


class PiCancellationError(ConsistencyError):
    """The formal factor π did not cancel in a moment computation."""


class OddMomentError(WalkLabError, ValueError):
    """Quadrature requested for an odd moment order."""
