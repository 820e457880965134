"""
Hadamard Lab - Initial-State Parsing

Text forms accepted for φ = (α, β), components separated by a comma:

    "1,0"                      integers
    "1/sqrt2,i/sqrt2"          exact over √2 (also "√2", "sqrt(2)")
    "1/2+i/2,1/2-i/2"          a denominator binds to its own term
    "(1+i)/2^2,(1-i)/2"        a parenthesised numerator shares one denominator
    "0.6,0.8i"  "0.6+0.8i,0"   floating "re+imi" pairs

Denominators are √2, 2^k or a positive integer. Integer terms over √2 or a
power of two stay exact; decimals, other divisors and sums of terms with
different √2 parities become a Python complex.
"""

from __future__ import annotations

import math
import re

from hadamard_lab.core.scalars import ZERO, Backend, DyadicGaussian
from hadamard_lab.engine.state import QubitState
from hadamard_lab.errors import BackendError, MixedParityError, StateParseError

ParsedScalar = DyadicGaussian | complex

_ROOT2_DENOMINATORS = {"sqrt2", "√2", "sqrt(2)"}
_DENOMINATOR = r"sqrt2|√2|sqrt\(2\)|2\^\d+|\d+"
_GROUPED = re.compile(rf"^\((?P<inner>[^()]*)\)(?:/(?P<den>{_DENOMINATOR}))?$")
_TERM = re.compile(
    r"(?P<sign>[+-]?)"
    r"(?P<number>\d+(?:\.\d*)?(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?)?"
    r"(?P<unit>\*?i)?"
    rf"(?:/(?P<den>{_DENOMINATOR}))?"
)


def _denominator(den: str, source: str) -> tuple[int, int]:
    """Split a denominator into (√2 exponent, remaining integer divisor)."""
    if den in _ROOT2_DENOMINATORS:
        return 1, 1
    if den.startswith("2^"):
        return 2 * int(den[2:]), 1
    divisor = int(den)
    if divisor == 0:
        raise StateParseError(f"division by zero in {source!r}")
    if divisor & (divisor - 1) == 0:
        # 2^j = √2^(2j)
        return 2 * (divisor.bit_length() - 1), 1
    return 0, divisor


def _over(value: ParsedScalar, den: str | None, source: str) -> ParsedScalar:
    if den is None:
        return value
    halfpow, divisor = _denominator(den, source)
    if isinstance(value, DyadicGaussian) and divisor == 1:
        return value.scaled(halfpow)
    return _to_complex(value) / divisor / math.sqrt(2.0) ** halfpow


def _plus(left: ParsedScalar, right: ParsedScalar) -> ParsedScalar:
    if isinstance(left, DyadicGaussian) and isinstance(right, DyadicGaussian):
        try:
            return left + right
        except MixedParityError:
            pass
    return _to_complex(left) + _to_complex(right)


def _parse_terms(text: str, source: str) -> ParsedScalar:
    """Sum of ``[±]number[i][/den]`` terms; each denominator divides its own term."""
    total: ParsedScalar = ZERO
    position = 0
    terms = 0
    while position < len(text):
        match = _TERM.match(text, position)
        if match is None or match.end() == position or not (match["number"] or match["unit"]):
            raise StateParseError(f"cannot parse {source!r} as a complex number")
        if terms and not match["sign"]:
            raise StateParseError(f"missing operator between terms in {source!r}")
        number = match["number"]
        value: int | float
        if number is None:
            value = 1
        elif any(marker in number for marker in ".eE"):
            value = float(number)
        else:
            value = int(number)
        if match["sign"] == "-":
            value = -value
        term: ParsedScalar
        if isinstance(value, int):
            term = DyadicGaussian(0, value) if match["unit"] else DyadicGaussian(value)
        else:
            term = complex(0, value) if match["unit"] else complex(value)
        total = _plus(total, _over(term, match["den"], source))
        position = match.end()
        terms += 1
    if terms == 0:
        raise StateParseError("empty component")
    return total


def parse_scalar(text: str) -> ParsedScalar:
    compact = "".join(text.split())
    if not compact:
        raise StateParseError("empty component")
    grouped = _GROUPED.match(compact)
    if grouped:
        return _over(_parse_terms(grouped["inner"], text), grouped["den"], text)
    return _parse_terms(compact, text)


def parse_phi(text: str) -> tuple[ParsedScalar, ParsedScalar]:
    parts = text.split(",")
    if len(parts) != 2:
        raise StateParseError(f"expected two comma-separated components, got {text!r}")
    return parse_scalar(parts[0]), parse_scalar(parts[1])


def resolve_state(text: str, backend: Backend | str | None = Backend.EXACT) -> QubitState:
    """
    Parse φ and build the state in the requested backend.

    ``exact`` refuses anything that is not exactly representable; ``float``
    converts; ``None`` picks exact when possible and falls back to floats.
    """
    alpha, beta = parse_phi(text)
    if backend is None:
        return QubitState.from_input(alpha, beta)
    backend = Backend(backend)
    if backend is Backend.FLOAT:
        return QubitState.from_input(_to_complex(alpha), _to_complex(beta))
    if not (isinstance(alpha, DyadicGaussian) and isinstance(beta, DyadicGaussian)):
        raise BackendError(f"φ = {text!r} has no exact representation; use the float backend")
    state = QubitState.from_values(alpha, beta)
    if state.backend is not Backend.EXACT:
        raise BackendError(
            f"components of φ = {text!r} mix √2 parities; use the float backend"
        )
    return state


def _to_complex(value: ParsedScalar) -> complex:
    return value.to_complex() if isinstance(value, DyadicGaussian) else value
