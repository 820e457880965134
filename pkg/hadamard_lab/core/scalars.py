"""
Hadamard Lab - Scalars

Two interchangeable scalar backends for walk amplitudes:

- ``DyadicGaussian``: exact numbers (re + im·i)/√2^s with unbounded integers.
- ``ComplexF``: IEEE double complex numbers, used where no exact form exists
  (arbitrary α, β) and for quadrature cross-checks.

Both expose the same arithmetic surface (``+``, ``-``, ``*``, negation,
``conjugate()``, ``abs2()``, ``is_zero()``, ``real_value()``,
``to_complex()``, ``scaled()``) so the engine and the Pascal code never
branch on the backend.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Protocol, Union

from hadamard_lab.errors import BackendError, MixedParityError, NotRationalError

_SQRT2 = math.sqrt(2.0)
_set = object.__setattr__


class Backend(str, Enum):
    EXACT = "exact"
    FLOAT = "float"


class Scalar(Protocol):
    """Arithmetic shared by both backends."""

    def __add__(self, other: "Scalar") -> "Scalar": ...

    def __sub__(self, other: "Scalar") -> "Scalar": ...

    def __mul__(self, other: "Scalar") -> "Scalar": ...

    def __neg__(self) -> "Scalar": ...

    def conjugate(self) -> "Scalar": ...

    def abs2(self) -> Fraction | float: ...

    def is_zero(self) -> bool: ...

    def real_value(self) -> Fraction | float: ...

    def to_complex(self) -> complex: ...

    def scaled(self, halfpow: int) -> "Scalar": ...


# ---------------------------------------------------------------------------
# Exact backend
# ---------------------------------------------------------------------------

def _canonical(re_: int, im: int, halfpow: int) -> tuple[int, int, int]:
    """Strip common factors of 2 while at least √2² remains in the denominator."""
    if re_ == 0 and im == 0:
        return 0, 0, 0
    if halfpow >= 2:
        bits = re_ | im
        shift = min((bits & -bits).bit_length() - 1, halfpow // 2)
        if shift:
            return re_ >> shift, im >> shift, halfpow - 2 * shift
    return re_, im, halfpow


def _make(re_: int, im: int, halfpow: int) -> "DyadicGaussian":
    re_, im, halfpow = _canonical(re_, im, halfpow)
    return _raw(re_, im, halfpow)


def _raw(re_: int, im: int, halfpow: int) -> "DyadicGaussian":
    value = object.__new__(DyadicGaussian)
    _set(value, "re", re_)
    _set(value, "im", im)
    _set(value, "halfpow", halfpow)
    return value


_TEXT_FORM = re.compile(r"^\s*([+-]?\d+)([+-])(\d+)i/√2\^(\d+)\s*$")


class DyadicGaussian:
    """
    Exact scalar ``(re + im·i) / √2^halfpow``.

    Values are kept in canonical form: once ``halfpow >= 2`` the numerator
    parts are not both even. Equality and hashing are therefore structural.
    Instances are immutable.
    """

    __slots__ = ("re", "im", "halfpow")

    re: int
    im: int
    halfpow: int

    def __init__(self, re: int = 0, im: int = 0, halfpow: int = 0) -> None:
        if halfpow < 0:
            raise ValueError(f"halfpow must be non-negative (got {halfpow}).")
        re_, im_, s = _canonical(int(re), int(im), int(halfpow))
        _set(self, "re", re_)
        _set(self, "im", im_)
        _set(self, "halfpow", s)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("DyadicGaussian is immutable")

    def __delattr__(self, name: str) -> None:
        raise AttributeError("DyadicGaussian is immutable")

    def __reduce__(self):
        return (DyadicGaussian, (self.re, self.im, self.halfpow))

    # -- construction -------------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> DyadicGaussian:
        """Inverse of ``str()``: ``"a+bi/√2^s"``."""
        match = _TEXT_FORM.match(text)
        if not match:
            raise ValueError(f"not an exact scalar literal: {text!r}")
        re_, sign, im, halfpow = match.groups()
        im_value = int(im) if sign == "+" else -int(im)
        return cls(int(re_), im_value, int(halfpow))

    # -- arithmetic ---------------------------------------------------------

    def _align(self, other: DyadicGaussian) -> tuple[int, int, int, int, int]:
        s, t = self.halfpow, other.halfpow
        if s == t:
            return self.re, self.im, other.re, other.im, s
        diff = s - t if s > t else t - s
        if diff % 2:
            raise MixedParityError(
                f"cannot add {self} and {other}: √2 exponents {s} and {t} differ in parity"
            )
        k = diff // 2
        if s < t:
            return self.re << k, self.im << k, other.re, other.im, t
        return self.re, self.im, other.re << k, other.im << k, s

    def __add__(self, other: DyadicGaussian | int) -> DyadicGaussian:
        other = _coerce_exact(other)
        if other is NotImplemented:
            return NotImplemented
        if other.re == 0 and other.im == 0:
            return self
        if self.re == 0 and self.im == 0:
            return other
        a, b, c, d, s = self._align(other)
        return _make(a + c, b + d, s)

    __radd__ = __add__

    def __sub__(self, other: DyadicGaussian | int) -> DyadicGaussian:
        other = _coerce_exact(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: DyadicGaussian | int) -> DyadicGaussian:
        other = _coerce_exact(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __neg__(self) -> DyadicGaussian:
        return _raw(-self.re, -self.im, self.halfpow)

    def __mul__(self, other: DyadicGaussian | int) -> DyadicGaussian:
        if isinstance(other, int):
            return _make(self.re * other, self.im * other, self.halfpow)
        if not isinstance(other, DyadicGaussian):
            return NotImplemented
        if (self.re == 0 and self.im == 0) or (other.re == 0 and other.im == 0):
            return ZERO
        a, b, c, d = self.re, self.im, other.re, other.im
        return _make(a * c - b * d, a * d + b * c, self.halfpow + other.halfpow)

    __rmul__ = __mul__

    def conjugate(self) -> DyadicGaussian:
        return _raw(self.re, -self.im, self.halfpow)

    def times_i(self) -> DyadicGaussian:
        return _raw(-self.im, self.re, self.halfpow)

    def scaled(self, halfpow: int) -> DyadicGaussian:
        """Multiply by (1/√2)^halfpow."""
        return _make(self.re, self.im, self.halfpow + halfpow)

    # -- queries ------------------------------------------------------------

    def abs2(self) -> Fraction:
        """Exact modulus squared (re² + im²) / 2^halfpow."""
        return Fraction(self.re * self.re + self.im * self.im, 1 << self.halfpow)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def to_fraction(self) -> Fraction:
        if self.im != 0 or (self.halfpow % 2 and self.re != 0):
            raise NotRationalError(f"{self} is not a rational number")
        return Fraction(self.re, 1 << (self.halfpow // 2))

    real_value = to_fraction

    def to_complex(self) -> complex:
        scale = math.ldexp(1.0, -(self.halfpow // 2))
        if self.halfpow % 2:
            scale /= _SQRT2
        return complex(self.re * scale, self.im * scale)

    # -- protocol -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DyadicGaussian):
            return (
                self.re == other.re
                and self.im == other.im
                and self.halfpow == other.halfpow
            )
        if isinstance(other, int):
            return self.im == 0 and self.halfpow == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        # Must agree with int hashing since integers compare equal.
        if self.im == 0 and self.halfpow == 0:
            return hash(self.re)
        return hash((self.re, self.im, self.halfpow))

    def __repr__(self) -> str:
        return f"DyadicGaussian(re={self.re}, im={self.im}, halfpow={self.halfpow})"

    def __str__(self) -> str:
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{abs(self.im)}i/√2^{self.halfpow}"


def _coerce_exact(value: object) -> DyadicGaussian:
    if isinstance(value, DyadicGaussian):
        return value
    if isinstance(value, int):
        return _make(value, 0, 0)
    return NotImplemented


ZERO = _raw(0, 0, 0)
ONE = _raw(1, 0, 0)
I_UNIT = _raw(0, 1, 0)
INV_SQRT2 = _raw(1, 0, 1)
SQRT2 = _raw(2, 0, 1)
OMEGA = _raw(1, 1, 1)


def dg_mul(x: DyadicGaussian, y: DyadicGaussian) -> DyadicGaussian:
    return x * y


def dg_add(x: DyadicGaussian, y: DyadicGaussian) -> DyadicGaussian:
    return x + y


# ---------------------------------------------------------------------------
# Floating backend
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class ComplexF:
    """Double-precision complex scalar with the exact backend's interface."""

    re: float
    im: float = 0.0

    @classmethod
    def from_complex(cls, z: complex | float | int) -> ComplexF:
        z = complex(z)
        return cls(z.real, z.imag)

    def __add__(self, other: ComplexF | int | float) -> ComplexF:
        other = _coerce_float(other)
        if other is NotImplemented:
            return NotImplemented
        return ComplexF(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: ComplexF | int | float) -> ComplexF:
        other = _coerce_float(other)
        if other is NotImplemented:
            return NotImplemented
        return ComplexF(self.re - other.re, self.im - other.im)

    def __rsub__(self, other: ComplexF | int | float) -> ComplexF:
        other = _coerce_float(other)
        if other is NotImplemented:
            return NotImplemented
        return ComplexF(other.re - self.re, other.im - self.im)

    def __neg__(self) -> ComplexF:
        return ComplexF(-self.re, -self.im)

    def __mul__(self, other: ComplexF | int | float) -> ComplexF:
        other = _coerce_float(other)
        if other is NotImplemented:
            return NotImplemented
        return ComplexF(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conjugate(self) -> ComplexF:
        return ComplexF(self.re, -self.im)

    def times_i(self) -> ComplexF:
        return ComplexF(-self.im, self.re)

    def scaled(self, halfpow: int) -> ComplexF:
        factor = math.ldexp(1.0, -(halfpow // 2))
        if halfpow % 2:
            factor /= _SQRT2
        return ComplexF(self.re * factor, self.im * factor)

    def abs2(self) -> float:
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0.0 and self.im == 0.0

    def real_value(self) -> float:
        return self.re

    def to_complex(self) -> complex:
        return complex(self.re, self.im)

    def __str__(self) -> str:
        sign = "-" if self.im < 0 or (self.im == 0 and math.copysign(1.0, self.im) < 0) else "+"
        return f"{self.re:.17g}{sign}{abs(self.im):.17g}i"


def _coerce_float(value: object) -> ComplexF:
    if isinstance(value, ComplexF):
        return value
    if isinstance(value, (int, float, complex)):
        return ComplexF.from_complex(value)
    return NotImplemented


AnyScalar = Union[DyadicGaussian, ComplexF]


# ---------------------------------------------------------------------------
# Backend helpers
# ---------------------------------------------------------------------------

_FLOAT_ZERO = ComplexF(0.0, 0.0)
_FLOAT_ONE = ComplexF(1.0, 0.0)


def backend_of(value: AnyScalar) -> Backend:
    if isinstance(value, DyadicGaussian):
        return Backend.EXACT
    if isinstance(value, ComplexF):
        return Backend.FLOAT
    raise TypeError(f"not a walk scalar: {type(value).__name__}")


def zero(backend: Backend) -> AnyScalar:
    return ZERO if backend is Backend.EXACT else _FLOAT_ZERO


def one(backend: Backend) -> AnyScalar:
    return ONE if backend is Backend.EXACT else _FLOAT_ONE


def to_backend(value: AnyScalar, backend: Backend) -> AnyScalar:
    """Convert a scalar; exact → float is always possible, the reverse never."""
    if backend is Backend.EXACT:
        if isinstance(value, DyadicGaussian):
            return value
        raise BackendError(f"floating value {value} has no exact representation")
    if isinstance(value, ComplexF):
        return value
    return ComplexF.from_complex(value.to_complex())


def values_agree(
    left: Fraction | float,
    right: Fraction | float,
    tolerance: float,
) -> bool:
    """Exact equality for two rationals, tolerance as soon as a float is involved."""
    if isinstance(left, float) or isinstance(right, float):
        return abs(float(left) - float(right)) <= tolerance
    return left == right
