"""
Hadamard Lab - Coin Matrices

Exact 2x2 matrices over the scalar backends and the named constants of the
walk: H, P, Q (H = P + Q), R = √2·PQ, S = √2·QP, the mirror J, identity and
zero. Also checks the P/Q/R/S product table and the algebraic relations the
evolution relies on.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from hadamard_lab.core.scalars import (
    INV_SQRT2,
    ONE,
    SQRT2,
    ZERO,
    AnyScalar,
    Backend,
    backend_of,
    to_backend,
)
from hadamard_lab.errors import UnknownConstantError

logger = logging.getLogger("hadamard.core")

Vector = tuple[AnyScalar, AnyScalar]


@dataclass(frozen=True, slots=True)
class CoinMatrix:
    """Immutable 2x2 matrix ``[[a, b], [c, d]]``."""

    a: AnyScalar
    b: AnyScalar
    c: AnyScalar
    d: AnyScalar

    @property
    def entries(self) -> tuple[tuple[AnyScalar, AnyScalar], tuple[AnyScalar, AnyScalar]]:
        return ((self.a, self.b), (self.c, self.d))

    @property
    def backend(self) -> Backend:
        return backend_of(self.a)

    def __getitem__(self, index: tuple[int, int]) -> AnyScalar:
        row, col = index
        return self.entries[row][col]

    def __iter__(self) -> Iterator[AnyScalar]:
        return iter((self.a, self.b, self.c, self.d))

    # -- algebra ------------------------------------------------------------

    def __matmul__(self, other: CoinMatrix) -> CoinMatrix:
        return CoinMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __add__(self, other: CoinMatrix) -> CoinMatrix:
        return CoinMatrix(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def __sub__(self, other: CoinMatrix) -> CoinMatrix:
        return CoinMatrix(self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d)

    def __neg__(self) -> CoinMatrix:
        return CoinMatrix(-self.a, -self.b, -self.c, -self.d)

    def scale(self, factor: AnyScalar | int) -> CoinMatrix:
        return CoinMatrix(self.a * factor, self.b * factor, self.c * factor, self.d * factor)

    def scaled(self, halfpow: int) -> CoinMatrix:
        """Multiply every entry by (1/√2)^halfpow."""
        return CoinMatrix(
            self.a.scaled(halfpow),
            self.b.scaled(halfpow),
            self.c.scaled(halfpow),
            self.d.scaled(halfpow),
        )

    def transpose(self) -> CoinMatrix:
        return CoinMatrix(self.a, self.c, self.b, self.d)

    def conjugate(self) -> CoinMatrix:
        return CoinMatrix(
            self.a.conjugate(), self.b.conjugate(), self.c.conjugate(), self.d.conjugate()
        )

    def adjoint(self) -> CoinMatrix:
        return self.conjugate().transpose()

    def apply(self, vector: Vector) -> Vector:
        x, y = vector
        return (self.a * x + self.b * y, self.c * x + self.d * y)

    def trace(self) -> AnyScalar:
        return self.a + self.d

    # -- queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return all(entry.is_zero() for entry in self)

    def is_real(self) -> bool:
        return all(entry.to_complex().imag == 0 for entry in self)

    def to_backend(self, backend: Backend) -> CoinMatrix:
        return CoinMatrix(*(to_backend(entry, backend) for entry in self))

    def to_complex_rows(self) -> list[list[complex]]:
        return [[self.a.to_complex(), self.b.to_complex()], [self.c.to_complex(), self.d.to_complex()]]

    def to_rows(self) -> list[list[str]]:
        return [[str(self.a), str(self.b)], [str(self.c), str(self.d)]]


def coin_mul(left: CoinMatrix, right: CoinMatrix) -> CoinMatrix:
    return left @ right


# ---------------------------------------------------------------------------
# Named constants
# ---------------------------------------------------------------------------

COIN_NAMES: tuple[str, ...] = ("H", "P", "Q", "R", "S", "J", "I", "0")

_h = INV_SQRT2
_EXACT_CONSTANTS: dict[str, CoinMatrix] = {
    "H": CoinMatrix(_h, _h, _h, -_h),
    "P": CoinMatrix(_h, _h, ZERO, ZERO),
    "Q": CoinMatrix(ZERO, ZERO, _h, -_h),
    "R": CoinMatrix(_h, -_h, ZERO, ZERO),
    "S": CoinMatrix(ZERO, ZERO, _h, _h),
    "J": CoinMatrix(ZERO, -ONE, ONE, ZERO),
    "I": CoinMatrix(ONE, ZERO, ZERO, ONE),
    "0": CoinMatrix(ZERO, ZERO, ZERO, ZERO),
}


@lru_cache(maxsize=None)
def coin_constant(name: str, backend: Backend = Backend.EXACT) -> CoinMatrix:
    """Return one of the named matrices in the requested backend."""
    try:
        matrix = _EXACT_CONSTANTS[name]
    except KeyError:
        raise UnknownConstantError(
            f"unknown coin constant {name!r}; expected one of {', '.join(COIN_NAMES)}"
        ) from None
    if backend is Backend.EXACT:
        return matrix
    return matrix.to_backend(Backend(backend))


# ---------------------------------------------------------------------------
# Product table
# ---------------------------------------------------------------------------

# (row, column) -> (sign, name): row·column = sign·name/√2
PRODUCT_TABLE: dict[tuple[str, str], tuple[int, str]] = {
    ("P", "P"): (1, "P"), ("P", "Q"): (1, "R"), ("P", "R"): (1, "R"), ("P", "S"): (1, "P"),
    ("Q", "P"): (1, "S"), ("Q", "Q"): (-1, "Q"), ("Q", "R"): (1, "Q"), ("Q", "S"): (-1, "S"),
    ("R", "P"): (1, "P"), ("R", "Q"): (-1, "R"), ("R", "R"): (1, "R"), ("R", "S"): (-1, "P"),
    ("S", "P"): (1, "S"), ("S", "Q"): (1, "Q"), ("S", "R"): (1, "Q"), ("S", "S"): (1, "S"),
}


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named identity."""

    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict[str, object]:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass(frozen=True)
class ProductCell:
    row: str
    column: str
    sign: int
    name: str
    passed: bool

    @property
    def expected(self) -> str:
        return f"{'-' if self.sign < 0 else ''}{self.name}/√2"


@dataclass(frozen=True)
class ProductTableReport:
    cells: tuple[ProductCell, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(cell.passed for cell in self.cells)

    def failures(self) -> list[ProductCell]:
        return [cell for cell in self.cells if not cell.passed]


def expected_product(row: str, column: str) -> CoinMatrix:
    sign, name = PRODUCT_TABLE[(row, column)]
    return coin_constant(name).scale(INV_SQRT2 * sign)


def verify_table() -> ProductTableReport:
    """Check all sixteen products of P, Q, R, S against the table."""
    cells = []
    for (row, column), (sign, name) in PRODUCT_TABLE.items():
        actual = coin_constant(row) @ coin_constant(column)
        passed = actual == expected_product(row, column)
        if not passed:
            logger.warning("Product table cell %s%s differs: got %s", row, column, actual.to_rows())
        cells.append(ProductCell(row=row, column=column, sign=sign, name=name, passed=passed))
    return ProductTableReport(cells=tuple(cells))


def coin_relations() -> list[CheckResult]:
    """Exact identities between H, P, Q, R, S and J."""
    H, P, Q, R, S, J, I, Z = (coin_constant(name) for name in COIN_NAMES)
    identities = [
        ("HH* = I", H @ H.adjoint(), I),
        ("PP* + QQ* = I", P @ P.adjoint() + Q @ Q.adjoint(), I),
        ("P*P + Q*Q = I", P.adjoint() @ P + Q.adjoint() @ Q, I),
        ("PQ* = 0", P @ Q.adjoint(), Z),
        ("QP* = 0", Q @ P.adjoint(), Z),
        ("Q*P = 0", Q.adjoint() @ P, Z),
        ("P*Q = 0", P.adjoint() @ Q, Z),
        ("QJ = -JP", Q @ J, -(J @ P)),
        ("PJ = -JQ", P @ J, -(J @ Q)),
        ("H = P + Q", H, P + Q),
        ("R = √2 PQ", R, (P @ Q).scale(SQRT2)),
        ("S = √2 QP", S, (Q @ P).scale(SQRT2)),
        ("P² = P/√2", P @ P, P.scale(INV_SQRT2)),
        ("Q² = -Q/√2", Q @ Q, (-Q).scale(INV_SQRT2)),
        ("JJ = -I", J @ J, -I),
    ]
    results = []
    for name, left, right in identities:
        passed = left == right
        if not passed:
            logger.warning("Coin relation %s failed", name)
        results.append(CheckResult(name=name, passed=passed))
    return results
