"""
Exact scalar and 2x2 matrix arithmetic for the walk.
"""

from .matrices import (
    COIN_NAMES,
    PRODUCT_TABLE,
    CheckResult,
    CoinMatrix,
    ProductTableReport,
    coin_constant,
    coin_mul,
    coin_relations,
    verify_table,
)
from .scalars import (
    I_UNIT,
    INV_SQRT2,
    OMEGA,
    ONE,
    SQRT2,
    ZERO,
    AnyScalar,
    Backend,
    ComplexF,
    DyadicGaussian,
    dg_add,
    dg_mul,
)

__all__ = [
    "AnyScalar",
    "Backend",
    "COIN_NAMES",
    "CheckResult",
    "CoinMatrix",
    "ComplexF",
    "DyadicGaussian",
    "I_UNIT",
    "INV_SQRT2",
    "OMEGA",
    "ONE",
    "PRODUCT_TABLE",
    "ProductTableReport",
    "SQRT2",
    "ZERO",
    "coin_constant",
    "coin_mul",
    "coin_relations",
    "dg_add",
    "dg_mul",
    "verify_table",
]
