"""
Expectation coefficients a_n, b_n and limit-distribution moments.
"""

from .expectation import (
    REFERENCE_COEFFICIENTS,
    ConjectureReport,
    ConjectureRow,
    LinearForm,
    TableRow,
    conjecture_check,
    expectation_form,
    table_check,
)
from .limit import (
    JRecursionReport,
    JRow,
    LimitMoment,
    PiMultiple,
    QSqrt2,
    j_recursion,
    limit_density,
    limit_moment,
    moment_quadrature,
)

__all__ = [
    "ConjectureReport",
    "ConjectureRow",
    "JRecursionReport",
    "JRow",
    "LimitMoment",
    "LinearForm",
    "PiMultiple",
    "QSqrt2",
    "REFERENCE_COEFFICIENTS",
    "TableRow",
    "conjecture_check",
    "expectation_form",
    "j_recursion",
    "limit_density",
    "limit_moment",
    "moment_quadrature",
    "table_check",
]
