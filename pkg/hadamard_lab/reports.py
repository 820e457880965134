"""
Hadamard Lab - Report Builders

Turn library results into the pydantic report models of
``hadamard_lab.api.schemas``. The CLI and the HTTP routes both call these,
so their JSON is identical for identical inputs.
"""

from __future__ import annotations

from fractions import Fraction

from hadamard_lab import config
from hadamard_lab.api import schemas
from hadamard_lab.core.matrices import verify_table
from hadamard_lab.core.scalars import values_agree
from hadamard_lab.engine.state import QubitState
from hadamard_lab.engine.walk import distribution, evolve
from hadamard_lab.moments.expectation import (
    REFERENCE_COEFFICIENTS,
    conjecture_check,
    expectation_form,
)
from hadamard_lab.moments.limit import limit_moment, moment_quadrature
from hadamard_lab.pascal.closed_form import coefficients, xi_closed
from hadamard_lab.pascal.oracle import xi_oracle
from hadamard_lab.symmetry.classes import classify
from hadamard_lab.utils import format_float, format_number, format_rational

# Agreement required between quadrature and the closed-form moments.
MOMENT_AGREEMENT = 1e-8


def state_model(phi: QubitState) -> schemas.StateModel:
    return schemas.StateModel(**phi.to_dict())


def walk_report(phi: QubitState, n: int) -> schemas.WalkReport:
    dist = distribution(evolve(phi, n))
    sites = [
        schemas.SiteRow(
            k=site,
            pL=format_number(left),
            pR=format_number(right),
            p=format_number(left + right),
        )
        for site, (left, right) in sorted(dist.components.items())
    ]
    total = dist.total()
    return schemas.WalkReport(
        n=n,
        backend=phi.backend.value,
        phi=state_model(phi),
        sites=sites,
        total=format_number(total),
        expectation=format_number(dist.expectation()),
        symmetric=dist.is_symmetric(),
        passed=values_agree(total, Fraction(1), config.FLOAT_TOLERANCE),
    )


def walk_csv(report: schemas.WalkReport) -> str:
    lines = ["k,p"]
    lines.extend(f"{row.k},{row.p}" for row in report.sites)
    return "\n".join(lines) + "\n"


def xi_report(l: int, m: int, cap: int | None = None) -> schemas.XiReport:
    cap = config.ORACLE_CAP if cap is None else cap
    decomposition = coefficients(l, m)
    closed = xi_closed(l, m)
    passed = decomposition.matrix() == closed
    oracle_diff: str | None = None
    notice: str | None = None
    checked = l + m <= cap
    if checked:
        gap = closed - xi_oracle(l, m, cap=cap)
        worst = max(entry.abs2() for entry in gap)
        oracle_diff = format_rational(worst)
        passed = passed and worst == 0
    else:
        notice = f"oracle comparison skipped: l + m = {l + m} exceeds the cap {cap}"
    return schemas.XiReport(
        **decomposition.to_dict(),
        matrix=closed.to_rows(),
        oracle_checked=checked,
        oracle_diff=oracle_diff,
        notice=notice,
        passed=passed,
    )


def symmetry_report(phi: QubitState, n_max: int) -> schemas.SymmetryReport:
    label = classify(phi, n_max)
    # Below the rejection horizon a state outside Φ⊥ can still look symmetric.
    conclusive = n_max >= config.REJECT_HORIZON
    return schemas.SymmetryReport(
        phi=state_model(phi),
        in_perp=label.in_perp,
        symmetric=label.symmetric_to_horizon,
        zero_mean=label.zero_mean_to_horizon,
        horizon=n_max,
        first_violation_n=label.first_violation_n,
        agree=label.agree,
        passed=label.agree or not conclusive,
    )


def coefficient_rows(n_max: int) -> list[schemas.CoefficientRow]:
    rows = []
    for n in range(1, n_max + 1):
        form = expectation_form(n)
        reference = REFERENCE_COEFFICIENTS.get(n)
        rows.append(
            schemas.CoefficientRow(
                n=n,
                a=format_rational(form.a),
                b=format_rational(form.b),
                reference_a=format_rational(reference[0]) if reference else None,
                reference_b=format_rational(reference[1]) if reference else None,
                matches_reference=(form.a, form.b) == reference if reference else None,
            )
        )
    return rows


def moment_rows(m_max: int) -> list[schemas.MomentRow]:
    rows = []
    for m in range(2, m_max + 1, 2):
        moment = limit_moment(m)
        quadrature = moment_quadrature(m)
        rows.append(
            schemas.MomentRow(
                m=m,
                exact=schemas.QuadraticSurd(**moment.value.to_dict()),
                float_value=format_float(float(moment)),
                quadrature=format_float(quadrature),
                agree=abs(quadrature - float(moment)) <= MOMENT_AGREEMENT,
            )
        )
    return rows


def moments_report(n_max: int, m_max: int) -> schemas.MomentsReport:
    coefficients_ = coefficient_rows(n_max)
    moments = moment_rows(m_max)
    passed = all(row.matches_reference is not False for row in coefficients_) and all(
        row.agree for row in moments
    )
    return schemas.MomentsReport(
        n_max=n_max,
        m_max=m_max,
        coefficients=coefficients_,
        moments=moments,
        passed=passed,
    )


def conjecture_report(n_max: int) -> schemas.ConjectureReport:
    result = conjecture_check(n_max)
    return schemas.ConjectureReport(
        n_max=n_max,
        rows=[
            schemas.ConjectureRowModel(
                n=row.n,
                a_n=format_rational(row.a_n),
                b_next=format_rational(row.b_next),
                holds=row.holds,
            )
            for row in result.rows
        ],
        passed=result.passed,
    )


def product_table_report() -> schemas.ProductTableResponse:
    table = verify_table()
    return schemas.ProductTableResponse(
        cells=[
            schemas.ProductCellModel(
                row=cell.row, column=cell.column, expected=cell.expected, passed=cell.passed
            )
            for cell in table.cells
        ],
        passed=table.passed,
    )