"""Hadamard Lab report schemas, shared by the CLI and the HTTP surface."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field


class HealthResponse(BaseModel):
    """Service health response."""

    status: str = Field("ok", description="Service status")
    version: str = Field(..., description="Package version (matches hadamard_lab.__version__)")
    components: dict[str, str] = Field(default_factory=dict, description="Component status")


class StateModel(BaseModel):
    """Initial state φ = (α, β)."""

    alpha: str
    beta: str
    backend: str


class SiteRow(BaseModel):
    """Probabilities at one site; exact values as "num/den"."""

    k: int
    pL: str
    pR: str
    p: str


class WalkReport(BaseModel):
    n: int
    backend: str
    phi: StateModel
    sites: list[SiteRow] = Field(default_factory=list)
    total: str = Field(..., description="Σ_k P(X_n = k)")
    expectation: str
    symmetric: bool
    passed: bool = Field(..., description="Total probability equals 1")


class XiReport(BaseModel):
    l: int
    m: int
    p: str
    q: str
    r: str
    s: str
    matrix: list[list[str]]
    oracle_checked: bool
    oracle_diff: str | None = Field(
        None, description="Largest squared entry modulus of closed form minus oracle"
    )
    notice: str | None = None
    passed: bool


class SymmetryReport(BaseModel):
    phi: StateModel
    in_perp: bool
    symmetric: bool
    zero_mean: bool
    horizon: int
    first_violation_n: int | None = None
    agree: bool
    passed: bool


class CoefficientRow(BaseModel):
    n: int
    a: str
    b: str
    reference_a: str | None = None
    reference_b: str | None = None
    matches_reference: bool | None = None


class QuadraticSurd(BaseModel):
    """r0 + r1·√2."""

    r0: str
    r1: str


class MomentRow(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    m: int
    exact: QuadraticSurd
    float_value: str = Field(..., alias="float")
    quadrature: str | None = None
    agree: bool


class MomentsReport(BaseModel):
    n_max: int
    m_max: int
    coefficients: list[CoefficientRow] = Field(default_factory=list)
    moments: list[MomentRow] = Field(default_factory=list)
    passed: bool


class ConjectureRowModel(BaseModel):
    n: int
    a_n: str
    b_next: str
    holds: bool


class ConjectureReport(BaseModel):
    n_max: int
    rows: list[ConjectureRowModel] = Field(default_factory=list)
    passed: bool


class ProductCellModel(BaseModel):
    row: str
    column: str
    expected: str
    passed: bool


class ProductTableResponse(BaseModel):
    cells: list[ProductCellModel] = Field(default_factory=list)
    passed: bool


class CheckModel(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class VerifyAllReport(BaseModel):
    checks: list[CheckModel] = Field(default_factory=list)
    passed: bool
