"""
Hadamard Lab API Routes - read-only report handlers.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from datetime import datetime
from typing import Callable, TypeVar

from fastapi import APIRouter, Depends, HTTPException, Query
from starlette.concurrency import run_in_threadpool

from hadamard_lab import __version__, config, reports
from hadamard_lab.api import schemas
from hadamard_lab.core.scalars import Backend
from hadamard_lab.errors import WalkLabError
from hadamard_lab.inputs import resolve_state
from hadamard_lab.utils import utc_now

logger = logging.getLogger("hadamard.api")

router = APIRouter(prefix="/v1", tags=["hadamard"])

T = TypeVar("T")


@dataclass
class ApiLimits:
    """Upper bounds applied to every request."""

    max_steps: int = config.MAX_API_STEPS
    max_coefficients: int = config.MAX_API_COEFFICIENTS
    oracle_cap: int = config.ORACLE_CAP
    horizon: int = config.DEFAULT_HORIZON


@dataclass
class AppState:
    """Application state container."""

    limits: ApiLimits | None = None
    started_at: datetime | None = field(default=None)


app_state = AppState()


def get_limits() -> ApiLimits:
    """Dependency: Get request limits set up by the lifespan."""
    if app_state.limits is None:
        raise HTTPException(status_code=503, detail="Service limits not initialized")
    return app_state.limits


def _check_steps(value: int, limits: ApiLimits, name: str = "n") -> None:
    if value > limits.max_steps:
        raise HTTPException(
            status_code=422,
            detail=f"{name} = {value} exceeds HADAMARD_MAX_API_STEPS ({limits.max_steps})",
        )


def _check_coefficients(value: int, limits: ApiLimits) -> None:
    if value > limits.max_coefficients:
        raise HTTPException(
            status_code=422,
            detail=(
                f"n_max = {value} exceeds HADAMARD_MAX_API_COEFFICIENTS "
                f"({limits.max_coefficients})"
            ),
        )


async def _run(build: Callable[..., T], *args) -> T:
    """Run a report builder off the event loop, mapping library errors to 422."""
    try:
        return await run_in_threadpool(build, *args)
    except WalkLabError as exc:
        logger.info("Rejected request: %s", exc.reason)
        raise HTTPException(status_code=422, detail=exc.reason) from exc


@router.get("/walk", response_model=schemas.WalkReport)
async def walk(
    phi: str = Query(..., description='Initial state, e.g. "1,0"'),
    n: int = Query(..., ge=0),
    backend: Backend = Query(Backend.EXACT),
    limits: ApiLimits = Depends(get_limits),
) -> schemas.WalkReport:
    """Distribution of X_n for one initial state."""
    _check_steps(n, limits)
    state = await _run(resolve_state, phi, backend)
    return await _run(reports.walk_report, state, n)


@router.get("/xi", response_model=schemas.XiReport)
async def xi(
    l: int = Query(..., ge=0),
    m: int = Query(..., ge=0),
    limits: ApiLimits = Depends(get_limits),
) -> schemas.XiReport:
    """Ξ(l, m) decomposition checked against the word oracle."""
    if l + m > limits.oracle_cap:
        raise HTTPException(
            status_code=422,
            detail=f"l + m = {l + m} exceeds the oracle cap ({limits.oracle_cap})",
        )
    return await _run(reports.xi_report, l, m, limits.oracle_cap)


@router.get("/symmetry", response_model=schemas.SymmetryReport)
async def symmetry(
    phi: str = Query(...),
    n_max: int | None = Query(None, ge=1),
    backend: Backend = Query(Backend.EXACT),
    limits: ApiLimits = Depends(get_limits),
) -> schemas.SymmetryReport:
    """Class flags of one state up to a horizon."""
    horizon = limits.horizon if n_max is None else n_max
    _check_steps(horizon, limits, "n_max")
    state = await _run(resolve_state, phi, backend)
    return await _run(reports.symmetry_report, state, horizon)


@router.get("/moments", response_model=schemas.MomentsReport)
async def moments(
    m_max: int = Query(14, ge=0),
    n_max: int = Query(10, ge=1),
    limits: ApiLimits = Depends(get_limits),
) -> schemas.MomentsReport:
    """Coefficient table a_n, b_n and the even limit moments."""
    _check_coefficients(n_max, limits)
    _check_steps(m_max, limits, "m_max")
    return await _run(reports.moments_report, n_max, m_max)


@router.get("/conjecture", response_model=schemas.ConjectureReport)
async def conjecture(
    n_max: int = Query(30, ge=1),
    limits: ApiLimits = Depends(get_limits),
) -> schemas.ConjectureReport:
    """Evidence for b_{n+1} = a_n + 1."""
    _check_coefficients(n_max, limits)
    return await _run(reports.conjecture_report, n_max)


@router.get("/product-table", response_model=schemas.ProductTableResponse)
async def product_table(
    _limits: ApiLimits = Depends(get_limits),
) -> schemas.ProductTableResponse:
    """The 16 products of P, Q, R, S."""
    return await _run(reports.product_table_report)


@router.get("/health", response_model=schemas.HealthResponse)
async def health_check() -> schemas.HealthResponse:
    """Service health check."""
    components = {
        "limits": "ok" if app_state.limits else "not_initialized",
        "uptime": (
            f"{(utc_now() - app_state.started_at).total_seconds():.0f}s"
            if app_state.started_at
            else "not_started"
        ),
    }
    return schemas.HealthResponse(
        status="ok" if app_state.limits else "degraded",
        version=__version__,
        components=components,
    )
