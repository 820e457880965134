"""Read-only report API tests."""

from __future__ import annotations

from pathlib import Path
import sys

import pytest
from fastapi import HTTPException
from fastapi.testclient import TestClient

sys.path.insert(0, str(Path(__file__).parent.parent))

from hadamard_lab.api.main import app
from hadamard_lab.api.routes import (
    ApiLimits,
    app_state,
    conjecture,
    get_limits,
    health_check,
    moments,
    product_table,
    walk,
    xi,
)
from hadamard_lab.core.scalars import Backend


@pytest.mark.asyncio
async def test_limits_dependency_uninitialized() -> None:
    app_state.limits = None
    with pytest.raises(HTTPException) as exc_info:
        get_limits()
    assert exc_info.value.status_code == 503


@pytest.mark.asyncio
async def test_health_degraded_without_lifespan() -> None:
    app_state.limits = None
    app_state.started_at = None
    response = await health_check()
    assert response.status == "degraded"
    assert response.components["limits"] == "not_initialized"


@pytest.mark.asyncio
async def test_walk_handler_direct() -> None:
    limits = ApiLimits(max_steps=10, oracle_cap=8, horizon=5)
    report = await walk(phi="1,0", n=3, backend=Backend.EXACT, limits=limits)
    assert report.expectation == "-1/2"
    assert report.passed

    with pytest.raises(HTTPException) as exc_info:
        await walk(phi="1,0", n=11, backend=Backend.EXACT, limits=limits)
    assert exc_info.value.status_code == 422


@pytest.mark.asyncio
async def test_library_errors_map_to_422() -> None:
    limits = ApiLimits()
    with pytest.raises(HTTPException) as exc_info:
        await walk(phi="1,1", n=2, backend=Backend.EXACT, limits=limits)
    assert exc_info.value.status_code == 422
    assert "expected 1" in exc_info.value.detail

    with pytest.raises(HTTPException) as exc_info:
        await xi(l=0, m=0, limits=limits)
    assert exc_info.value.status_code == 422


@pytest.mark.asyncio
async def test_xi_handler_respects_oracle_cap() -> None:
    limits = ApiLimits(oracle_cap=6)
    report = await xi(l=2, m=2, limits=limits)
    assert report.oracle_checked
    assert report.passed
    with pytest.raises(HTTPException) as exc_info:
        await xi(l=4, m=3, limits=limits)
    assert exc_info.value.status_code == 422


@pytest.mark.asyncio
async def test_product_table_and_conjecture_handlers() -> None:
    table = await product_table(_limits=ApiLimits())
    assert len(table.cells) == 16
    assert table.passed
    report = await conjecture(n_max=5, limits=ApiLimits())
    assert report.passed


@pytest.mark.asyncio
async def test_coefficient_range_has_its_own_limit() -> None:
    limits = ApiLimits(max_steps=2000, max_coefficients=8)
    report = await moments(m_max=2, n_max=8, limits=limits)
    assert [row.n for row in report.coefficients] == list(range(1, 9))
    with pytest.raises(HTTPException) as exc_info:
        await moments(m_max=2, n_max=9, limits=limits)
    assert exc_info.value.status_code == 422
    assert "HADAMARD_MAX_API_COEFFICIENTS" in exc_info.value.detail
    with pytest.raises(HTTPException) as exc_info:
        await conjecture(n_max=9, limits=limits)
    assert exc_info.value.status_code == 422

def test_api_lifespan_and_endpoints() -> None:
    with TestClient(app) as client:
        health = client.get("/v1/health")
        assert health.status_code == 200
        payload = health.json()
        assert payload["status"] == "ok"
        assert payload["components"]["limits"] == "ok"
        assert app_state.limits is not None

        root = client.get("/")
        assert root.json()["service"] == "Hadamard Lab API"

        walk_response = client.get("/v1/walk", params={"phi": "1/sqrt2,i/sqrt2", "n": 6})
        assert walk_response.status_code == 200
        assert walk_response.json()["symmetric"] is True

        symmetry = client.get("/v1/symmetry", params={"phi": "1,0", "n_max": 10})
        assert symmetry.status_code == 200
        assert symmetry.json()["in_perp"] is False

        moments = client.get("/v1/moments", params={"m_max": 4, "n_max": 3})
        assert moments.status_code == 200
        assert "float" in moments.json()["moments"][0]

        huge = client.get("/v1/moments", params={"n_max": app_state.limits.max_coefficients + 1})
        assert huge.status_code == 422

        table = client.get("/v1/product-table")
        assert table.json()["passed"] is True

        too_long = client.get("/v1/walk", params={"phi": "1,0", "n": app_state.limits.max_steps + 1})
        assert too_long.status_code == 422

        bad_phi = client.get("/v1/walk", params={"phi": "0.6,0.8", "n": 2})
        assert bad_phi.status_code == 422

        float_phi = client.get("/v1/walk", params={"phi": "0.6,0.8", "n": 2, "backend": "float"})
        assert float_phi.status_code == 200

    # Lifespan shutdown clears app_state.
    assert app_state.limits is None
    assert app_state.started_at is None
