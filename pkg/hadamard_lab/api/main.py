"""
Hadamard Lab FastAPI Service - Main Application.

Read-only HTTP surface over the same reports the CLI prints.
"""

from __future__ import annotations

import logging
import os
from contextlib import asynccontextmanager

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from hadamard_lab import __version__, config
from hadamard_lab.api.routes import ApiLimits, app_state, router
from hadamard_lab.utils import utc_now

logging.basicConfig(
    level=logging.INFO,
    format=config.LOG_FORMAT,
    datefmt=config.LOG_DATEFMT,
)

logger = logging.getLogger("hadamard.api")


@asynccontextmanager
async def lifespan(app: FastAPI):
    """Set up request limits on startup, clear them on shutdown."""
    app_state.limits = ApiLimits()
    app_state.started_at = utc_now()
    logger.info(
        "Hadamard Lab API v%s online (max steps %d, oracle cap %d)",
        __version__,
        app_state.limits.max_steps,
        app_state.limits.oracle_cap,
    )

    yield

    logger.info("Hadamard Lab API shutting down...")
    app_state.limits = None
    app_state.started_at = None


app = FastAPI(
    title="Hadamard Lab API",
    description="Exact one-dimensional Hadamard walk reports.",
    version=__version__,
    lifespan=lifespan,
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=os.getenv("CORS_ORIGINS", "*").split(","),
    allow_methods=["GET"],
    allow_headers=["*"],
)

app.include_router(router)


@app.get("/")
async def root():
    """Root endpoint with API information."""
    return {
        "service": "Hadamard Lab API",
        "version": __version__,
        "status": "online",
        "docs": "/docs",
        "endpoints": {
            "walk": "GET /v1/walk?phi=...&n=...",
            "xi": "GET /v1/xi?l=...&m=...",
            "symmetry": "GET /v1/symmetry?phi=...&n_max=...",
            "moments": "GET /v1/moments?m_max=...",
            "conjecture": "GET /v1/conjecture?n_max=...",
            "product_table": "GET /v1/product-table",
            "health": "GET /v1/health",
        },
    }


if __name__ == "__main__":
    import uvicorn

    uvicorn.run(
        "hadamard_lab.api.main:app",
        host=config.API_HOST,
        port=config.API_PORT,
        log_level="info",
    )
