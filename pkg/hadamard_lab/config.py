"""
Hadamard Lab - Configuration

Numerical tolerances, verification horizons and service settings.
Every knob can be overridden from the environment (or a `.env` file loaded
by the entry points).
"""

from __future__ import annotations

import os


def _str_env(*names: str, default: str) -> str:
    for name in names:
        value = os.environ.get(name)
        if value is not None and value.strip():
            return value.strip()
    return default


def _int_env(*names: str, default: int) -> int:
    for name in names:
        raw = os.environ.get(name)
        if raw is None or not raw.strip():
            continue
        try:
            return int(raw)
        except ValueError:
            continue
    return default


def _float_env(*names: str, default: float) -> float:
    for name in names:
        raw = os.environ.get(name)
        if raw is None or not raw.strip():
            continue
        try:
            return float(raw)
        except ValueError:
            continue
    return default


# ---------------------------------------------------------------------------
# Numerics
# ---------------------------------------------------------------------------
# Comparisons in the floating backend (normalization, Φ⊥ membership,
# symmetry, zero mean).
FLOAT_TOLERANCE: float = _float_env("HADAMARD_FLOAT_TOLERANCE", default=1e-12)

# Normalization slack accepted for user-supplied floating φ before it is
# renormalized.
INPUT_TOLERANCE: float = _float_env("HADAMARD_INPUT_TOLERANCE", default=1e-9)

# Absolute tolerance requested from the moment quadrature.
QUAD_TOLERANCE: float = _float_env("HADAMARD_QUAD_TOLERANCE", default=1e-10)


# ---------------------------------------------------------------------------
# Verification horizons
# ---------------------------------------------------------------------------
# Longest word enumerated by the brute-force Ξ(l, m) oracle.
ORACLE_CAP: int = _int_env("HADAMARD_ORACLE_CAP", default=16)

# Steps scanned when collecting evidence that a state is symmetric.
DEFAULT_HORIZON: int = _int_env("HADAMARD_HORIZON", default=100)

# Steps that already separate zero-mean states from everything else.
REJECT_HORIZON: int = _int_env("HADAMARD_REJECT_HORIZON", default=3)


# ---------------------------------------------------------------------------
# Service
# ---------------------------------------------------------------------------
API_HOST: str = _str_env("HADAMARD_API_HOST", default="127.0.0.1")
API_PORT: int = _int_env("HADAMARD_API_PORT", default=8000)
MAX_API_STEPS: int = _int_env("HADAMARD_MAX_API_STEPS", default=2000)
# Largest n for which a_n, b_n are built over HTTP (each needs the exact ᵗΞΞ forms).
MAX_API_COEFFICIENTS: int = _int_env("HADAMARD_MAX_API_COEFFICIENTS", default=64)


# ---------------------------------------------------------------------------
# Logging
# ---------------------------------------------------------------------------
LOG_LEVEL: str = _str_env("HADAMARD_LOG_LEVEL", default="WARNING")
LOG_FORMAT: str = "%(asctime)s | %(levelname)-8s | %(name)s | %(message)s"
LOG_DATEFMT: str = "%Y-%m-%dT%H:%M:%S"
