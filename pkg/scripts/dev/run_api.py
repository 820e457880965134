"""
Hadamard Lab FastAPI Service - Startup Script

Loads environment variables from .env and starts uvicorn server.

Usage:
    python scripts/dev/run_api.py
"""

import os
import sys
from pathlib import Path

# Load .env before hadamard_lab.config reads the environment
from dotenv import load_dotenv

repo_root = Path(__file__).resolve().parents[2]
load_dotenv(repo_root / ".env")
sys.path.insert(0, str(repo_root))

if __name__ == "__main__":
    import uvicorn

    from hadamard_lab import config

    if os.getenv("HADAMARD_MAX_API_STEPS") is None:
        print(f"HADAMARD_MAX_API_STEPS not set, using {config.MAX_API_STEPS}")

    print("\nStarting Hadamard Lab API...")
    uvicorn.run(
        "hadamard_lab.api.main:app",
        host=config.API_HOST,
        port=config.API_PORT,
        reload=True,
        log_level="info",
    )
