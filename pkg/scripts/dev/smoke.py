"""Run quick repository health checks without requiring make."""

from __future__ import annotations

import subprocess
import sys
from pathlib import Path


ROOT = Path(__file__).resolve().parents[2]


def run(cmd: list[str]) -> None:
    print(f"$ {' '.join(cmd)}")
    subprocess.run(cmd, cwd=ROOT, check=True)


def main() -> int:
    run([sys.executable, "scripts/ci/check_layer_boundary.py"])
    run(
        [
            sys.executable,
            "-m",
            "py_compile",
            "hadamard_lab/cli.py",
            "hadamard_lab/api/main.py",
            "hadamard_lab/api/routes.py",
            "hadamard_lab/api/schemas.py",
            "scripts/dev/run_api.py",
        ]
    )
    run([sys.executable, "-m", "hadamard_lab", "xi", "--l", "3", "--m", "1"])
    run(
        [
            sys.executable,
            "-m",
            "pytest",
            "tests/test_scalars.py",
            "tests/test_coin_matrices.py",
            "tests/test_walk_engine.py",
            "tests/test_pascal_closed_form.py",
            "tests/test_api_routes.py",
            "-q",
            "-m",
            "not slow",
        ]
    )
    print("Smoke checks passed.")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
