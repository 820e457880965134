"""Fail if the math packages reach into the CLI, reports or HTTP layers."""

from __future__ import annotations

from pathlib import Path
import re
import sys


ROOT = Path(__file__).resolve().parents[2]

MATH_PACKAGES = ["core", "engine", "pascal", "symmetry", "moments"]

FORBIDDEN_IMPORTS = [
    r"^\s*(from|import)\s+fastapi\b",
    r"^\s*(from|import)\s+uvicorn\b",
    r"^\s*(from|import)\s+starlette\b",
    r"^\s*from\s+hadamard_lab\.api\b",
    r"^\s*from\s+hadamard_lab\s+import\s+.*\b(api|cli|reports|verification)\b",
    r"^\s*from\s+hadamard_lab\.(cli|reports|verification|inputs)\b",
]

REQUIRED_ROUTES = [
    r"@router\.get\(\"/walk\"",
    r"@router\.get\(\"/xi\"",
    r"@router\.get\(\"/symmetry\"",
    r"@router\.get\(\"/moments\"",
    r"@router\.get\(\"/conjecture\"",
    r"@router\.get\(\"/product-table\"",
    r"@router\.get\(\"/health\"",
]


def _read(rel_path: str) -> str:
    path = ROOT / rel_path
    if not path.exists():
        return ""
    return path.read_text(encoding="utf-8")


def _line_for(content: str, pattern: str) -> int:
    match = re.search(pattern, content, flags=re.MULTILINE)
    if not match:
        return 0
    return content.count("\n", 0, match.start()) + 1


def main() -> int:
    violations: list[tuple[str, int, str]] = []

    for package in MATH_PACKAGES:
        path = ROOT / "hadamard_lab" / package
        if not path.is_dir():
            violations.append((f"hadamard_lab/{package}", 1, "Missing math package"))
            continue
        for source in sorted(path.rglob("*.py")):
            if "__pycache__" in source.parts:
                continue
            rel_path = str(source.relative_to(ROOT))
            content = source.read_text(encoding="utf-8")
            for pattern in FORBIDDEN_IMPORTS:
                lineno = _line_for(content, pattern)
                if lineno:
                    violations.append((rel_path, lineno, f"Forbidden import in math layer: {pattern}"))

    routes_path = "hadamard_lab/api/routes.py"
    routes_content = _read(routes_path)
    if not routes_content:
        violations.append((routes_path, 1, "Missing routes module"))
    for pattern in REQUIRED_ROUTES:
        if not re.search(pattern, routes_content, flags=re.MULTILINE):
            violations.append((routes_path, 1, f"Missing required read-only route: {pattern}"))
    lineno = _line_for(routes_content, r"@router\.(post|put|patch|delete)\(")
    if lineno:
        violations.append((routes_path, lineno, "HTTP surface must stay read-only"))

    if not violations:
        print("Layer boundary check passed.")
        return 0

    print("Layer boundary violations detected:")
    for rel_path, lineno, reason in violations:
        print(f"- {rel_path}:{lineno}: {reason}")
    return 1


if __name__ == "__main__":
    sys.exit(main())
