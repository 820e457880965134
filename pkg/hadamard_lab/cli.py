"""
Hadamard Lab - Command Line

Subcommands:
    walk        distribution table of X_n for one initial state
    xi          Ξ(l, m) decomposition, matrix and oracle comparison
    symmetry    class flags (Φ⊥, Φ_s, Φ₀) of one state up to a horizon
    moments     coefficient table a_n, b_n and limit moments
    conjecture  b_{n+1} = a_n + 1 evidence
    verify-all  every identity check, one JSON summary

Exit status: 0 when every check in the report passes, 1 when one fails,
2 on invalid input.

Usage:
    python -m hadamard_lab walk --phi "1,0" --n 3
    python -m hadamard_lab xi --l 3 --m 1
    python -m hadamard_lab verify-all --verbose
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Literal, Sequence

from pydantic import BaseModel, Field, ValidationError

from hadamard_lab import __version__, config, reports
from hadamard_lab.api import schemas
from hadamard_lab.core.scalars import Backend
from hadamard_lab.errors import WalkLabError
from hadamard_lab.inputs import resolve_state
from hadamard_lab.verification import run_verification

logger = logging.getLogger("hadamard.cli")

DEFAULT_COEFFICIENT_RANGE = 10
DEFAULT_MOMENT_ORDER = 14
DEFAULT_CONJECTURE_RANGE = 30


class RunConfig(BaseModel):
    """Options shared by every subcommand."""

    backend: Backend = Backend.EXACT
    horizon: int | None = Field(None, ge=0, description="n for walk, n_max for the range commands")
    output_format: Literal["json", "csv"] = "json"
    out: Path | None = None


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def _positive(text: str) -> int:
    value = _non_negative(text)
    if value == 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--backend",
        choices=[backend.value for backend in Backend],
        default=Backend.EXACT.value,
        help="Scalar backend (default: exact)",
    )
    common.add_argument(
        "--format",
        dest="output_format",
        choices=["json", "csv"],
        default="json",
        help="Output format; csv is available for walk only (default: json)",
    )
    common.add_argument("--out", type=Path, default=None, help="Write to a file instead of stdout")
    common.add_argument("--verbose", action="store_true", help="Log at DEBUG level to stderr")

    parser = argparse.ArgumentParser(
        prog="hadamard-lab",
        description="Exact Hadamard walk laboratory.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    walk = commands.add_parser("walk", parents=[common], help="Distribution of X_n")
    walk.add_argument("--phi", required=True, help='Initial state, e.g. "1,0" or "1/sqrt2,i/sqrt2"')
    walk.add_argument("--n", type=_non_negative, required=True, help="Number of steps")

    xi = commands.add_parser("xi", parents=[common], help="Ξ(l, m) closed form vs oracle")
    xi.add_argument("--l", type=_non_negative, required=True, help="Number of P factors")
    xi.add_argument("--m", type=_non_negative, required=True, help="Number of Q factors")

    symmetry = commands.add_parser("symmetry", parents=[common], help="Class flags of one state")
    symmetry.add_argument("--phi", required=True, help="Initial state")
    symmetry.add_argument(
        "--n-max",
        type=_positive,
        default=config.DEFAULT_HORIZON,
        help=f"Horizon (default: {config.DEFAULT_HORIZON})",
    )

    moments = commands.add_parser("moments", parents=[common], help="a_n, b_n and limit moments")
    moments.add_argument(
        "--n-max",
        type=_positive,
        default=DEFAULT_COEFFICIENT_RANGE,
        help=f"Largest n for a_n, b_n (default: {DEFAULT_COEFFICIENT_RANGE})",
    )
    moments.add_argument(
        "--m-max",
        type=_non_negative,
        default=DEFAULT_MOMENT_ORDER,
        help=f"Largest moment order (default: {DEFAULT_MOMENT_ORDER})",
    )

    conjecture = commands.add_parser("conjecture", parents=[common], help="b_{n+1} = a_n + 1")
    conjecture.add_argument(
        "--n-max",
        type=_positive,
        default=DEFAULT_CONJECTURE_RANGE,
        help=f"Largest n (default: {DEFAULT_CONJECTURE_RANGE})",
    )

    commands.add_parser("verify-all", parents=[common], help="Run every identity check")
    return parser


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else config.LOG_LEVEL.upper(),
        format=config.LOG_FORMAT,
        datefmt=config.LOG_DATEFMT,
        stream=sys.stderr,
    )


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_walk(phi: str, n: int, run: RunConfig) -> schemas.WalkReport:
    return reports.walk_report(resolve_state(phi, run.backend), n)


def cmd_xi(l: int, m: int, run: RunConfig) -> schemas.XiReport:  # noqa: ARG001
    return reports.xi_report(l, m)


def cmd_symmetry(phi: str, n_max: int, run: RunConfig) -> schemas.SymmetryReport:
    return reports.symmetry_report(resolve_state(phi, run.backend), n_max)


def cmd_moments(n_max: int, m_max: int, run: RunConfig) -> schemas.MomentsReport:  # noqa: ARG001
    return reports.moments_report(n_max, m_max)


def cmd_conjecture(n_max: int, run: RunConfig) -> schemas.ConjectureReport:  # noqa: ARG001
    return reports.conjecture_report(n_max)


def cmd_verify_all(run: RunConfig) -> schemas.VerifyAllReport:  # noqa: ARG001
    return run_verification()


def _dispatch(args: argparse.Namespace, run: RunConfig):
    if args.command == "walk":
        return cmd_walk(args.phi, run.horizon, run)
    if args.command == "xi":
        return cmd_xi(args.l, args.m, run)
    if args.command == "symmetry":
        return cmd_symmetry(args.phi, run.horizon, run)
    if args.command == "moments":
        return cmd_moments(run.horizon, args.m_max, run)
    if args.command == "conjecture":
        return cmd_conjecture(run.horizon, run)
    return cmd_verify_all(run)


def render(report: BaseModel, run: RunConfig) -> str:
    if run.output_format == "csv":
        return reports.walk_csv(report)  # type: ignore[arg-type]
    return report.model_dump_json(by_alias=True, indent=2) + "\n"


def emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")
    logger.info("Report written to %s", out)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)

    if args.output_format == "csv" and args.command != "walk":
        print("error: csv output is only available for walk", file=sys.stderr)
        return 2
    try:
        run = RunConfig(
            backend=args.backend,
            horizon=getattr(args, "n", getattr(args, "n_max", None)),
            output_format=args.output_format,
            out=args.out,
        )
        report = _dispatch(args, run)
    except WalkLabError as exc:
        print(f"error: {exc.reason}", file=sys.stderr)
        return 2
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    emit(render(report, run), run.out)
    if not report.passed:
        logger.warning("%s: at least one check failed", args.command)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
