"""Tests for the hadamard-lab command line."""

from __future__ import annotations

import json
from pathlib import Path
import sys

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from hadamard_lab.cli import RunConfig, _dispatch, build_parser, main


def _run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_walk_json(capsys) -> None:
    code, out, _ = _run(capsys, "walk", "--phi", "1,0", "--n", "3")
    assert code == 0
    report = json.loads(out)
    assert report["backend"] == "exact"
    assert report["total"] == "1"
    assert report["expectation"] == "-1/2"
    rows = {row["k"]: row for row in report["sites"]}
    assert rows[-1] == {"k": -1, "pL": "1/2", "pR": "1/8", "p": "5/8"}
    assert report["passed"] is True


def test_walk_csv(capsys) -> None:
    code, out, _ = _run(capsys, "walk", "--phi", "1,0", "--n", "2", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["k,p", "-2,1/4", "0,1/2", "2,1/4"]


def test_walk_float_backend(capsys) -> None:
    code, out, _ = _run(capsys, "walk", "--phi", "0.6,0.8i", "--n", "4", "--backend", "float")
    assert code == 0
    report = json.loads(out)
    assert report["backend"] == "float"
    assert float(report["total"]) == pytest.approx(1.0)


def test_csv_only_for_walk(capsys) -> None:
    code, _, err = _run(capsys, "xi", "--l", "2", "--m", "1", "--format", "csv")
    assert code == 2
    assert "csv" in err


def test_inexact_state_on_exact_backend(capsys) -> None:
    code, out, err = _run(capsys, "walk", "--phi", "0.6,0.8", "--n", "1")
    assert code == 2
    assert out == ""
    assert "float backend" in err


def test_unnormalized_state(capsys) -> None:
    code, _, err = _run(capsys, "symmetry", "--phi", "1,1")
    assert code == 2
    assert "expected 1" in err


def test_xi_report(capsys) -> None:
    code, out, _ = _run(capsys, "xi", "--l", "3", "--m", "1")
    assert code == 0
    report = json.loads(out)
    assert report["oracle_checked"] is True
    assert report["oracle_diff"] == "0"
    assert report["notice"] is None
    assert report["passed"] is True


def test_xi_above_oracle_cap(capsys) -> None:
    code, out, _ = _run(capsys, "xi", "--l", "12", "--m", "12")
    assert code == 0
    report = json.loads(out)
    assert report["oracle_checked"] is False
    assert "cap" in report["notice"]


def test_xi_empty_word(capsys) -> None:
    code, _, err = _run(capsys, "xi", "--l", "0", "--m", "0")
    assert code == 2
    assert "empty word" in err


def test_symmetry_report(capsys) -> None:
    code, out, _ = _run(capsys, "symmetry", "--phi", "1/sqrt2,i/sqrt2", "--n-max", "12")
    assert code == 0
    report = json.loads(out)
    assert report["in_perp"] is True
    assert report["symmetric"] is True
    assert report["zero_mean"] is True
    assert report["first_violation_n"] is None


def test_symmetry_report_outside_perp(capsys) -> None:
    code, out, _ = _run(capsys, "symmetry", "--phi", "1,0", "--n-max", "12")
    assert code == 0
    report = json.loads(out)
    assert report["in_perp"] is False
    assert report["first_violation_n"] == 3


def test_moments_report(capsys) -> None:
    code, out, _ = _run(capsys, "moments", "--n-max", "4", "--m-max", "6")
    assert code == 0
    report = json.loads(out)
    assert [row["n"] for row in report["coefficients"]] == [1, 2, 3, 4]
    assert report["coefficients"][3]["b"] == "3/2"
    assert [row["m"] for row in report["moments"]] == [2, 4, 6]
    assert report["moments"][0]["exact"] == {"r0": "1", "r1": "-1/2"}
    assert "float" in report["moments"][0]


def test_conjecture_report(capsys) -> None:
    code, out, _ = _run(capsys, "conjecture", "--n-max", "6")
    assert code == 0
    report = json.loads(out)
    assert len(report["rows"]) == 6
    assert all(row["holds"] for row in report["rows"])


def test_out_file(capsys, tmp_path: Path) -> None:
    target = tmp_path / "reports" / "walk.json"
    code, out, _ = _run(capsys, "walk", "--phi", "0,1", "--n", "1", "--out", str(target))
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text(encoding="utf-8"))["n"] == 1


def test_argument_validation() -> None:
    parser = build_parser()
    with pytest.raises(SystemExit):
        parser.parse_args(["walk", "--phi", "1,0", "--n", "-1"])
    with pytest.raises(SystemExit):
        parser.parse_args(["symmetry", "--phi", "1,0", "--n-max", "0"])
    with pytest.raises(SystemExit):
        parser.parse_args(["walk", "--phi", "1,0", "--n", "1", "--backend", "decimal"])


def test_run_config_defaults() -> None:
    run = RunConfig()
    assert run.backend.value == "exact"
    assert run.output_format == "json"
    assert run.out is None


def test_commands_read_horizon_from_run_config() -> None:
    args = build_parser().parse_args(["walk", "--phi", "1,0", "--n", "3"])
    report = _dispatch(args, RunConfig(horizon=2))
    assert report.n == 2
    args = build_parser().parse_args(["conjecture", "--n-max", "9"])
    report = _dispatch(args, RunConfig(horizon=4))
    assert report.n_max == 4
    assert len(report.rows) == 4
