"""
Hadamard Lab - Verification Suite

Every identity the lab is built to reproduce, run end to end and collected
into one ``VerifyAllReport``. A check that raises a library error counts as
failed with the error as detail.
"""

from __future__ import annotations

import logging
import time
from fractions import Fraction
from math import comb
from typing import Callable

from hadamard_lab import config
from hadamard_lab.api import schemas
from hadamard_lab.core.matrices import coin_relations, verify_table
from hadamard_lab.core.scalars import INV_SQRT2, I_UNIT, ONE, ZERO
from hadamard_lab.engine.state import QubitState
from hadamard_lab.engine.walk import distribution, evolve, evolve_circulant, iter_evolution
from hadamard_lab.errors import WalkLabError
from hadamard_lab.moments.expectation import conjecture_check, table_check
from hadamard_lab.moments.limit import QSqrt2, j_recursion, limit_moment, moment_quadrature
from hadamard_lab.pascal.closed_form import coefficients, xi_closed
from hadamard_lab.pascal.oracle import (
    CLUSTER_KINDS,
    cluster_census,
    cluster_count,
    cluster_range,
    xi_oracle,
)
from hadamard_lab.pascal.quadratic import quadratic_form
from hadamard_lab.symmetry.classes import lemma1_trace, theorem2_sweep
from hadamard_lab.symmetry.states import exact_test_states, phase_variants, sweep_population

logger = logging.getLogger("hadamard.verify")

Check = Callable[[], tuple[bool, str]]

# Printed decompositions: (l, m) -> integer weights of (P, Q, R, S) times (1/√2)^(n−1)
WORKED_EXAMPLES: dict[tuple[int, int], tuple[int, int, int, int]] = {
    (4, 0): (1, 0, 0, 0),
    (3, 1): (2, 0, 1, 1),
    (2, 2): (-1, 1, 0, 0),
    (1, 3): (0, -2, 1, 1),
    (0, 4): (0, -1, 0, 0),
}

ORACLE_RANGE = 12
CONJECTURE_RANGE = 30
QUADRATURE_RANGE = 14
RECURSION_RANGE = 15
CONSERVATION_STEPS = 200
CIRCULANT_RANGE = 12
FORM_RANGE = 14
FORM_STATES = 20


def _pairs(limit: int) -> list[tuple[int, int]]:
    return [(l, n - l) for n in range(1, limit + 1) for l in range(n + 1)]


def _mirror_states() -> list[QubitState]:
    plus = QubitState(INV_SQRT2, I_UNIT * INV_SQRT2)
    minus = QubitState(INV_SQRT2, -(I_UNIT * INV_SQRT2))
    return phase_variants(plus) + phase_variants(minus)


def check_product_table() -> tuple[bool, str]:
    failures = verify_table().failures()
    return not failures, ", ".join(f"{c.row}{c.column}" for c in failures)


def check_coin_relations() -> tuple[bool, str]:
    failures = [result.name for result in coin_relations() if not result.passed]
    return not failures, ", ".join(failures)


def check_worked_examples() -> tuple[bool, str]:
    wrong = [
        f"Ξ{pair}"
        for pair, weights in WORKED_EXAMPLES.items()
        if coefficients(*pair).integer_weights() != weights
        or coefficients(*pair).matrix() != xi_closed(*pair)
    ]
    return not wrong, ", ".join(wrong)


def check_closed_vs_oracle() -> tuple[bool, str]:
    wrong = [f"{pair}" for pair in _pairs(ORACLE_RANGE) if xi_closed(*pair) != xi_oracle(*pair)]
    return not wrong, f"{len(_pairs(ORACLE_RANGE))} pairs; mismatches: {', '.join(wrong) or 'none'}"


def check_coefficients() -> tuple[bool, str]:
    wrong = []
    for pair in _pairs(ORACLE_RANGE):
        decomposition = coefficients(*pair)
        if decomposition.r != decomposition.s or decomposition.matrix() != xi_closed(*pair):
            wrong.append(str(pair))
    return not wrong, ", ".join(wrong)


def check_cluster_counts() -> tuple[bool, str]:
    wrong = []
    for l, m in _pairs(ORACLE_RANGE):
        census = cluster_census(l, m)
        for (kind, gamma), count in census.items():
            if cluster_count(kind, l, m, gamma) != count:
                wrong.append(f"{kind}{(l, m, gamma)}")
        for kind in CLUSTER_KINDS:
            for gamma in cluster_range(kind, l, m):
                if cluster_count(kind, l, m, gamma) != census.get((kind, gamma), 0):
                    wrong.append(f"{kind}{(l, m, gamma)}")
        if sum(census.values()) != comb(l + m, l):
            wrong.append(f"word total at {(l, m)}")
    return not wrong, ", ".join(wrong)


def check_coefficient_table() -> tuple[bool, str]:
    wrong = [str(row.n) for row in table_check() if not row.passed]
    return not wrong, ", ".join(wrong)


def check_conjecture() -> tuple[bool, str]:
    report = conjecture_check(CONJECTURE_RANGE)
    wrong = [str(row.n) for row in report.rows if not row.holds]
    return not wrong, f"n ≤ {CONJECTURE_RANGE}; failures: {', '.join(wrong) or 'none'}"


def check_limit_moments() -> tuple[bool, str]:
    second = limit_moment(2).value == QSqrt2(Fraction(1), Fraction(-1, 2))
    worst = max(
        abs(moment_quadrature(2 * n) - float(limit_moment(2 * n)))
        for n in range(QUADRATURE_RANGE // 2 + 1)
    )
    recursion = j_recursion(RECURSION_RANGE).passed
    return second and worst <= 1e-8 and recursion, f"max quadrature gap {worst:.3g}"


def check_lemma1() -> tuple[bool, str]:
    horizon = config.DEFAULT_HORIZON
    wrong = [
        phi.label()
        for phi in _mirror_states()
        if not all(residual.vanishes for residual in lemma1_trace(phi, horizon))
    ]
    return not wrong, f"n ≤ {horizon}; nonzero: {', '.join(wrong) or 'none'}"


def check_theorem2() -> tuple[bool, str]:
    report = theorem2_sweep(sweep_population(), config.DEFAULT_HORIZON)
    return report.passed, (
        f"{len(report.entries)} states, {report.count(True)} in Φ⊥, "
        f"{len(report.disagreements())} disagreements"
    )


def check_conservation() -> tuple[bool, str]:
    phi = QubitState(ONE, ZERO)
    for state in iter_evolution(phi):
        if state.total_probability() != 1:
            return False, f"total probability broken at n={state.time}"
        if state.time >= CONSERVATION_STEPS:
            break
    return True, f"n ≤ {CONSERVATION_STEPS}"


def check_circulant() -> tuple[bool, str]:
    phi = QubitState(ONE, ZERO)
    for half_size in range(1, CIRCULANT_RANGE + 1):
        for n in range(half_size):
            if not evolve_circulant(phi, n, half_size).agrees_with(evolve(phi, n)):
                return False, f"N={half_size}, n={n}"
    return True, f"n < N ≤ {CIRCULANT_RANGE}"


def check_quadratic_form() -> tuple[bool, str]:
    states = list(exact_test_states())[:FORM_STATES]
    for n in range(1, FORM_RANGE + 1):
        form = quadratic_form(n)
        for phi in states:
            if distribution(evolve(phi, n)).probabilities != form.distribution(phi):
                return False, f"n={n}, φ={phi.label()}"
    return True, f"{len(states)} states, n ≤ {FORM_RANGE}"


CHECKS: dict[str, Check] = {
    "product table": check_product_table,
    "coin relations": check_coin_relations,
    "worked Ξ examples": check_worked_examples,
    "closed form = oracle": check_closed_vs_oracle,
    "coefficients = closed form": check_coefficients,
    "cluster counts": check_cluster_counts,
    "coefficient table": check_coefficient_table,
    "b_{n+1} = a_n + 1": check_conjecture,
    "limit moments": check_limit_moments,
    "mirror identity": check_lemma1,
    "class equality sweep": check_theorem2,
    "probability conservation": check_conservation,
    "circulant agreement": check_circulant,
    "engine = quadratic form": check_quadratic_form,
}


def run_verification(names: list[str] | None = None) -> schemas.VerifyAllReport:
    selected = CHECKS if names is None else {name: CHECKS[name] for name in names}
    results = []
    for name, check in selected.items():
        started = time.perf_counter()
        try:
            passed, detail = check()
        except WalkLabError as exc:
            passed, detail = False, exc.reason
        elapsed = time.perf_counter() - started
        log = logger.info if passed else logger.warning
        log("Check %-28s %s in %.2fs", name, "passed" if passed else "FAILED", elapsed)
        results.append(schemas.CheckModel(name=name, passed=passed, detail=detail))
    return schemas.VerifyAllReport(checks=results, passed=all(r.passed for r in results))
