"""
Hadamard Lab - Initial-State Classes

Three classes of initial states and the checks relating them:
- Φ⊥: |α| = |β| and αβ̄ + ᾱβ = 0
- Φ_s: P(X_n = k) = P(X_n = −k) for every n and k
- Φ₀: E(X_n) = 0 for every n

Membership in Φ⊥ is decided exactly. Φ_s and Φ₀ are infinite-horizon
properties and are scanned up to a horizon; the first three steps already
expose every exact state outside Φ⊥.

For φ ∈ Φ⊥ the mirror identity Ψ_k^(n) = (−1)^n (±i) J Ψ_{−k}^(n) holds,
with +i when β = iα and −i when β = −iα.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable

from hadamard_lab import config
from hadamard_lab.core.scalars import (
    AnyScalar,
    Backend,
    ComplexF,
    DyadicGaussian,
    values_agree,
)
from hadamard_lab.engine.state import Probability, QubitState, Vector, WalkState
from hadamard_lab.engine.walk import distribution, iter_evolution

logger = logging.getLogger("hadamard.symmetry")


def _tolerance(tolerance: float | None) -> float:
    return config.FLOAT_TOLERANCE if tolerance is None else tolerance


def is_perp(phi: QubitState, tolerance: float | None = None) -> bool:
    tolerance = _tolerance(tolerance)
    return values_agree(phi.alpha.abs2(), phi.beta.abs2(), tolerance) and values_agree(
        phi.bilinear(), Fraction(0), tolerance
    )


def perp_branch(phi: QubitState, tolerance: float | None = None) -> int | None:
    """+1 when β = iα, −1 when β = −iα, None outside Φ⊥."""
    if not is_perp(phi, tolerance):
        return None
    rotated = phi.alpha.times_i()
    if phi.backend is Backend.EXACT:
        return 1 if phi.beta == rotated else -1
    beta, rotated = phi.beta.to_complex(), rotated.to_complex()
    return 1 if abs(beta - rotated) <= abs(beta + rotated) else -1


# ---------------------------------------------------------------------------
# Mirror identity
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MirrorResidual:
    """Largest squared norm of Ψ_k − (−1)^n(±i)JΨ_{−k} over all sites."""

    n: int
    residual: Probability
    branch: int
    applicable: bool

    @property
    def vanishes(self) -> bool:
        if isinstance(self.residual, float):
            return self.residual <= config.FLOAT_TOLERANCE
        return self.residual == 0

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "residual": self.residual,
            "branch": "+i" if self.branch > 0 else "-i",
            "applicable": self.applicable,
            "note": "" if self.applicable else "lemma not applicable",
        }


def _mirror_factor(backend: Backend, sign: int) -> AnyScalar:
    if backend is Backend.EXACT:
        return DyadicGaussian(0, sign)
    return ComplexF(0.0, float(sign))


def _mirror_residual(state: WalkState, branch: int) -> Probability:
    factor = _mirror_factor(state.backend, branch * (-1 if state.time % 2 else 1))
    worst: Probability = Fraction(0) if state.backend is Backend.EXACT else 0.0
    for site in state.amplitudes:
        left, right = state.amplitude(site)
        mirror_left, mirror_right = state.amplitude(-site)
        # J·(x, y) = (−y, x)
        gap_left = left - factor * (-mirror_right)
        gap_right = right - factor * mirror_left
        size = gap_left.abs2() + gap_right.abs2()
        if size > worst:
            worst = size
    return worst


def lemma1_trace(phi: QubitState, n_max: int) -> list[MirrorResidual]:
    """Mirror residuals for n = 0..n_max along one trajectory."""
    branch = perp_branch(phi)
    applicable = branch is not None
    if not applicable:
        logger.debug("State %s is outside Φ⊥; mirror identity not applicable", phi.label())
        branch = 1
    trace = []
    for state in iter_evolution(phi):
        trace.append(MirrorResidual(state.time, _mirror_residual(state, branch), branch, applicable))
        if state.time >= n_max:
            break
    return trace


def lemma1_residual(phi: QubitState, n: int) -> MirrorResidual:
    return lemma1_trace(phi, n)[-1]


# ---------------------------------------------------------------------------
# Horizon scans
# ---------------------------------------------------------------------------

def _is_zero(value: Probability, tolerance: float) -> bool:
    return values_agree(value, Fraction(0), tolerance)


def _scan(
    phi: QubitState,
    n_max: int,
    tolerance: float,
    want_asymmetry: bool = True,
    want_nonzero_mean: bool = True,
) -> tuple[int | None, int | None]:
    """First n ≤ n_max with an asymmetric distribution / nonzero mean."""
    if n_max < 1:
        raise ValueError(f"horizon must be at least 1 (got {n_max})")
    first_asymmetry: int | None = None
    first_nonzero_mean: int | None = None
    for state in iter_evolution(phi):
        if state.time > n_max:
            break
        dist = distribution(state)
        if want_asymmetry and first_asymmetry is None and not dist.is_symmetric(tolerance):
            first_asymmetry = state.time
        if want_nonzero_mean and first_nonzero_mean is None and not _is_zero(dist.expectation(), tolerance):
            first_nonzero_mean = state.time
        if (first_asymmetry is not None or not want_asymmetry) and (
            first_nonzero_mean is not None or not want_nonzero_mean
        ):
            break
    return first_asymmetry, first_nonzero_mean


def is_symmetric_to(phi: QubitState, n_max: int, tolerance: float | None = None) -> bool:
    first, _ = _scan(phi, n_max, _tolerance(tolerance), want_nonzero_mean=False)
    return first is None


def is_zero_mean_to(phi: QubitState, n_max: int, tolerance: float | None = None) -> bool:
    _, first = _scan(phi, n_max, _tolerance(tolerance), want_asymmetry=False)
    return first is None


@dataclass(frozen=True)
class ClassLabel:
    """Membership flags of one state; for exact states all three must agree."""

    in_perp: bool
    symmetric_to_horizon: bool
    zero_mean_to_horizon: bool
    horizon: int
    first_asymmetry_n: int | None = None
    first_nonzero_mean_n: int | None = None

    @property
    def agree(self) -> bool:
        return self.in_perp == self.symmetric_to_horizon == self.zero_mean_to_horizon

    @property
    def first_violation_n(self) -> int | None:
        found = [n for n in (self.first_asymmetry_n, self.first_nonzero_mean_n) if n is not None]
        return min(found) if found else None

    def flags(self) -> tuple[bool, bool, bool]:
        return (self.in_perp, self.symmetric_to_horizon, self.zero_mean_to_horizon)


def classify(
    phi: QubitState,
    horizon: int | None = None,
    tolerance: float | None = None,
) -> ClassLabel:
    """Scan up to ``horizon`` steps, stopping once both violations are seen."""
    horizon = config.DEFAULT_HORIZON if horizon is None else horizon
    tolerance = _tolerance(tolerance)
    first_asymmetry, first_nonzero_mean = _scan(phi, horizon, tolerance)
    return ClassLabel(
        in_perp=is_perp(phi, tolerance),
        symmetric_to_horizon=first_asymmetry is None,
        zero_mean_to_horizon=first_nonzero_mean is None,
        horizon=horizon,
        first_asymmetry_n=first_asymmetry,
        first_nonzero_mean_n=first_nonzero_mean,
    )


# ---------------------------------------------------------------------------
# Sweep
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SweepEntry:
    phi: QubitState
    label: ClassLabel


@dataclass(frozen=True)
class SweepReport:
    n_max: int
    entries: tuple[SweepEntry, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return not self.disagreements()

    def disagreements(self) -> list[SweepEntry]:
        return [entry for entry in self.entries if not entry.label.agree]

    def count(self, in_perp: bool) -> int:
        return sum(1 for entry in self.entries if entry.label.in_perp is in_perp)


def theorem2_sweep(
    states: Iterable[QubitState],
    n_max: int | None = None,
    tolerance: float | None = None,
) -> SweepReport:
    """Classify every state and collect the ones whose three flags disagree."""
    n_max = config.DEFAULT_HORIZON if n_max is None else n_max
    entries = tuple(SweepEntry(phi, classify(phi, n_max, tolerance)) for phi in states)
    report = SweepReport(n_max=n_max, entries=entries)
    for entry in report.disagreements():
        logger.warning(
            "Class flags disagree for %s: perp=%s symmetric=%s zero_mean=%s",
            entry.phi.label(),
            *entry.label.flags(),
        )
    logger.info(
        "Swept %d states to n=%d: %d in Φ⊥, %d disagreements",
        len(entries),
        n_max,
        report.count(True),
        len(report.disagreements()),
    )
    return report
