"""
Hadamard Lab - Test-State Populations

Exact unit states, their exact global phases, and the mixed exact/floating
population used by the class sweep.
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache
from itertools import product

import numpy as np

from hadamard_lab.core.scalars import I_UNIT, OMEGA, ONE, ComplexF, DyadicGaussian
from hadamard_lab.engine.state import QubitState

# Largest √2 exponent with new unit vectors: a² + b² + c² + d² = 2^s has no
# primitive solutions beyond s = 2, so 4 leaves margin.
_MAX_HALFPOW = 4

SWEEP_SIZE = 200
SWEEP_SEED = 20260131


def _four_squares(target: int) -> list[tuple[int, int, int, int]]:
    bound = math.isqrt(target)
    return [
        combo
        for combo in product(range(-bound, bound + 1), repeat=4)
        if sum(x * x for x in combo) == target
    ]


@lru_cache(maxsize=1)
def exact_test_states() -> tuple[QubitState, ...]:
    """
    Every unit vector (α, β) with α, β ∈ Z[i]/√2^s for one shared s.

    There are 48 of them; 16 lie in Φ⊥.
    """
    seen: dict[tuple[DyadicGaussian, DyadicGaussian], QubitState] = {}
    for halfpow in range(_MAX_HALFPOW + 1):
        for a, b, c, d in _four_squares(1 << halfpow):
            alpha = DyadicGaussian(a, b, halfpow)
            beta = DyadicGaussian(c, d, halfpow)
            if (alpha, beta) not in seen:
                seen[(alpha, beta)] = QubitState(alpha, beta)
    return tuple(seen.values())


EXACT_PHASES: tuple[DyadicGaussian, ...] = (
    ONE,
    I_UNIT,
    -ONE,
    -I_UNIT,
    OMEGA,
    OMEGA.conjugate(),
)


def phase_variants(phi: QubitState) -> list[QubitState]:
    """φ multiplied by each exactly representable phase."""
    return [phi.with_phase(phase) for phase in EXACT_PHASES]


def perp_rotations(count: int) -> list[QubitState]:
    """e^{iθ}(1, ±i)/√2 for ``count`` evenly spaced θ per branch (float backend)."""
    root = 1 / math.sqrt(2)
    states = []
    for j in range(count):
        phase = cmath.exp(2j * math.pi * j / count)
        for branch in (1j, -1j):
            states.append(
                QubitState(
                    ComplexF.from_complex(phase * root),
                    ComplexF.from_complex(phase * branch * root),
                )
            )
    return states


def random_states(count: int, seed: int = SWEEP_SEED) -> list[QubitState]:
    """Haar-like random states drawn from a seeded generator (float backend)."""
    rng = np.random.default_rng(seed)
    states = []
    for _ in range(count):
        raw = rng.normal(size=4)
        raw /= np.linalg.norm(raw)
        alpha = complex(raw[0], raw[1])
        beta = complex(raw[2], raw[3])
        states.append(QubitState.from_input(alpha, beta))
    return states


def sweep_population(size: int = SWEEP_SIZE, seed: int = SWEEP_SEED) -> list[QubitState]:
    """
    All exact test states, then floating Φ⊥ rotations and random states in
    equal shares until ``size`` states are collected.
    """
    exact = list(exact_test_states())
    remaining = max(size - len(exact), 0)
    rotations = perp_rotations(remaining // 4)
    randoms = random_states(remaining - len(rotations), seed)
    return (exact + rotations + randoms)[:size]
