"""
Hadamard Lab - Walk Engine

Time evolution Ψ_k^(n+1) = Q·Ψ_{k−1}^(n) + P·Ψ_{k+1}^(n) on the integer line
(sparse map, support growing by one site per step) and on the (2N+1)-cycle
through the circulant operator. P sends amplitude toward k−1, Q toward k+1.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from hadamard_lab import config
from hadamard_lab.core.matrices import CoinMatrix, coin_constant
from hadamard_lab.core.scalars import Backend, zero
from hadamard_lab.engine.state import Distribution, Probability, QubitState, Vector, WalkState
from hadamard_lab.errors import NormalizationError

logger = logging.getLogger("hadamard.engine")


def _add(left: Vector | None, right: Vector | None, backend: Backend) -> Vector:
    if left is None and right is None:
        nothing = zero(backend)
        return (nothing, nothing)
    if left is None:
        return right
    if right is None:
        return left
    return (left[0] + right[0], left[1] + right[1])


def initial_state(phi: QubitState) -> WalkState:
    """Time 0: the whole amplitude φ sits on site 0."""
    if phi.norm2() != 1 and phi.backend is Backend.EXACT:
        raise NormalizationError(f"initial state {phi.label()} is not normalized")
    return WalkState(time=0, amplitudes={0: phi.vector()}, backend=phi.backend)


def step(state: WalkState) -> WalkState:
    P = coin_constant("P", state.backend)
    Q = coin_constant("Q", state.backend)
    amplitudes = state.amplitudes
    after: dict[int, Vector] = {}
    n = state.time + 1
    for site in range(-n, n + 1, 2):
        from_left = amplitudes.get(site - 1)
        from_right = amplitudes.get(site + 1)
        after[site] = _add(
            Q.apply(from_left) if from_left is not None else None,
            P.apply(from_right) if from_right is not None else None,
            state.backend,
        )
    return WalkState(time=n, amplitudes=after, backend=state.backend)


def iter_evolution(phi: QubitState) -> Iterator[WalkState]:
    """Yield Ψ^(0), Ψ^(1), ... indefinitely."""
    state = initial_state(phi)
    while True:
        yield state
        state = step(state)


def evolve(phi: QubitState, n: int) -> WalkState:
    if n < 0:
        raise ValueError(f"number of steps must be non-negative (got {n})")
    for state in iter_evolution(phi):
        if state.time == n:
            return state
    raise AssertionError("unreachable")


def distribution(state: WalkState) -> Distribution:
    components = {
        site: (left.abs2(), right.abs2())
        for site, (left, right) in sorted(state.amplitudes.items())
    }
    return Distribution(time=state.time, components=components, backend=state.backend)


def expectation(state: WalkState) -> Probability:
    return distribution(state).expectation()


def early_expectations(phi: QubitState) -> dict[int, Probability]:
    """
    Closed forms for the first three steps:
    E(X₁) = E(X₂) = −(αβ̄+ᾱβ) and E(X₃) = ½(|β|²−|α|²) − (αβ̄+ᾱβ).
    """
    bilinear = phi.bilinear()
    half = Fraction(1, 2) if phi.backend is Backend.EXACT else 0.5
    return {
        1: -bilinear,
        2: -bilinear,
        3: -half * phi.imbalance() - bilinear,
    }


# ---------------------------------------------------------------------------
# Finite cycle
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CirculantOperator:
    """
    Block-circulant walk operator on sites −N..N with periodic wrap.

    Block row i holds P at column i+1 and Q at column i−1 (indices mod 2N+1).
    """

    half_size: int
    backend: Backend = Backend.EXACT

    def __post_init__(self) -> None:
        if self.half_size < 1:
            raise ValueError(f"cycle half size must be at least 1 (got {self.half_size})")

    @property
    def size(self) -> int:
        return 2 * self.half_size + 1

    def wrap(self, site: int) -> int:
        """Map any integer onto the representative in −N..N."""
        return (site + self.half_size) % self.size - self.half_size

    def block(self, row: int, column: int) -> CoinMatrix:
        """Block at (row, column) in index space 0..2N."""
        if (row + 1) % self.size == column % self.size:
            return coin_constant("P", self.backend)
        if (row - 1) % self.size == column % self.size:
            return coin_constant("Q", self.backend)
        return coin_constant("0", self.backend)

    def apply(self, state: WalkState) -> WalkState:
        P = coin_constant("P", self.backend)
        Q = coin_constant("Q", self.backend)
        after: dict[int, Vector] = {}
        for site in range(-self.half_size, self.half_size + 1):
            from_left = state.amplitudes.get(self.wrap(site - 1))
            from_right = state.amplitudes.get(self.wrap(site + 1))
            after[site] = _add(
                Q.apply(from_left) if from_left is not None else None,
                P.apply(from_right) if from_right is not None else None,
                self.backend,
            )
        return WalkState(time=state.time + 1, amplitudes=after, backend=self.backend)

    def to_matrix(self) -> np.ndarray:
        """Dense 2(2N+1) square complex matrix."""
        dim = 2 * self.size
        matrix = np.zeros((dim, dim), dtype=complex)
        for row in range(self.size):
            for column in ((row - 1) % self.size, (row + 1) % self.size):
                matrix[2 * row : 2 * row + 2, 2 * column : 2 * column + 2] = np.array(
                    self.block(row, column).to_complex_rows()
                )
        return matrix

    def is_unitary(self, tolerance: float | None = None) -> bool:
        tolerance = config.FLOAT_TOLERANCE if tolerance is None else tolerance
        matrix = self.to_matrix()
        return bool(np.allclose(matrix @ matrix.conj().T, np.eye(matrix.shape[0]), atol=tolerance))

    def exact_unitarity(self) -> bool:
        """U·U* = I checked block by block in exact arithmetic."""
        identity = coin_constant("I", self.backend)
        nothing = coin_constant("0", self.backend)
        for row in range(self.size):
            for other in range(self.size):
                total = nothing
                for column in ((row - 1) % self.size, (row + 1) % self.size):
                    total = total + self.block(row, column) @ self.block(other, column).adjoint()
                if total != (identity if row == other else nothing):
                    return False
        return True


def evolve_circulant(phi: QubitState, n: int, half_size: int) -> WalkState:
    """Evolve on the (2N+1)-cycle; equals ``evolve`` while n < N."""
    if n < 0:
        raise ValueError(f"number of steps must be non-negative (got {n})")
    operator = CirculantOperator(half_size=half_size, backend=phi.backend)
    state = initial_state(phi)
    for _ in range(n):
        state = operator.apply(state)
    logger.debug("Circulant evolution N=%d reached n=%d", half_size, n)
    return state
