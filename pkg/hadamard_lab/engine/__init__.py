"""
Hadamard walk evolution on the line and on the finite cycle.
"""

from .state import Distribution, QubitState, WalkState
from .walk import (
    CirculantOperator,
    distribution,
    early_expectations,
    evolve,
    evolve_circulant,
    expectation,
    initial_state,
    iter_evolution,
    step,
)

__all__ = [
    "CirculantOperator",
    "Distribution",
    "QubitState",
    "WalkState",
    "distribution",
    "early_expectations",
    "evolve",
    "evolve_circulant",
    "expectation",
    "initial_state",
    "iter_evolution",
    "step",
]
