"""
Initial-state classes Φ⊥, Φ_s, Φ₀ and the mirror identity.
"""

from .classes import (
    ClassLabel,
    MirrorResidual,
    SweepEntry,
    SweepReport,
    classify,
    is_perp,
    is_symmetric_to,
    is_zero_mean_to,
    lemma1_residual,
    lemma1_trace,
    perp_branch,
    theorem2_sweep,
)
from .states import (
    EXACT_PHASES,
    exact_test_states,
    perp_rotations,
    phase_variants,
    random_states,
    sweep_population,
)

__all__ = [
    "ClassLabel",
    "EXACT_PHASES",
    "MirrorResidual",
    "SweepEntry",
    "SweepReport",
    "classify",
    "exact_test_states",
    "is_perp",
    "is_symmetric_to",
    "is_zero_mean_to",
    "lemma1_residual",
    "lemma1_trace",
    "perp_branch",
    "perp_rotations",
    "phase_variants",
    "random_states",
    "sweep_population",
    "theorem2_sweep",
]
