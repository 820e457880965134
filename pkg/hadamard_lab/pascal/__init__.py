"""
Quantum Pascal's triangle: closed form of Ξ(l, m), brute-force oracles and
the site quadratic forms ᵗΞΞ.
"""

from .closed_form import XiDecomposition, coefficients, xi_closed
from .oracle import (
    CLUSTER_KINDS,
    classify_word,
    cluster_census,
    cluster_count,
    cluster_range,
    cluster_value,
    word_product,
    words,
    xi_clusters,
    xi_oracle,
)
from .quadratic import (
    QuadraticForm,
    difference_matrix,
    difference_shape,
    gram,
    quadratic_form,
)

__all__ = [
    "CLUSTER_KINDS",
    "QuadraticForm",
    "XiDecomposition",
    "classify_word",
    "cluster_census",
    "cluster_count",
    "cluster_range",
    "cluster_value",
    "coefficients",
    "difference_matrix",
    "difference_shape",
    "gram",
    "quadratic_form",
    "word_product",
    "words",
    "xi_clusters",
    "xi_closed",
    "xi_oracle",
]
