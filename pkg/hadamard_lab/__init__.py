"""
Hadamard walk laboratory.

Exact-arithmetic simulation of the one-dimensional Hadamard quantum walk
together with machine checks of its closed-form results: the mirror
identity, the equality of the orthogonal / symmetric / zero-mean initial
state classes, the quantum Pascal's triangle decomposition, the expectation
coefficient table and the limit-distribution moments.
"""

__version__ = "1.0.0"
