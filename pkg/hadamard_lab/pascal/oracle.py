"""
Hadamard Lab - Path Oracles

Brute-force counterparts of the closed form: Ξ(l, m) as an explicit sum over
every P/Q word, and the census of words by cluster class.

A word's class comes from its first and last letter, its cluster index γ
from its number of runs:

    P…P  → p, 2γ+1 runs        Q…Q → q, 2γ+1 runs
    P…Q  → r, 2γ runs          Q…P → s, 2γ runs

Every word in one class has the same value, so Ξ(l, m) is also
Σ_class count × value.
"""

from __future__ import annotations

import logging
from collections import Counter
from functools import reduce
from itertools import combinations, groupby
from math import comb
from operator import matmul

from hadamard_lab import config
from hadamard_lab.core.matrices import CoinMatrix, coin_constant
from hadamard_lab.errors import ClusterRangeError, EmptyWordError, OracleCapError

logger = logging.getLogger("hadamard.pascal")

CLUSTER_KINDS: tuple[str, ...] = ("p", "q", "r", "s")
_KIND_MATRIX = {"p": "P", "q": "Q", "r": "R", "s": "S"}


def _check_enumerable(l: int, m: int, cap: int | None) -> int:
    cap = config.ORACLE_CAP if cap is None else cap
    if l < 0 or m < 0:
        raise ValueError(f"l and m must be non-negative (got l={l}, m={m})")
    if l + m == 0:
        raise EmptyWordError("empty word: Ξ(0, 0) needs l + m ≥ 1")
    if l + m > cap:
        raise OracleCapError(f"l + m = {l + m} exceeds the oracle cap {cap}")
    return l + m


def words(l: int, m: int) -> list[str]:
    """All words with l P's and m Q's, in lexicographic order of Q positions."""
    n = l + m
    out = []
    for positions in combinations(range(n), m):
        letters = ["P"] * n
        for index in positions:
            letters[index] = "Q"
        out.append("".join(letters))
    return out


def word_product(word: str) -> CoinMatrix:
    """Left-to-right product of the letters of a word over the coin constants."""
    if not word:
        raise EmptyWordError("empty word has no product")
    return reduce(matmul, (coin_constant(letter) for letter in word))


def xi_oracle(l: int, m: int, cap: int | None = None) -> CoinMatrix:
    """Ξ(l, m) by summing all C(l+m, l) word products."""
    n = _check_enumerable(l, m, cap)
    total = coin_constant("0")
    count = 0
    for word in words(l, m):
        total = total + word_product(word)
        count += 1
    logger.debug("Oracle Ξ(%d, %d): summed %d words of length %d", l, m, count, n)
    return total


# ---------------------------------------------------------------------------
# Clusters
# ---------------------------------------------------------------------------

def classify_word(word: str) -> tuple[str, int]:
    """Return (kind, γ) for a P/Q word."""
    if not word:
        raise EmptyWordError("empty word has no cluster class")
    runs = sum(1 for _ in groupby(word))
    first, last = word[0], word[-1]
    if first == last:
        return ("p" if first == "P" else "q", (runs - 1) // 2)
    return ("r" if first == "P" else "s", runs // 2)


def cluster_range(kind: str, l: int, m: int) -> range:
    """Admissible γ for a kind with at least two runs."""
    if kind == "p":
        return range(1, min(l - 1, m) + 1)
    if kind == "q":
        return range(1, min(l, m - 1) + 1)
    if kind in ("r", "s"):
        return range(1, min(l, m) + 1)
    raise ClusterRangeError(f"unknown cluster kind {kind!r}; expected one of p, q, r, s")


def _single_run(kind: str, l: int, m: int, gamma: int) -> bool:
    """P^l (kind p, m = 0) and Q^m (kind q, l = 0) are the γ = 0 classes."""
    if gamma != 0:
        return False
    return (kind == "p" and m == 0 and l >= 1) or (kind == "q" and l == 0 and m >= 1)


def _check_cluster(kind: str, l: int, m: int, gamma: int) -> None:
    admissible = cluster_range(kind, l, m)
    if gamma in admissible or _single_run(kind, l, m, gamma):
        return
    raise ClusterRangeError(
        f"γ={gamma} outside the range [{admissible.start}, {admissible.stop - 1}] "
        f"for kind {kind} at l={l}, m={m}"
    )


def cluster_count(kind: str, l: int, m: int, gamma: int) -> int:
    """Number of words of a cluster class, from its binomial closed form."""
    _check_cluster(kind, l, m, gamma)
    if _single_run(kind, l, m, gamma):
        return 1
    if kind == "p":
        return comb(l - 1, gamma) * comb(m - 1, gamma - 1)
    if kind == "q":
        return comb(l - 1, gamma - 1) * comb(m - 1, gamma)
    return comb(l - 1, gamma - 1) * comb(m - 1, gamma - 1)


def cluster_value(kind: str, l: int, m: int, gamma: int) -> CoinMatrix:
    """Common value of every word in a cluster class."""
    _check_cluster(kind, l, m, gamma)
    sign = -1 if (m + gamma) % 2 else 1
    if kind == "q":
        sign = -sign
    return coin_constant(_KIND_MATRIX[kind]).scale(sign).scaled(l + m - 1)


def cluster_census(l: int, m: int, cap: int | None = None) -> Counter[tuple[str, int]]:
    """Count every word with l P's and m Q's by (kind, γ)."""
    _check_enumerable(l, m, cap)
    return Counter(classify_word(word) for word in words(l, m))


def xi_clusters(l: int, m: int) -> CoinMatrix:
    """Ξ(l, m) as Σ over cluster classes of count × value."""
    if l + m == 0:
        raise EmptyWordError("empty word: Ξ(0, 0) needs l + m ≥ 1")
    total = coin_constant("0")
    for kind in CLUSTER_KINDS:
        gammas = list(cluster_range(kind, l, m))
        if _single_run(kind, l, m, 0):
            gammas.insert(0, 0)
        for gamma in gammas:
            count = cluster_count(kind, l, m, gamma)
            if count:
                total = total + cluster_value(kind, l, m, gamma).scale(count)
    return total
