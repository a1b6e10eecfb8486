"""Vector-space similarity and distance measures over term-frequency vectors."""

from __future__ import annotations

import math
from collections.abc import Set

from textsim.textproc import TermVector


def cosine(v1: TermVector, v2: TermVector) -> float:
    """Dot product divided by both L2 norms; 0 when either vector is empty."""
    n1, n2 = v1.norm(), v2.norm()
    if not n1 or not n2:
        return 0.0
    a, b = v1.weights, v2.weights
    dot = sum(a[t] * b[t] for t in sorted(a.keys() & b.keys()))
    return min(1.0, dot / (n1 * n2))


def dice(s1: Set[str], s2: Set[str]) -> float:
    if not s1 and not s2:
        return 1.0
    return 2 * len(s1 & s2) / (len(s1) + len(s2))


def jaccard(s1: Set[str], s2: Set[str]) -> float:
    if not s1 and not s2:
        return 1.0
    common = len(s1 & s2)
    return common / (len(s1) + len(s2) - common)


def _differences(v1: TermVector, v2: TermVector, pre_normalize: bool):
    if pre_normalize:
        v1, v2 = v1.unit(), v2.unit()
    a, b = v1.weights, v2.weights
    # sorted union keeps float summation order independent of argument order
    for term in sorted(a.keys() | b.keys()):
        yield a.get(term, 0.0) - b.get(term, 0.0)


def euclidean(v1: TermVector, v2: TermVector, pre_normalize: bool = False) -> float:
    return math.sqrt(sum(d * d for d in _differences(v1, v2, pre_normalize)))


def manhattan(v1: TermVector, v2: TermVector, pre_normalize: bool = False) -> float:
    """Sum of absolute per-term weight differences over the union of terms."""
    return sum(abs(d) for d in _differences(v1, v2, pre_normalize))
