"""Edit-based sequence measures: Levenshtein and Jaro-Winkler.

All functions accept any sequences of hashable items, so the same code works
on strings (character level) and on token lists (word level).
"""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Hashable, Sequence
from dataclasses import dataclass
from functools import lru_cache

from textsim.errors import InvalidParams


@dataclass(frozen=True)
class EditParams:
    jw_prefix_weight: float = 0.1
    jw_boost_threshold: float = 0.7
    jw_max_prefix: int = 4

    def __post_init__(self):
        p, ell = self.jw_prefix_weight, self.jw_max_prefix
        if not 0 <= p <= 0.25:
            raise InvalidParams(f"prefix weight must lie in [0, 0.25], got {p}")
        if ell < 0:
            raise InvalidParams(f"max prefix must be >= 0, got {ell}")
        if p * ell > 1:
            raise InvalidParams("prefix weight times max prefix exceeds 1")


@lru_cache(maxsize=1024)
def _match_masks(pattern: Sequence[Hashable]) -> dict:
    masks: dict = {}
    bit = 1
    for item in pattern:
        masks[item] = masks.get(item, 0) | bit
        bit <<= 1
    return masks


def levenshtein(seq_a: Sequence[Hashable], seq_b: Sequence[Hashable]) -> int:
    """Minimum number of insertions, deletions and substitutions.

    Bit-parallel column recurrence (Myers 1999, Hyyrö's formulation) using
    Python integers as unbounded bit vectors: one pass over the shorter input,
    the longer one encoded as per-symbol match masks.
    """
    if len(seq_a) > len(seq_b):
        seq_a, seq_b = seq_b, seq_a
    m = len(seq_b)
    if not seq_a:
        return m
    if seq_a == seq_b:
        return 0
    if not isinstance(seq_b, (str, tuple)):
        seq_b = tuple(seq_b)
    get = _match_masks(seq_b).get
    last = 1 << (m - 1)
    # Negative ints behave as infinite two's complement, and no step shifts
    # right, so the low m bits stay exact without masking.
    pv, mv, score = -1, 0, m
    for item in seq_a:
        eq = get(item, 0)
        xv = eq | mv
        xh = (((eq & pv) + pv) ^ pv) | eq
        ph = mv | ~(xh | pv)
        mh = pv & xh
        if ph & last:
            score += 1
        elif mh & last:
            score -= 1
        ph = (ph << 1) | 1
        pv = (mh << 1) | ~(xv | ph)
        mv = ph & xv
    return score


def levenshtein_normalized(seq_a: Sequence[Hashable], seq_b: Sequence[Hashable]) -> float:
    """Similarity ``1 - distance / max(len)``; two empty inputs score 1."""
    longest = max(len(seq_a), len(seq_b))
    if not longest:
        return 1.0
    return 1.0 - levenshtein(seq_a, seq_b) / longest


def _jaro_matches(s1: Sequence[Hashable], s2: Sequence[Hashable]) -> tuple[list, list]:
    window = max(0, max(len(s1), len(s2)) // 2 - 1)
    positions = defaultdict(list)
    for j, item in enumerate(s2):
        positions[item].append(j)
    # Greedy matching always takes the leftmost free position inside a window
    # whose lower edge only moves right, so the free positions of each symbol
    # form a suffix of its position list and one cursor per symbol suffices.
    cursor: dict = defaultdict(int)
    matched1, matched2 = [], []
    for i, item in enumerate(s1):
        pos = positions.get(item)
        if not pos:
            continue
        k = cursor[item]
        lo = i - window
        while k < len(pos) and pos[k] < lo:
            k += 1
        if k < len(pos) and pos[k] <= i + window:
            matched1.append(i)
            matched2.append(pos[k])
            k += 1
        cursor[item] = k
    return matched1, sorted(matched2)


def jaro(s1: Sequence[Hashable], s2: Sequence[Hashable]) -> float:
    if not s1 and not s2:
        return 1.0
    if not s1 or not s2:
        return 0.0
    idx1, idx2 = _jaro_matches(s1, s2)
    m = len(idx1)
    if not m:
        return 0.0
    half_transpositions = sum(s1[i] != s2[j] for i, j in zip(idx1, idx2)) / 2
    return (m / len(s1) + m / len(s2) + (m - half_transpositions) / m) / 3


def common_prefix_length(s1: Sequence[Hashable], s2: Sequence[Hashable], cap: int) -> int:
    n = 0
    for a, b in zip(s1, s2):
        if n >= cap or a != b:
            break
        n += 1
    return n


def jaro_winkler(
    s1: Sequence[Hashable], s2: Sequence[Hashable], params: EditParams = EditParams()
) -> float:
    """Jaro score boosted for a shared prefix when Jaro exceeds the threshold."""
    score = jaro(s1, s2)
    if score <= params.jw_boost_threshold:
        return score
    prefix = common_prefix_length(s1, s2, params.jw_max_prefix)
    return score + prefix * params.jw_prefix_weight * (1.0 - score)
