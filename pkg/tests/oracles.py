"""Reference implementations used only by the tests.

They follow the textbook definitions as literally as possible and share no
code with textsim.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache


def all_strings(alphabet: str, max_len: int) -> list[str]:
    return ["".join(p) for n in range(max_len + 1) for p in itertools.product(alphabet, repeat=n)]


def levenshtein_table(strings: list[str]) -> list[list[int]]:
    """Edit distance for every ordered pair of ``strings`` by the recursion

        d(a, b) = min(d(a[1:], b) + 1, d(a, b[1:]) + 1, d(a[1:], b[1:]) + [a0 != b0])

    memoized over suffixes. ``strings`` must be closed under taking suffixes.
    """
    index = {s: i for i, s in enumerate(strings)}
    tail = [index[s[1:]] if s else -1 for s in strings]
    order = sorted(range(len(strings)), key=lambda i: len(strings[i]))
    table: list[list[int]] = [[] for _ in strings]
    for i in order:
        a = strings[i]
        row = [0] * len(strings)
        table[i] = row
        for j in order:
            b = strings[j]
            if not a or not b:
                row[j] = len(a) + len(b)
                continue
            ta, tb = tail[i], tail[j]
            row[j] = min(table[ta][j] + 1, row[tb] + 1, table[ta][tb] + (a[0] != b[0]))
    return table


@lru_cache(maxsize=None)
def levenshtein_recursive(a: tuple, b: tuple) -> int:
    if not a or not b:
        return len(a) + len(b)
    return min(
        levenshtein_recursive(a[1:], b) + 1,
        levenshtein_recursive(a, b[1:]) + 1,
        levenshtein_recursive(a[1:], b[1:]) + (a[0] != b[0]),
    )


def jaro_flags(s1, s2) -> float:
    """Classical flag-array Jaro, quadratic scan."""
    if not s1 and not s2:
        return 1.0
    if not s1 or not s2:
        return 0.0
    window = max(0, max(len(s1), len(s2)) // 2 - 1)
    used1 = [False] * len(s1)
    used2 = [False] * len(s2)
    m = 0
    for i, c in enumerate(s1):
        for j in range(max(0, i - window), min(len(s2), i + window + 1)):
            if not used2[j] and s2[j] == c:
                used1[i] = used2[j] = True
                m += 1
                break
    if not m:
        return 0.0
    a = [c for c, u in zip(s1, used1) if u]
    b = [c for c, u in zip(s2, used2) if u]
    t = sum(x != y for x, y in zip(a, b)) / 2
    return (m / len(s1) + m / len(s2) + (m - t) / m) / 3


def index_pair_grams(seq, n: int, skip: int) -> dict:
    """k-skip-n-grams by enumerating every increasing index tuple."""
    out: dict = {}
    for idx in itertools.combinations(range(len(seq)), n):
        skipped = idx[-1] - idx[0] - (n - 1)
        if skipped <= skip:
            gram = tuple(seq[i] for i in idx)
            out[gram] = out.get(gram, 0) + 1
    return out


def dense(v1: dict, v2: dict) -> tuple[list[float], list[float]]:
    keys = sorted(set(v1) | set(v2))
    return [v1.get(k, 0) for k in keys], [v2.get(k, 0) for k in keys]


def cosine_formula(v1: dict, v2: dict) -> float:
    x, y = dense(v1, v2)
    nx = math.sqrt(sum(a * a for a in x))
    ny = math.sqrt(sum(b * b for b in y))
    if nx == 0 or ny == 0:
        return 0.0
    return sum(a * b for a, b in zip(x, y)) / (nx * ny)


def minkowski_formula(v1: dict, v2: dict, p: int, unit: bool = False) -> float:
    x, y = dense(v1, v2)
    if unit:
        nx = math.sqrt(sum(a * a for a in x)) or 1.0
        ny = math.sqrt(sum(b * b for b in y)) or 1.0
        x = [a / nx for a in x]
        y = [b / ny for b in y]
    total = sum(abs(a - b) ** p for a, b in zip(x, y))
    return total ** (1 / p)
