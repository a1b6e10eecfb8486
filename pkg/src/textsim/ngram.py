"""n-gram overlap scores: symmetric overlap, ROUGE-n and ROUGE-SU."""

from __future__ import annotations

from collections import Counter
from collections.abc import Mapping, Sequence
from typing import Literal

from textsim.errors import EmptyReference, InvalidParams, MismatchedGramConfig
from textsim.textproc import NGramMultiset, skip_grams


def _intersection(a: Mapping, b: Mapping, clip: bool = True) -> int:
    if not clip:
        return len(a.keys() & b.keys())
    if len(a) > len(b):
        a, b = b, a
    return sum(min(count, b[g]) for g, count in a.items() if g in b)


def _check_same_config(a: NGramMultiset, b: NGramMultiset) -> None:
    if a.config() != b.config():
        raise MismatchedGramConfig(f"gram settings differ: {a.config()} vs {b.config()}")


def ngram_overlap(
    a: NGramMultiset, b: NGramMultiset, denominator: Literal["max", "dice"] = "max"
) -> float:
    """Shared grams over max(|A|, |B|) or over the mean size (``dice``)."""
    _check_same_config(a, b)
    size_a, size_b = a.total(), b.total()
    if not size_a and not size_b:
        return 1.0
    shared = _intersection(a.grams, b.grams)
    if denominator == "max":
        return shared / max(size_a, size_b)
    if denominator == "dice":
        return 2 * shared / (size_a + size_b)
    raise InvalidParams(f"unknown denominator {denominator!r}")


def _rouge(can: Mapping, ref: Mapping, clip: bool) -> float:
    ref_size = sum(ref.values()) if clip else len(ref)
    if not ref_size:
        raise EmptyReference("reference has no n-grams")
    return _intersection(can, ref, clip) / ref_size


def rouge_n(can: NGramMultiset, ref: NGramMultiset, clip: bool = True) -> float:
    """Fraction of reference n-grams found in the candidate.

    With ``clip`` (default) grams are counted as multisets and each shared gram
    contributes the smaller of its two counts. ``clip=False`` reads both sides
    as plain sets of distinct grams.
    """
    _check_same_config(can, ref)
    return _rouge(can.grams, ref.grams, clip)


def su_grams(tokens: Sequence, skip: int) -> Counter:
    """Unigrams plus all bigrams with at most ``skip`` positions between them."""
    grams = skip_grams(tokens, 1, 0)
    grams.update(skip_grams(tokens, 2, skip))
    return grams


def rouge_su(can_tokens: Sequence, ref_tokens: Sequence, skip: int = 4, clip: bool = True) -> float:
    if skip < 0:
        raise InvalidParams(f"skip must be >= 0, got {skip}")
    return _rouge(su_grams(can_tokens, skip), su_grams(ref_tokens, skip), clip)
