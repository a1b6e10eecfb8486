"""Registry of named document/phrase metrics.

Each metric takes the normalized token lists of a source and a target text.
Registration order is the row order of every report.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from typing import Literal

from textsim import editdist, ngram, vsm
from textsim.errors import EmptyReference, InvalidParams, UnknownMetric
from textsim.textproc import Unit, as_units, extract_ngrams, term_set, term_vector

Kind = Literal["similarity", "distance"]


@dataclass(frozen=True)
class MetricParams:
    skip: int = 4
    pre_normalize: bool = True
    ngram_unit: Unit = "word"
    ngram_n: int = 2
    rouge_clip: bool = True
    edit: editdist.EditParams = field(default_factory=editdist.EditParams)

    def __post_init__(self):
        if self.skip < 0 or self.ngram_n < 1:
            raise InvalidParams("skip must be >= 0 and ngram_n >= 1")
        if self.ngram_unit not in ("word", "character"):
            raise InvalidParams(f"unknown n-gram unit {self.ngram_unit!r}")

    def describe(self) -> dict[str, object]:
        return {
            "skip": self.skip,
            "pre_normalize": self.pre_normalize,
            "ngram_unit": self.ngram_unit,
            "ngram_n": self.ngram_n,
            "rouge_clip": self.rouge_clip,
            "jw_prefix_weight": self.edit.jw_prefix_weight,
            "jw_boost_threshold": self.edit.jw_boost_threshold,
            "jw_max_prefix": self.edit.jw_max_prefix,
        }


Tokens = Sequence[str]
ScoreFn = Callable[[Tokens, Tokens, MetricParams], float]


@dataclass(frozen=True)
class Metric:
    id: str
    label: str
    kind: Kind
    fn: ScoreFn

    def __call__(self, src: Tokens, tgt: Tokens, params: MetricParams = MetricParams()) -> float:
        return self.fn(src, tgt, params)


def to_similarity(value: float, kind: Kind) -> float:
    """Map a distance onto (0, 1] with ``1 / (1 + d)``; similarities pass through."""
    return value if kind == "similarity" else 1.0 / (1.0 + value)


def _rouge_total(can, ref, fn) -> float:
    # Registry metrics must be total: an empty reference scores 1 against an
    # empty candidate and 0 otherwise.
    try:
        return fn(can, ref)
    except EmptyReference:
        return 0.0 if len(can) else 1.0


def _rouge_n(n: int) -> ScoreFn:
    def score(src: Tokens, tgt: Tokens, p: MetricParams) -> float:
        ref = extract_ngrams(as_units(src, p.ngram_unit), n, 0, p.ngram_unit)
        can = extract_ngrams(as_units(tgt, p.ngram_unit), n, 0, p.ngram_unit)
        if not ref.total():
            return 0.0 if can.total() else 1.0
        return ngram.rouge_n(can, ref, clip=p.rouge_clip)

    return score


def _rouge_su(src: Tokens, tgt: Tokens, p: MetricParams) -> float:
    ref, can = as_units(src, p.ngram_unit), as_units(tgt, p.ngram_unit)
    return _rouge_total(can, ref, lambda c, r: ngram.rouge_su(c, r, p.skip, clip=p.rouge_clip))


def _overlap(src: Tokens, tgt: Tokens, p: MetricParams) -> float:
    a = extract_ngrams(as_units(src, p.ngram_unit), p.ngram_n, 0, p.ngram_unit)
    b = extract_ngrams(as_units(tgt, p.ngram_unit), p.ngram_n, 0, p.ngram_unit)
    return ngram.ngram_overlap(a, b, "max")


REGISTRY: dict[str, Metric] = {}


def register(metric: Metric, default: bool = True) -> Metric:
    REGISTRY[metric.id] = metric
    if default:
        DEFAULT_METRICS.append(metric.id)
    return metric


DEFAULT_METRICS: list[str] = []

register(Metric("2grams", "2-grams", "similarity", _rouge_n(2)))
register(Metric("2grams-su4", "2-grams SU4", "similarity", _rouge_su))
register(Metric("3grams", "3-grams", "similarity", _rouge_n(3)))
register(Metric(
    "cosine", "Cosine", "similarity",
    lambda s, t, p: vsm.cosine(term_vector(s), term_vector(t)),
))
register(Metric("dice", "Dice", "similarity", lambda s, t, p: vsm.dice(term_set(s), term_set(t))))
register(Metric(
    "euclidean", "Euclidean", "distance",
    lambda s, t, p: vsm.euclidean(term_vector(s), term_vector(t), p.pre_normalize),
))
register(Metric(
    "jaccard", "Jaccard", "similarity", lambda s, t, p: vsm.jaccard(term_set(s), term_set(t))
))
register(Metric("jw", "JW", "similarity", lambda s, t, p: editdist.jaro_winkler(s, t, p.edit)))
register(Metric(
    "levenshtein", "Levenshtein", "similarity",
    lambda s, t, p: editdist.levenshtein_normalized(" ".join(s), " ".join(t)),
))
register(Metric(
    "levenshtein-w", "Levenshtein W", "similarity",
    lambda s, t, p: editdist.levenshtein_normalized(s, t),
))
register(Metric(
    "manhattan", "Manhattan", "distance",
    lambda s, t, p: vsm.manhattan(term_vector(s), term_vector(t), p.pre_normalize),
))
register(Metric("ngram-overlap", "n-gram overlap", "similarity", _overlap), default=False)


def get_metric(metric_id: str) -> Metric:
    try:
        return REGISTRY[metric_id]
    except KeyError:
        raise UnknownMetric(metric_id) from None


def resolve_metrics(selection: str | Sequence[str]) -> list[str]:
    """Expand ``"all"`` or a comma list into validated metric ids."""
    if isinstance(selection, str):
        if selection == "all":
            return list(DEFAULT_METRICS)
        selection = [s.strip() for s in selection.split(",") if s.strip()]
    ids = list(selection)
    for metric_id in ids:
        get_metric(metric_id)
    return ids
