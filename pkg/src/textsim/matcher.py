"""Phrase-level similarity matrices, alignment prediction and link scoring."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

import numpy as np

from textsim.alignment import AlignmentMap
from textsim.errors import InconsistentCounts, InvalidParams
from textsim.metrics import MetricParams, get_metric, to_similarity
from textsim.textproc import PhraseDocument, PipelineConfig, tokenize_normalize


def config_checksum(config: PipelineConfig, params: MetricParams) -> str:
    blob = json.dumps({**config.describe(), **params.describe()}, sort_keys=True)
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()[:16]


@dataclass(frozen=True)
class SimilarityMatrix:
    cells: np.ndarray
    metric_id: str
    config_checksum: str

    @property
    def shape(self) -> tuple[int, int]:
        return self.cells.shape


def build_matrix(
    src: PhraseDocument,
    tgt: PhraseDocument,
    metric_id: str,
    config: PipelineConfig = PipelineConfig(),
    params: MetricParams = MetricParams(),
) -> SimilarityMatrix:
    """Score every (source phrase, target phrase) pair.

    Distance metrics are turned into similarities with ``1 / (1 + d)`` so that
    every cell lies in [0, 1] and larger always means closer.
    """
    metric = get_metric(metric_id)
    src_tokens = [tokenize_normalize(p, config) for p in src.phrases]
    tgt_tokens = [tokenize_normalize(p, config) for p in tgt.phrases]
    cells = np.empty((len(src_tokens), len(tgt_tokens)))
    for i, a in enumerate(src_tokens):
        for j, b in enumerate(tgt_tokens):
            cells[i, j] = to_similarity(metric(a, b, params), metric.kind)
    cells.setflags(write=False)
    return SimilarityMatrix(cells, metric_id, config_checksum(config, params))


def predict_alignment(matrix: SimilarityMatrix | np.ndarray, threshold: float) -> AlignmentMap:
    """Link (i, j) when the cell reaches ``threshold`` and is the best of its row
    or of its column. Ties go to the lowest index. Unlinked sources are deletions.
    """
    if not 0 <= threshold <= 1:
        raise InvalidParams(f"threshold must lie in [0, 1], got {threshold}")
    cells = np.asarray(matrix.cells if isinstance(matrix, SimilarityMatrix) else matrix, float)
    rows, cols = cells.shape
    links: dict[int, list[int]] = {i: [] for i in range(rows)}
    if rows and cols:
        best_col = cells.argmax(axis=1)
        best_row = cells.argmax(axis=0)
        for i in range(rows):
            for j in range(cols):
                if cells[i, j] >= threshold and (best_col[i] == j or best_row[j] == i):
                    links[i].append(j)
    return AlignmentMap.from_dict(links, rows, cols)


@dataclass(frozen=True)
class MatchReport:
    true_links: frozenset[tuple[int, int]]
    predicted_links: frozenset[tuple[int, int]]
    precision: float
    recall: float
    f1: float


def score_alignment(predicted: AlignmentMap, gold: AlignmentMap) -> MatchReport:
    if (predicted.source_count, predicted.target_count) != (gold.source_count, gold.target_count):
        raise InconsistentCounts(
            f"predicted map is {predicted.source_count}x{predicted.target_count}, "
            f"gold map is {gold.source_count}x{gold.target_count}"
        )
    pred, true = predicted.links(), gold.links()
    hits = len(pred & true)
    precision = hits / len(pred) if pred else float(not true)
    recall = hits / len(true) if true else float(not pred)
    f1 = 2 * precision * recall / (precision + recall) if precision and recall else 0.0
    return MatchReport(true, pred, precision, recall, f1)
