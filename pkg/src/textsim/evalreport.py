"""Corpus evaluation: per-level mean scores, Pearson correlations and reports.

A corpus directory looks like::

    source.txt
    basic/01.txt ...            lightly paraphrased versions   -> column "low"
    complex/01.txt ...          heavily paraphrased versions   -> column "high"
    control/cited/01.txt ...    closely related documents      -> column "cited"
    control/unrelated/01.txt .. unrelated documents            -> column "not"
    maps/basic-01.map ...       gold phrase alignments

All documents are read one phrase per line.
"""

from __future__ import annotations

import csv
import enum
import io
import json
import math
import re
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from pathlib import Path

from textsim.alignment import AlignmentMap, parse_alignment
from textsim.errors import (
    DanglingMap,
    EmptySubcorpus,
    InvalidParams,
    InvalidThresholds,
    LengthMismatch,
    MissingSourceFile,
    ZeroVariance,
)
from textsim.metrics import MetricParams, get_metric, to_similarity
from textsim.textproc import (
    PhraseDocument,
    PipelineConfig,
    document_tokens,
    read_document,
)

SUBCORPUS_DIRS = {
    "basic": "basic",
    "complex": "complex",
    "cited": "control/cited",
    "unrelated": "control/unrelated",
}
OPTIONAL_SUBCORPORA = {"cited"}
# report column -> sub-corpus
COLUMNS = {"low": "basic", "high": "complex", "not": "unrelated"}
CSV_HEADER = ("metric", "low", "high", "not", "pearson")

_MAP_NAME = re.compile(r"(?P<sub>[a-z]+)-(?P<doc>[^.]+)\.map")


@dataclass(frozen=True)
class CorpusLayout:
    root: Path
    source: PhraseDocument
    subcorpora: Mapping[str, tuple[PhraseDocument, ...]]
    maps: Mapping[tuple[str, str], AlignmentMap] = field(default_factory=dict)

    def correlation_documents(self) -> list[tuple[str, PhraseDocument]]:
        """Documents entering the correlation analysis, in report-column order."""
        return [(sub, doc) for sub in COLUMNS.values() for doc in self.subcorpora[sub]]


def load_corpus(root: str | Path) -> CorpusLayout:
    root = Path(root)
    if not (root / "source.txt").is_file():
        raise MissingSourceFile(f"{root / 'source.txt'} not found")
    source = read_document(root / "source.txt")

    subcorpora = {}
    for name, rel in SUBCORPUS_DIRS.items():
        folder = root / rel
        if name in OPTIONAL_SUBCORPORA and not folder.exists():
            continue
        files = sorted(folder.glob("*.txt")) if folder.is_dir() else []
        if not files:
            raise EmptySubcorpus(f"sub-corpus {name!r} has no documents in {folder}")
        subcorpora[name] = tuple(read_document(f) for f in files)

    maps = {}
    map_dir = root / "maps"
    for path in sorted(map_dir.glob("*.map")) if map_dir.is_dir() else []:
        m = _MAP_NAME.fullmatch(path.name)
        docs = {d.id: d for d in subcorpora.get(m.group("sub"), ())} if m else {}
        if m is None or m.group("doc") not in docs:
            raise DanglingMap(f"{path.name} does not name an existing document")
        target = docs[m.group("doc")]
        maps[(m.group("sub"), target.id)] = parse_alignment(
            path.read_text(encoding="utf-8"), len(source), len(target)
        )
    return CorpusLayout(root, source, subcorpora, maps)


def document_score(
    src: PhraseDocument,
    tgt: PhraseDocument,
    metric_id: str,
    config: PipelineConfig,
    params: MetricParams = MetricParams(),
) -> float:
    """Score two whole documents, each flattened to one token sequence."""
    metric = get_metric(metric_id)
    return metric(document_tokens(src, config), document_tokens(tgt, config), params)


def score_documents(
    corpus: CorpusLayout,
    metrics: Sequence[str],
    config: PipelineConfig,
    params: MetricParams = MetricParams(),
) -> dict[str, dict[str, list[float]]]:
    """sub-corpus -> metric -> per-document scores against the source."""
    src_tokens = document_tokens(corpus.source, config)
    scores: dict[str, dict[str, list[float]]] = {}
    for sub, docs in corpus.subcorpora.items():
        doc_tokens = [document_tokens(d, config) for d in docs]
        scores[sub] = {
            m: [get_metric(m)(src_tokens, toks, params) for toks in doc_tokens] for m in metrics
        }
    return scores


@dataclass(frozen=True)
class ScoreRow:
    metric: str
    low: float
    high: float
    not_: float
    pearson: float | None = None
    cited: float | None = None


@dataclass(frozen=True)
class ScoreTable:
    rows: tuple[ScoreRow, ...]
    reference: str | None = None
    correlation_matrix: tuple[tuple[float, ...], ...] | None = None
    config: Mapping[str, object] = field(default_factory=dict)

    @property
    def metrics(self) -> list[str]:
        return [r.metric for r in self.rows]

    def row(self, metric_id: str) -> ScoreRow:
        for r in self.rows:
            if r.metric == metric_id:
                return r
        raise KeyError(metric_id)


def _mean(values: Sequence[float]) -> float:
    return math.fsum(values) / len(values)


def subcorpus_means(
    corpus: CorpusLayout,
    metrics: Sequence[str],
    config: PipelineConfig,
    params: MetricParams = MetricParams(),
    scores: Mapping[str, Mapping[str, list[float]]] | None = None,
) -> ScoreTable:
    if scores is None:
        scores = score_documents(corpus, metrics, config, params)
    rows = []
    for m in metrics:
        cited = _mean(scores["cited"][m]) if "cited" in scores else None
        rows.append(ScoreRow(
            m,
            low=_mean(scores["basic"][m]),
            high=_mean(scores["complex"][m]),
            not_=_mean(scores["unrelated"][m]),
            cited=cited,
        ))
    return ScoreTable(tuple(rows))


def pearson(x: Sequence[float], y: Sequence[float]) -> float:
    """Sample Pearson correlation coefficient."""
    if len(x) != len(y):
        raise LengthMismatch(f"sequences have lengths {len(x)} and {len(y)}")
    if len(x) < 2:
        raise LengthMismatch("need at least two observations")
    mx, my = _mean(x), _mean(y)
    dx = [a - mx for a in x]
    dy = [b - my for b in y]
    sxx = math.fsum(d * d for d in dx)
    syy = math.fsum(d * d for d in dy)
    if sxx == 0 or syy == 0:
        raise ZeroVariance("correlation undefined for a constant sequence")
    r = math.fsum(a * b for a, b in zip(dx, dy)) / math.sqrt(sxx * syy)
    return max(-1.0, min(1.0, r))


@dataclass(frozen=True)
class CorrelationResult:
    reference: str
    versus_reference: Mapping[str, float]
    metrics: tuple[str, ...]
    matrix: tuple[tuple[float, ...], ...]


def reference_profile(per_doc_scores: Mapping[str, Sequence[float]]) -> list[float]:
    """Per-document mean over all metrics, distances mapped to ``1 / (1 + d)``."""
    columns = [
        [to_similarity(v, get_metric(m).kind) for v in values]
        for m, values in per_doc_scores.items()
    ]
    return [_mean(doc) for doc in zip(*columns)]


def correlation_analysis(
    per_doc_scores: Mapping[str, Sequence[float]], reference: str = "mean"
) -> CorrelationResult:
    """Pearson of every metric against a reference profile, plus the pairwise matrix.

    ``reference`` is ``"mean"`` (see :func:`reference_profile`) or a metric id
    whose raw scores serve as the profile. Matrix entries use raw scores.
    """
    lengths = {len(v) for v in per_doc_scores.values()}
    if len(lengths) > 1:
        raise LengthMismatch(f"score sequences differ in length: {sorted(lengths)}")
    if reference == "mean":
        ref = reference_profile(per_doc_scores)
    else:
        ref = list(per_doc_scores[reference])
    metrics = tuple(per_doc_scores)
    versus = {m: pearson(per_doc_scores[m], ref) for m in metrics}
    matrix = tuple(
        tuple(1.0 if a == b else pearson(per_doc_scores[a], per_doc_scores[b]) for b in metrics)
        for a in metrics
    )
    return CorrelationResult(reference, versus, metrics, matrix)


def evaluate_corpus(
    corpus: CorpusLayout,
    metrics: Sequence[str],
    config: PipelineConfig,
    params: MetricParams = MetricParams(),
    reference: str = "mean",
    metadata: Mapping[str, object] | None = None,
) -> ScoreTable:
    """Full report: level means, Pearson column and correlation matrix."""
    metrics = list(metrics)
    scores = score_documents(corpus, metrics, config, params)
    table = subcorpus_means(corpus, metrics, config, params, scores)
    if not metrics:
        return ScoreTable((), reference, (), dict(metadata or {}))
    per_doc = {m: [v for sub in COLUMNS.values() for v in scores[sub][m]] for m in metrics}
    corr = correlation_analysis(per_doc, reference)
    rows = tuple(
        ScoreRow(r.metric, r.low, r.high, r.not_, corr.versus_reference[r.metric], r.cited)
        for r in table.rows
    )
    return ScoreTable(rows, reference, corr.matrix, dict(metadata or {}))


class ParaphraseLevel(enum.Enum):
    SAME_OR_BASIC = "same_or_basic"
    PARAPHRASE = "paraphrase"
    DIFFERENT = "different"


def classify_paraphrase_level(score: float, thresholds: tuple[float, float]) -> ParaphraseLevel:
    """Bucket a [0, 1] similarity with ``thresholds = (t_low, t_high)``."""
    t_low, t_high = thresholds
    if not 0 <= t_low < t_high <= 1:
        raise InvalidThresholds(f"need 0 <= t_low < t_high <= 1, got {thresholds}")
    if not 0 <= score <= 1:
        raise InvalidParams(f"score {score} outside [0, 1]")
    if score >= t_high:
        return ParaphraseLevel.SAME_OR_BASIC
    if score >= t_low:
        return ParaphraseLevel.PARAPHRASE
    return ParaphraseLevel.DIFFERENT


# --- report emission ------------------------------------------------------


def _fmt(value: float | None) -> str:
    return "" if value is None else f"{value:.5f}"


def _csv_bytes(rows: list[list[str]]) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue().encode("utf-8")


def emit_report(table: ScoreTable, fmt: str = "csv") -> bytes:
    """Serialize a table as CSV (``metric,low,high,not,pearson``) or JSON.

    CSV values are fixed-point with five decimals. JSON keeps full float
    precision and also carries the ``cited`` column, correlation matrix and
    effective configuration.
    """
    if fmt == "csv":
        rows = [list(CSV_HEADER)]
        rows += [[r.metric, _fmt(r.low), _fmt(r.high), _fmt(r.not_), _fmt(r.pearson)]
                 for r in table.rows]
        return _csv_bytes(rows)
    if fmt == "json":
        doc = {
            "columns": list(CSV_HEADER) + ["cited"],
            "rows": [
                {"metric": r.metric, "low": r.low, "high": r.high, "not": r.not_,
                 "pearson": r.pearson, "cited": r.cited}
                for r in table.rows
            ],
            "correlation": {
                "reference": table.reference,
                "metrics": table.metrics,
                "matrix": None if table.correlation_matrix is None
                else [list(row) for row in table.correlation_matrix],
            },
            "config": dict(table.config),
        }
        return (json.dumps(doc, indent=2, ensure_ascii=False) + "\n").encode("utf-8")
    raise InvalidParams(f"unknown report format {fmt!r}")


def parse_report_json(data: bytes | str) -> ScoreTable:
    doc = json.loads(data)
    rows = tuple(
        ScoreRow(r["metric"], r["low"], r["high"], r["not"], r["pearson"], r["cited"])
        for r in doc["rows"]
    )
    corr = doc["correlation"]
    matrix = None if corr["matrix"] is None else tuple(tuple(row) for row in corr["matrix"])
    return ScoreTable(rows, corr["reference"], matrix, doc["config"])


def emit_matrix_csv(table: ScoreTable) -> bytes:
    """Pairwise Pearson matrix as CSV, first column the row metric."""
    rows = [["metric"] + table.metrics]
    for metric, values in zip(table.metrics, table.correlation_matrix or ()):
        rows.append([metric] + [_fmt(v) for v in values])
    return _csv_bytes(rows)


def emit_cited_csv(table: ScoreTable) -> bytes:
    return _csv_bytes([["metric", "cited"]] + [[r.metric, _fmt(r.cited)] for r in table.rows])
