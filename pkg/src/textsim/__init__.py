"""Text similarity measures, phrase-alignment gold files and corpus reports."""

from textsim.alignment import (
    AlignmentMap,
    RuleLevel,
    classify_links,
    parse_alignment,
    serialize_alignment,
    validate_rules,
)
from textsim.editdist import EditParams, jaro, jaro_winkler, levenshtein, levenshtein_normalized
from textsim.evalreport import (
    classify_paraphrase_level,
    correlation_analysis,
    document_score,
    emit_report,
    load_corpus,
    pearson,
    subcorpus_means,
)
from textsim.matcher import build_matrix, predict_alignment, score_alignment
from textsim.metrics import DEFAULT_METRICS, MetricParams, get_metric
from textsim.ngram import ngram_overlap, rouge_n, rouge_su
from textsim.textproc import (
    PhraseDocument,
    PipelineConfig,
    default_config,
    extract_ngrams,
    segment_phrases,
    term_set,
    term_vector,
    tokenize_normalize,
)
from textsim.vsm import cosine, dice, euclidean, jaccard, manhattan

__version__ = "0.1.0"
