"""Acceptance criteria, one test per criterion.

Run ``pytest tests/test_acceptance.py -v``; the terminal summary lists every
criterion with its outcome, plus the suite runtime.
"""

import csv
import io
import json
import math
import os
import random
import time

import pytest

from oracles import all_strings, cosine_formula, jaro_flags, levenshtein_table, minkowski_formula
from textsim.alignment import (
    AlignmentMap,
    RuleLevel,
    classify_links,
    parse_alignment,
    serialize_alignment,
    validate_rules,
)
from textsim.cli import main
from textsim.editdist import jaro, jaro_winkler, levenshtein
from textsim.evalreport import CSV_HEADER, score_documents
from textsim.metrics import DEFAULT_METRICS, MetricParams, get_metric
from textsim.textproc import PhraseDocument, TermVector, default_config
from textsim.vsm import cosine, dice, euclidean, jaccard, manhattan

ORACLE_BUDGET_S = 10.0
REFERENCE_ENV = "TEXTSIM_REFERENCE_CORPUS"
DISTANCES = {"euclidean", "manhattan"}
SIMILARITIES = [m for m in DEFAULT_METRICS if m not in DISTANCES]


def _random_vectors(rng, count):
    terms = "abcdefgh"
    for _ in range(count):
        pair = []
        for _ in range(2):
            k = rng.randint(0, 6)
            pair.append({t: rng.randint(1, 9) for t in rng.sample(terms, k)})
        yield pair


@pytest.mark.criterion("metric oracle suite")
def test_metric_oracle_suite():
    started = time.perf_counter()

    # every ordered pair of strings of length <= 6 over {a, b, c}
    strings = all_strings("abc", 6)
    expected = [d for row in levenshtein_table(strings) for d in row]
    left = [a for a in strings for _ in strings]
    right = strings * len(strings)
    got = list(map(levenshtein, left, right))
    if got != expected:
        wrong = [(a, b) for a, b, x, y in zip(left, right, got, expected) if x != y]
        pytest.fail(f"{len(wrong)} mismatches, e.g. {wrong[:5]}")

    rng = random.Random(7)
    for a, b in _random_vectors(rng, 1000):
        v1, v2 = TermVector(a), TermVector(b)
        s1, s2 = frozenset(a), frozenset(b)
        assert abs(cosine(v1, v2) - cosine_formula(a, b)) <= 1e-9
        assert abs(euclidean(v1, v2, False) - minkowski_formula(a, b, 2)) <= 1e-9
        assert abs(manhattan(v1, v2, False) - minkowski_formula(a, b, 1)) <= 1e-9
        assert abs(euclidean(v1, v2, True) - minkowski_formula(a, b, 2, True)) <= 1e-9
        assert abs(manhattan(v1, v2, True) - minkowski_formula(a, b, 1, True)) <= 1e-9
        union = len(s1 | s2)
        shared = len(s1 & s2)
        assert abs(jaccard(s1, s2) - (shared / union if union else 1.0)) <= 1e-9
        sizes = len(s1) + len(s2)
        assert abs(dice(s1, s2) - (2 * shared / sizes if sizes else 1.0)) <= 1e-9

    assert abs(jaro("MARTHA", "MARHTA") - 0.94444) <= 1e-5
    assert abs(jaro_winkler("MARTHA", "MARHTA") - 0.96111) <= 1e-5
    # hand computation: D, I, O, N match in order, so m = 4 and t = 0
    assert abs(jaro("DIXON", "DICKSONX") - (4 / 5 + 4 / 8 + 4 / 4) / 3) <= 1e-12
    # MARTHA: m = 6, t = 1; the Winkler prefix MAR adds 3 * 0.1 * (1 - j)
    j = (6 / 6 + 6 / 6 + 5 / 6) / 3
    assert abs(jaro("MARTHA", "MARHTA") - j) <= 1e-12
    assert abs(jaro_winkler("MARTHA", "MARHTA") - (j + 0.3 * (1 - j))) <= 1e-12
    assert abs(jaro_winkler("DIXON", "DICKSONX") - 0.81333) <= 1e-5
    words = "abcdef"
    for _ in range(300):
        a = "".join(rng.choices(words, k=rng.randint(0, 10)))
        b = "".join(rng.choices(words, k=rng.randint(0, 10)))
        assert abs(jaro(a, b) - jaro_flags(a, b)) <= 1e-12

    elapsed = time.perf_counter() - started
    print(f"metric oracle suite: {elapsed:.2f} s")
    assert elapsed < ORACLE_BUDGET_S


EXAMPLES = [
    # input, canonical form, counts, expected classification
    ("0 : 29", "0: 29\n", (1, 30), {"added": set(range(29))}),
    ("2:", "2:\n", (3, 0), {"deleted": {2}}),
    ("3: 1\n4 :1", "3: 1\n4: 1\n", (5, 2), {"merges": {1: {3, 4}}, "added": {0}}),
    ("13 : 11,12", "13: 11,12\n", (14, 13), {"splits": {13: {11, 12}}, "added": set(range(11))}),
    (
        "5: 5,6\n6: 5,6",
        "5: 5,6\n6: 5,6\n",
        (7, 7),
        {"exchanges": {(5, 6)}, "splits": {5: {5, 6}, 6: {5, 6}},
         "merges": {5: {5, 6}, 6: {5, 6}}, "added": set(range(5))},
    ),
]


@pytest.mark.criterion("golden mapping lines")
def test_golden_mapping_lines():
    for text, canonical, counts, expected in EXAMPLES:
        amap = parse_alignment(text)
        assert (amap.source_count, amap.target_count) == counts, text
        assert serialize_alignment(amap) == canonical
        assert serialize_alignment(parse_alignment(canonical)) == canonical
        assert parse_alignment(canonical) == amap

        links = classify_links(amap)
        found = {
            "merges": links.merges, "splits": links.splits, "deleted": links.deleted,
            "exchanges": links.exchanges, "added": links.added,
        }
        for kind, value in found.items():
            assert value == expected.get(kind, type(value)()), (text, kind)


def _doc(prefix, n):
    return PhraseDocument(tuple(f"{prefix} Satz Nummer {i}." for i in range(n)))


def _chain(n_src, n_tgt, drop=()):
    mapping, j = {}, 0
    for i in range(n_src):
        mapping[i] = [] if i in drop else [j]
        j += i not in drop
    return AlignmentMap.from_dict(mapping, n_src, n_tgt)


@pytest.mark.criterion("rule validator fixtures")
def test_rule_validator_fixtures():
    src = _doc("Alter", 10)

    def kinds(amap, tgt, level):
        return [v.kind for v in validate_rules(amap, src, tgt, level)]

    unaltered = PhraseDocument(_doc("Neuer", 9).phrases + (src.phrases[9],))
    assert kinds(_chain(10, 10), unaltered, RuleLevel.BASIC) == ["unaltered-phrase"]
    assert kinds(_chain(10, 10), unaltered, RuleLevel.COMPLEX) == ["unaltered-phrase"]

    assert kinds(_chain(10, 12), _doc("Neuer", 12), RuleLevel.BASIC) == ["addition-budget"]
    assert kinds(_chain(10, 11), _doc("Neuer", 11), RuleLevel.BASIC) == []

    # five additions and five deletions pass, a sixth of either fails
    five_five = _chain(10, 10, drop=set(range(5)))
    assert kinds(five_five, _doc("Neuer", 10), RuleLevel.COMPLEX) == []
    six_added = _chain(10, 16)
    assert kinds(six_added, _doc("Neuer", 16), RuleLevel.COMPLEX) == ["addition-budget"]
    six_deleted = _chain(10, 4, drop=set(range(6)))
    assert kinds(six_deleted, _doc("Neuer", 4), RuleLevel.COMPLEX) == ["deletion-budget"]

    mapping = {i: [i] for i in range(10)}
    mapping[5] = mapping[6] = [5, 6]
    exchange = AlignmentMap.from_dict(mapping, 10, 10)
    assert kinds(exchange, _doc("Neuer", 10), RuleLevel.BASIC) == ["exchange-forbidden"]
    assert kinds(exchange, _doc("Neuer", 10), RuleLevel.COMPLEX) == []


def _level_means(corpus, params):
    scores = score_documents(corpus, DEFAULT_METRICS, default_config(), params)
    return {
        m: [math.fsum(scores[level][m]) / len(scores[level][m])
            for level in ("basic", "complex", "unrelated")]
        for m in DEFAULT_METRICS
    }


@pytest.mark.criterion("ordering property")
def test_ordering_property(corpus):
    for pre_normalize in (True, False):
        means = _level_means(corpus, MetricParams(pre_normalize=pre_normalize))
        for metric, (low, high, not_) in means.items():
            print(f"{metric:14s} {low:.5f} {high:.5f} {not_:.5f}")
            if get_metric(metric).kind == "similarity":
                assert low >= high >= not_, metric
            else:
                assert low <= high <= not_, metric


@pytest.mark.criterion("correlation signs")
def test_correlation_signs(capsys, corpus_dir):
    code = main(["corpus-eval", "--corpus", str(corpus_dir), "--format", "json"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 0
    metrics = doc["correlation"]["metrics"]
    matrix = doc["correlation"]["matrix"]
    r = {(a, b): matrix[i][j] for i, a in enumerate(metrics) for j, b in enumerate(metrics)}
    assert r[("euclidean", "cosine")] < 0
    assert r[("manhattan", "cosine")] < 0
    for a in SIMILARITIES:
        for b in SIMILARITIES:
            assert r[(a, b)] > 0.5, (a, b)


def _align_eval(capsys, corpus_dir, name):
    align = corpus_dir / "align"
    code = main([
        "align-eval", "--source", str(corpus_dir / "source.txt"),
        "--target", str(align / f"{name}.txt"), "--gold", str(align / f"{name}.map"),
        "--metric", "cosine", "--threshold", "0.2",
    ])
    out = capsys.readouterr().out
    assert code == 0
    return dict(line.split() for line in out.splitlines())


@pytest.mark.criterion("matcher recovery")
def test_matcher_recovery(capsys, corpus_dir):
    light = _align_eval(capsys, corpus_dir, "light")
    pure = _align_eval(capsys, corpus_dir, "pure")
    print(f"light f1 {light['f1']}, pure f1 {pure['f1']}")
    assert float(light["f1"]) >= 0.9
    assert float(pure["f1"]) == 1.0


@pytest.mark.criterion("conditional table harness")
def test_conditional_table_harness(capsys, corpus_dir, tmp_path):
    # With a real corpus named in the environment the report is produced for
    # manual comparison; otherwise the harness runs on the synthetic corpus.
    # No numeric tolerance is asserted either way.
    root = os.environ.get(REFERENCE_ENV) or str(corpus_dir)
    out = tmp_path / "table.csv"
    code = main(["corpus-eval", "--corpus", root, "--metrics", "all", "--out", str(out)])
    capsys.readouterr()
    assert code == 0
    rows = list(csv.reader(io.StringIO(out.read_text("utf-8"))))
    assert tuple(rows[0]) == CSV_HEADER
    assert [r[0] for r in rows[1:]] == DEFAULT_METRICS
    print(f"report for {root}:")
    print(out.read_text("utf-8"))


@pytest.mark.criterion("determinism")
def test_determinism(corpus_dir, tmp_path, capsys):
    for fmt in ("csv", "json"):
        outputs = []
        for run in range(2):
            out = tmp_path / f"{run}.{fmt}"
            argv = ["corpus-eval", "--corpus", str(corpus_dir), "--format", fmt, "--out", str(out)]
            assert main(argv) == 0
            outputs.append(out.read_bytes())
        assert outputs[0] == outputs[1]
    capsys.readouterr()
    sidecars = [(tmp_path / f"{run}.matrix.csv").read_bytes() for run in range(2)]
    assert sidecars[0] == sidecars[1]
