#!/usr/bin/env python3
"""Independent end-to-end oracle for the synthetic corpus.

Recomputes Jaccard, Dice and cosine scores straight from the corpus files with
the textbook formulas, and Pearson coefficients with numpy.corrcoef, without
importing textsim. Writes golden.json next to the corpus; the test suite
compares textsim's results against it.

    python scripts/oracle_golden.py corpus/synthetic
"""

import json
import math
import re
import sys
from collections import Counter
from pathlib import Path

import numpy as np

ROOT = Path(__file__).resolve().parents[1]
STOPWORDS = ROOT / "src" / "textsim" / "data" / "stopwords_de.txt"
LEVELS = {"basic": "basic", "complex": "complex", "unrelated": "control/unrelated"}


def stopwords():
    lines = STOPWORDS.read_text(encoding="utf-8").splitlines()
    return {w.strip() for w in lines if w.strip() and not w.startswith("#")}


def tokens(path, stop):
    text = path.read_text(encoding="utf-8").lower()
    return [t for t in re.findall(r"[^\W_]+", text) if t not in stop]


def jaccard(a, b):
    a, b = set(a), set(b)
    return len(a & b) / len(a | b)


def dice(a, b):
    a, b = set(a), set(b)
    return 2 * len(a & b) / (len(a) + len(b))


def cosine(a, b):
    ca, cb = Counter(a), Counter(b)
    dot = sum(ca[t] * cb[t] for t in ca)
    return dot / (math.sqrt(sum(v * v for v in ca.values())) * math.sqrt(sum(v * v for v in cb.values())))


def main(corpus):
    corpus = Path(corpus)
    stop = stopwords()
    src = tokens(corpus / "source.txt", stop)
    per_doc = {"jaccard": [], "dice": [], "cosine": []}
    means = {}
    for level, rel in LEVELS.items():
        docs = [tokens(p, stop) for p in sorted((corpus / rel).glob("*.txt"))]
        scores = {"jaccard": [jaccard(src, d) for d in docs],
                  "dice": [dice(src, d) for d in docs],
                  "cosine": [cosine(src, d) for d in docs]}
        means[level] = {m: float(np.mean(v)) for m, v in scores.items()}
        for m, v in scores.items():
            per_doc[m].extend(v)
    names = list(per_doc)
    data = np.array([per_doc[m] for m in names])
    reference = data.mean(axis=0)
    golden = {
        "means": means,
        "per_document": per_doc,
        "pearson_matrix": {"metrics": names, "matrix": np.corrcoef(data).tolist()},
        "pearson_vs_mean": {m: float(np.corrcoef(data[i], reference)[0, 1]) for i, m in enumerate(names)},
    }
    out = corpus / "golden.json"
    out.write_text(json.dumps(golden, indent=2) + "\n", encoding="utf-8")
    print(out)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else ROOT / "corpus" / "synthetic")
