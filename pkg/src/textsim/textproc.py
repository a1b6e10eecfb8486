"""Text preprocessing: phrase segmentation, tokenization, term vectors and n-grams.

Every function here is pure. A :class:`PipelineConfig` fully determines how a
phrase becomes tokens, so two runs with equal configs give equal outputs.
"""

from __future__ import annotations

import hashlib
import itertools
import re
from collections import Counter
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from types import MappingProxyType
from typing import Literal

from textsim.errors import EmptyDocument, InvalidParams

Unit = Literal["word", "character"]

# letter/digit runs; "_" is a word character for \w but not a letter or digit
_TOKEN_PATTERNS = {
    "alnum": re.compile(r"[^\W_]+"),
    "whitespace": re.compile(r"\S+"),
}

_STEM_SUFFIXES = ("en", "er", "e", "n", "s")
_MIN_STEM = 3

# Tokens ending in "." that do not end a sentence.
ABBREVIATIONS = frozenset(
    """
    abb abs bd bspw bzw ca chr dgl dr evtl gest ggf hl hr inkl jh jhd jr kap max min mio mrd nr
    o.ä prof s sog st str tel u.a u.ä usw v.a v.chr n.chr vgl z.b z.t d.h i.d.r u.u etc vs
    """.split()
)

_SENTENCE_END = re.compile(r"[.?!]+(?=\s)")


@dataclass(frozen=True)
class PipelineConfig:
    lowercase: bool = True
    stopwords: frozenset[str] = frozenset()
    stem: bool = False
    token_pattern: str = "alnum"
    unit: Unit = "word"

    def __post_init__(self):
        object.__setattr__(self, "stopwords", frozenset(self.stopwords))
        if self.token_pattern not in _TOKEN_PATTERNS:
            raise InvalidParams(f"unknown token pattern {self.token_pattern!r}")
        if self.unit not in ("word", "character"):
            raise InvalidParams(f"unknown unit {self.unit!r}")
        if self.lowercase:
            upper = sorted(w for w in self.stopwords if w != w.lower())
            if upper:
                raise InvalidParams(f"stopwords must be lowercase: {upper[:3]}")

    def stopwords_checksum(self) -> str:
        blob = "\n".join(sorted(self.stopwords)).encode("utf-8")
        return hashlib.sha256(blob).hexdigest()[:16]

    def describe(self) -> dict[str, object]:
        return {
            "lowercase": self.lowercase,
            "stopwords_sha256": self.stopwords_checksum(),
            "stopwords_count": len(self.stopwords),
            "stem": self.stem,
            "token_pattern": self.token_pattern,
            "unit": self.unit,
        }


def load_stopwords(path: str | Path | None = None) -> frozenset[str]:
    """Read a stopword file (one form per line, ``#`` comments).

    Without a path, the bundled German list is returned.
    """
    if path is None:
        text = resources.files("textsim").joinpath("data/stopwords_de.txt").read_text("utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    words = (line.strip() for line in text.splitlines())
    return frozenset(w.lower() for w in words if w and not w.startswith("#"))


def default_config() -> PipelineConfig:
    """Configuration used by corpus evaluation unless overridden."""
    return PipelineConfig(stopwords=load_stopwords())


@dataclass(frozen=True)
class PhraseDocument:
    phrases: tuple[str, ...]
    id: str = ""

    def __post_init__(self):
        object.__setattr__(self, "phrases", tuple(self.phrases))
        for i, phrase in enumerate(self.phrases):
            if not phrase.strip():
                raise EmptyDocument(f"phrase {i} of {self.id or 'document'} is empty")

    def __len__(self) -> int:
        return len(self.phrases)

    def text(self) -> str:
        return "\n".join(self.phrases)


def _split_sentences(text: str) -> list[str]:
    pieces = []
    start = 0
    for m in _SENTENCE_END.finditer(text):
        candidate = text[start:m.end()]
        words = candidate.split()
        last = words[-1].rstrip(".?!").lower() if words else ""
        if m.group() == "." and (
            last in ABBREVIATIONS or last.isdigit() or (len(last) == 1 and last.isalpha())
        ):
            continue
        pieces.append(candidate)
        start = m.end()
    pieces.append(text[start:])
    return pieces


def segment_phrases(raw_text: str, mode: str = "line", doc_id: str = "") -> PhraseDocument:
    """Split raw text into an ordered :class:`PhraseDocument`.

    ``line`` mode keeps one phrase per nonblank line, so phrase indices equal
    line numbers of a file without blank lines. ``sentence`` mode splits after
    ``.``, ``?`` or ``!`` followed by whitespace, except after common German
    abbreviations, single letters and ordinal numbers ("15. Jahrhundert").
    """
    if mode == "line":
        pieces = raw_text.splitlines()
    elif mode == "sentence":
        pieces = _split_sentences(raw_text)
    else:
        raise InvalidParams(f"unknown segmentation mode {mode!r}")
    phrases = tuple(p.strip() for p in pieces if p.strip())
    if not phrases:
        raise EmptyDocument(f"{doc_id or 'input'} contains no text")
    return PhraseDocument(phrases, doc_id)


def read_document(path: str | Path, mode: str = "line") -> PhraseDocument:
    path = Path(path)
    return segment_phrases(path.read_text(encoding="utf-8"), mode, doc_id=path.stem)


def stem_token(token: str) -> str:
    """Strip one German inflectional suffix, keeping at least three characters."""
    for suffix in _STEM_SUFFIXES:
        if token.endswith(suffix) and len(token) - len(suffix) >= _MIN_STEM:
            return token[: -len(suffix)]
    return token


def tokenize_normalize(phrase: str, config: PipelineConfig = PipelineConfig()) -> list[str]:
    tokens = _TOKEN_PATTERNS[config.token_pattern].findall(phrase)
    if config.lowercase:
        tokens = [t.lower() for t in tokens]
    if config.stopwords:
        tokens = [t for t in tokens if t not in config.stopwords]
    if config.stem:
        tokens = [stem_token(t) for t in tokens]
    return tokens


def document_tokens(doc: PhraseDocument, config: PipelineConfig) -> list[str]:
    """All tokens of a document, phrases concatenated in order."""
    return [t for phrase in doc.phrases for t in tokenize_normalize(phrase, config)]


def as_units(tokens: Sequence[str], unit: Unit) -> list[str]:
    """Token list as words, or as the characters of the space-joined tokens."""
    if unit == "character":
        return list(" ".join(tokens))
    return list(tokens)


@dataclass(frozen=True)
class TermVector:
    weights: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self):
        clean = {t: w for t, w in self.weights.items() if w}
        if any(w < 0 for w in clean.values()):
            raise InvalidParams("term weights must be nonnegative")
        object.__setattr__(self, "weights", MappingProxyType(clean))

    @property
    def k(self) -> int:
        return len(self.weights)

    def norm(self) -> float:
        return sum(w * w for w in self.weights.values()) ** 0.5

    def scaled(self, factor: float) -> TermVector:
        return TermVector({t: w * factor for t, w in self.weights.items()})

    def unit(self) -> TermVector:
        """L2-normalized copy; the empty vector stays empty."""
        n = self.norm()
        return self.scaled(1.0 / n) if n else self


def term_vector(tokens: Iterable[str]) -> TermVector:
    return TermVector(Counter(tokens))


def term_set(tokens: Iterable[str]) -> frozenset[str]:
    return frozenset(tokens)


@dataclass(frozen=True)
class NGramMultiset:
    grams: Mapping[tuple, int]
    n: int
    skip: int = 0
    unit: Unit = "word"

    def __post_init__(self):
        object.__setattr__(self, "grams", MappingProxyType(dict(self.grams)))

    def total(self) -> int:
        return sum(self.grams.values())

    def config(self) -> tuple[int, int, str]:
        return (self.n, self.skip, self.unit)


def skip_grams(seq: Sequence, n: int, skip: int) -> Counter:
    """Count every n-gram whose skipped positions sum to at most ``skip``.

    Grams keep sequence order. ``skip=0`` gives plain contiguous n-grams.
    """
    if n < 1 or skip < 0:
        raise InvalidParams(f"need n >= 1 and skip >= 0, got n={n}, skip={skip}")
    counts: Counter = Counter()
    length = len(seq)
    if skip == 0:
        for i in range(length - n + 1):
            counts[tuple(seq[i:i + n])] += 1
        return counts
    for start in range(length):
        stop = min(length, start + n + skip)
        # positions for the remaining n-1 elements, all inside the window
        for rest in itertools.combinations(range(start + 1, stop), n - 1):
            counts[(seq[start],) + tuple(seq[j] for j in rest)] += 1
    return counts


def extract_ngrams(seq: Sequence, n: int, skip: int = 0, unit: Unit = "word") -> NGramMultiset:
    return NGramMultiset(skip_grams(seq, n, skip), n, skip, unit)
