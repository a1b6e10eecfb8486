"""Gold phrase-alignment files (``.map``) and structural paraphrase rules.

A map file has one line per phrase of the original document::

    0 : 29        phrase 0 became phrase 29
    2:            phrase 2 was removed
    3: 1          phrases 3 and 4 were merged into phrase 1
    4 :1
    13 : 11,12    phrase 13 was split into phrases 11 and 12
    5: 5,6        segments of phrases 5 and 6 were exchanged
    6: 5,6

Target phrases that appear on no line were added. Blank lines and lines
starting with ``#`` are ignored.
"""

from __future__ import annotations

import enum
import re
from collections import defaultdict
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from itertools import combinations

from textsim.errors import (
    DuplicateSource,
    InconsistentCounts,
    IndexOutOfRange,
    MapSyntaxError,
    MissingSource,
)
from textsim.textproc import PhraseDocument

_LINE = re.compile(r"(\d+)[ \t]*:[ \t]*(\d+(?:[ \t]*,[ \t]*\d+)*)?")


@dataclass(frozen=True)
class AlignmentMap:
    """Source phrase index -> sorted target phrase indices.

    ``entries`` is sorted by source index. A map read without explicit counts
    may be partial: sources absent from the file are simply not listed, and
    :attr:`is_complete` tells whether every source in ``range(source_count)``
    has an entry.
    """

    entries: tuple[tuple[int, tuple[int, ...]], ...]
    source_count: int
    target_count: int

    def __post_init__(self):
        entries = tuple(sorted((int(s), tuple(sorted(set(t)))) for s, t in self.entries))
        object.__setattr__(self, "entries", entries)
        sources = [s for s, _ in entries]
        if len(set(sources)) != len(sources):
            raise DuplicateSource("source index listed twice")
        for s, targets in entries:
            if not 0 <= s < self.source_count:
                raise IndexOutOfRange(f"source {s} outside [0, {self.source_count})")
            for t in targets:
                if not 0 <= t < self.target_count:
                    raise IndexOutOfRange(f"target {t} outside [0, {self.target_count})")

    @classmethod
    def from_dict(
        cls,
        mapping: Mapping[int, Iterable[int]],
        source_count: int | None = None,
        target_count: int | None = None,
    ) -> AlignmentMap:
        """Build a map, inferring counts from the largest indices when omitted."""
        entries = tuple((s, tuple(ts)) for s, ts in mapping.items())
        if source_count is None:
            source_count = max(mapping, default=-1) + 1
        if target_count is None:
            target_count = max((t for _, ts in entries for t in ts), default=-1) + 1
        return cls(entries, source_count, target_count)

    def as_dict(self) -> dict[int, tuple[int, ...]]:
        return dict(self.entries)

    def targets(self, source: int) -> tuple[int, ...]:
        return self.as_dict()[source]

    @property
    def is_complete(self) -> bool:
        return len(self.entries) == self.source_count

    def links(self) -> frozenset[tuple[int, int]]:
        return frozenset((s, t) for s, ts in self.entries for t in ts)


def parse_alignment(
    text: str, source_count: int | None = None, target_count: int | None = None
) -> AlignmentMap:
    """Parse ``.map`` text.

    When ``source_count`` is given, every source index below it must have a
    line, otherwise :class:`MissingSource` is raised. Omitted counts are
    inferred from the largest index seen, and the map may then be partial.
    """
    seen: dict[int, tuple[int, ...]] = {}
    max_target = -1
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = _LINE.fullmatch(line)
        if m is None:
            raise MapSyntaxError(f"cannot parse {raw!r}", line_no)
        source = int(m.group(1))
        targets = tuple(int(t) for t in re.split(r"[ \t]*,[ \t]*", m.group(2))) if m.group(2) else ()
        if source in seen:
            raise DuplicateSource(f"source {source} listed again", line_no)
        if source_count is not None and source >= source_count:
            raise IndexOutOfRange(f"source {source} outside [0, {source_count})", line_no)
        for t in targets:
            if target_count is not None and t >= target_count:
                raise IndexOutOfRange(f"target {t} outside [0, {target_count})", line_no)
        max_target = max(max_target, *targets) if targets else max_target
        seen[source] = targets

    if source_count is None:
        source_count = max(seen, default=-1) + 1
    else:
        for index in range(source_count):
            if index not in seen:
                raise MissingSource(index)
    if target_count is None:
        target_count = max_target + 1
    return AlignmentMap(tuple(seen.items()), source_count, target_count)


def serialize_alignment(amap: AlignmentMap) -> str:
    lines = []
    for source, targets in amap.entries:
        if targets:
            lines.append(f"{source}: {','.join(map(str, targets))}")
        else:
            lines.append(f"{source}:")
    return "".join(line + "\n" for line in lines)


@dataclass(frozen=True)
class LinkClassification:
    deleted: frozenset[int] = frozenset()
    merges: Mapping[int, frozenset[int]] = field(default_factory=dict)
    splits: Mapping[int, frozenset[int]] = field(default_factory=dict)
    exchanges: frozenset[tuple[int, int]] = frozenset()
    added: frozenset[int] = frozenset()
    referenced: frozenset[int] = frozenset()


def classify_links(amap: AlignmentMap) -> LinkClassification:
    """Derive deletions, merges, splits, exchanges and additions.

    Categories overlap on purpose: the two sources of an exchange also count
    as splits, and their shared targets as merges.
    """
    by_target: dict[int, set[int]] = defaultdict(set)
    for s, ts in amap.entries:
        for t in ts:
            by_target[t].add(s)
    referenced = frozenset(by_target)
    exchanges = frozenset(
        (s1, s2)
        for (s1, t1), (s2, t2) in combinations(amap.entries, 2)
        if len(set(t1) & set(t2)) >= 2
    )
    return LinkClassification(
        deleted=frozenset(s for s, ts in amap.entries if not ts),
        merges={t: frozenset(ss) for t, ss in sorted(by_target.items()) if len(ss) >= 2},
        splits={s: frozenset(ts) for s, ts in amap.entries if len(ts) >= 2},
        exchanges=exchanges,
        added=frozenset(range(amap.target_count)) - referenced,
        referenced=referenced,
    )


class RuleLevel(enum.Enum):
    BASIC = "basic"
    COMPLEX = "complex"

    @property
    def max_added(self) -> int:
        return 1 if self is RuleLevel.BASIC else 5

    @property
    def max_deleted(self) -> int:
        return 1 if self is RuleLevel.BASIC else 5

    @property
    def exchanges_allowed(self) -> bool:
        return self is RuleLevel.COMPLEX


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str
    source: int | None = None
    target: int | None = None

    def __str__(self) -> str:
        return f"{self.kind}: {self.detail}"


def validate_rules(
    amap: AlignmentMap,
    source_doc: PhraseDocument,
    target_doc: PhraseDocument,
    level: RuleLevel | str,
) -> list[Violation]:
    """Check a paraphrased document against the structural rules of its level.

    * no target phrase may equal a source phrase (after trimming), any level;
    * basic: at most one phrase added or deleted in total, no exchanges;
    * complex: at most five additions and at most five deletions.
    """
    level = RuleLevel(level)
    if amap.source_count != len(source_doc) or amap.target_count != len(target_doc):
        raise InconsistentCounts(
            f"map is {amap.source_count}x{amap.target_count}, "
            f"documents are {len(source_doc)}x{len(target_doc)}"
        )
    violations = []
    originals: dict[str, list[int]] = defaultdict(list)
    for i, phrase in enumerate(source_doc.phrases):
        originals[phrase.strip()].append(i)
    for j, phrase in enumerate(target_doc.phrases):
        for i in originals.get(phrase.strip(), ()):
            violations.append(
                Violation("unaltered-phrase", f"target {j} repeats source {i} verbatim", i, j)
            )

    links = classify_links(amap)
    n_added, n_deleted = len(links.added), len(links.deleted)
    if level is RuleLevel.BASIC:
        if n_added + n_deleted > 1:
            violations.append(
                Violation("addition-budget", f"{n_added} added + {n_deleted} deleted = "
                          f"{n_added + n_deleted} > 1")
            )
    else:
        if n_added > level.max_added:
            violations.append(Violation("addition-budget", f"{n_added} added > {level.max_added}"))
        if n_deleted > level.max_deleted:
            violations.append(
                Violation("deletion-budget", f"{n_deleted} deleted > {level.max_deleted}")
            )
    if not level.exchanges_allowed:
        for s1, s2 in sorted(links.exchanges):
            violations.append(
                Violation("exchange-forbidden", f"sources {s1} and {s2} exchange segments", s1)
            )
    return violations
