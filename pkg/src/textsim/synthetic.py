"""Deterministic synthetic corpus in the evaluation layout.

The paraphrases are built mechanically: content words are replaced by words
from a substitution pool at a rate that grows from the basic to the complex
level, and complex documents additionally merge, split, add, delete and
exchange phrases. Gold maps are written alongside each paraphrase.

Run ``python -m textsim.synthetic OUTDIR`` to regenerate the shipped corpus.
"""

from __future__ import annotations

import random
import re
import sys
from dataclasses import dataclass
from pathlib import Path

from textsim.alignment import AlignmentMap, serialize_alignment
from textsim.textproc import PhraseDocument, load_stopwords

SEED = 20140901

SOURCE = """\
Der Baumkuchen ist ein geschichteter Kuchen, der auf einer drehenden Walze über offenem Feuer gebacken wird.
Sein Name stammt von den hellen und dunklen Ringen, die im Querschnitt an die Jahresringe eines Baumes erinnern.
Für den Teig werden Butter, Zucker, Eier, Mehl und Speisestärke zu einer glatten Masse verrührt.
Viele Konditoreien geben außerdem Marzipan, Vanille, Zitronenschale oder einen Schuss Rum hinzu.
Die Walze wird zunächst mit einer dünnen Schicht Teig überzogen und langsam vor der Hitze gedreht.
Sobald die Schicht goldbraun ist, trägt der Bäcker die nächste Lage Teig auf.
Auf diese Weise entstehen fünfzehn bis zwanzig Schichten, bis der Kuchen seine volle Höhe erreicht.
Mit einem gezahnten Kamm formt man während des Backens die typischen Zacken an der Oberfläche.
Nach dem Abkühlen wird der Kuchen von der Walze gezogen und in einzelne Ringe geschnitten.
Zum Schluss überzieht man die Stücke mit Schokolade oder einer weißen Zuckerglasur.
Erste Rezepte für Spießkuchen finden sich bereits in Kochbüchern des späten Mittelalters.
Im achtzehnten Jahrhundert galt das Gebäck an vielen Fürstenhöfen als besondere Spezialität.
Die Stadt Salzwedel in der Altmark gilt bis heute als Hochburg der Baumkuchenbäckerei.
Dort bewahren mehrere Familienbetriebe alte Rezepturen und führen Besucher durch ihre Backstuben.
Auch in Dresden, Cottbus und Berlin hat das Handwerk eine lange Tradition.
Ein guter Baumkuchen gilt als Prüfstein für das Können eines Konditormeisters.
Das Backen verlangt viel Geduld, denn jede Schicht muss gleichmäßig bräunen.
Wird die Walze zu schnell gedreht, tropft der flüssige Teig in die Glut.
Ist das Feuer zu heiß, verbrennen die äußeren Lagen, bevor das Innere gar ist.
Heute verwenden viele Betriebe elektrische Öfen mit regelbaren Heizstäben.
Die Grundzutaten sind jedoch seit Generationen nahezu unverändert geblieben.
Nach dem Ersten Weltkrieg brachte ein deutscher Konditor das Rezept nach Japan.
In Japan entwickelte sich der Kuchen rasch zu einem beliebten Geschenk zu Hochzeiten.
Japanische Hersteller verkaufen inzwischen jedes Jahr Millionen kleiner Ringe in Geschenkpackungen.
In Ungarn und Polen kennt man verwandte Spießkuchen mit eigenen Namen und Formen.
Der litauische Šakotis wird ebenfalls am Spieß gebacken und besitzt lange spitze Zweige.
Kleine Baumkuchenspitzen sind in der Weihnachtszeit ein verbreitetes Naschwerk.
Sie bestehen aus Resten des Kuchens, die in Würfel geschnitten und mit Kuvertüre überzogen werden.
Ein ganzer Baumkuchen kann mehrere Kilogramm wiegen und über einen Meter hoch sein.
Gut verpackt bleibt das Gebäck wegen seines hohen Butteranteils mehrere Wochen frisch.
"""

EXTRA = """\
Manche Kunden bestellen den Kuchen schon Monate vor den Feiertagen.
In einigen Museen kann man historische Backwalzen aus Holz besichtigen.
Jedes Jahr im Herbst lädt ein Fest zum Probieren verschiedener Sorten ein.
Die Zacken entstehen auch dadurch, dass Teig beim Drehen leicht nach unten läuft.
Fachleute erkennen die Qualität an der Gleichmäßigkeit der Ringe.
Bei Kindern sind besonders die kleinen Spitzen mit Vollmilchschokolade beliebt.
Ein erfahrener Meister braucht für einen großen Kuchen mehrere Stunden.
"""

UNRELATED = """\
Die Eisenbahnstrecke zwischen den beiden Hafenstädten wurde vor über hundert Jahren eröffnet.
Damals fuhren schwere Dampflokomotiven mit langen Güterzügen durch das flache Marschland.
Heute verkehren auf der elektrifizierten Trasse moderne Triebwagen im Stundentakt.
Pendler nutzen die Verbindung täglich, um in die Büros der Innenstadt zu gelangen.
An mehreren Haltepunkten wurden kürzlich barrierefreie Bahnsteige errichtet.
Die Signaltechnik stammt teilweise noch aus den siebziger Jahren.
Ein neues Stellwerk soll künftig den gesamten Abschnitt zentral steuern.
Naturschützer verlangten Lärmschutzwände entlang der Brutgebiete seltener Vögel.
Im Winter sorgen Weichenheizungen dafür, dass der Verkehr trotz Frost rollt.
Die Fahrgastzahlen sind seit der Einführung eines günstigen Monatstickets stark gestiegen.
Viele Reisende wünschen sich zusätzliche Verbindungen am späten Abend.
Der Landkreis prüft deshalb einen Ausbau auf zwei durchgehende Gleise.
Eine Brücke über den Fluss muss dafür vollständig erneuert werden.
Ingenieure rechnen mit einer Bauzeit von mindestens vier Jahren.
Während der Arbeiten sollen Ersatzbusse die ausfallenden Züge ersetzen.
Ein historischer Bahnhof wurde liebevoll restauriert und beherbergt nun ein Café.
Im Obergeschoss zeigt eine Ausstellung Fotografien aus der Gründerzeit der Strecke.
Eisenbahnfreunde betreiben an Wochenenden eine Museumsbahn mit alten Waggons.
Die Fahrkarten für diese Sonderfahrten sind oft schon Wochen vorher ausverkauft.
Touristen verbinden den Ausflug gern mit einer Wanderung an der Küste.
Am Deich weiden Schafe, und im Watt suchen Vögel bei Ebbe nach Nahrung.
Die Gemeinden hoffen auf mehr Besucher durch eine bessere Anbindung.
Gleichzeitig befürchten Anwohner steigende Mieten in den kleinen Orten.
Der Verkehrsverbund plant einen einheitlichen Tarif für Bahn, Bus und Fähre.
Fahrräder dürfen außerhalb der Hauptverkehrszeiten kostenlos mitgenommen werden.
"""

POOL = """
Apfel Wolke Fenster Treppe Brücke Laterne Hafen Segel Garten Mantel Kiste Lampe Wiese Regal Tasche
Spiegel Kerze Schrank Becher Feder Faden Nadel Hammer Leiter Zaun Teppich Kissen Ofenrohr Schaufel
Rahmen Ziegel Knopf Schlüssel Gabel Löffel Kanne Flasche Korb Eimer Besen Pinsel Tinte Papier Stempel
Uhr Glocke Trommel Geige Flöte Harfe Orgel Pfeife Kompass Anker Ruder Netz Angel Zelt Hütte Turm
Mauer Graben Quelle Bach Teich Insel Hügel Felsen Höhle Pfad Straße Kreuzung Markt Platz Brunnen
leise rasch heiter trocken schwer breit schmal grün blau rund eckig weich hart kühl warm
wandern singen tragen bauen malen schreiben lesen rufen suchen finden zählen messen sammeln pflegen
"""


@dataclass(frozen=True)
class Paraphrase:
    doc: PhraseDocument
    gold: AlignmentMap


_TOKEN = re.compile(r"[^\W_]+")


def _lines(text: str) -> list[str]:
    return [line for line in text.splitlines() if line.strip()]


class Editor:
    """Word-substitution engine bound to one random stream."""

    def __init__(self, rng: random.Random):
        self.rng = rng
        self.stopwords = load_stopwords()
        self.pool = POOL.split()

    def substitute(self, phrase: str, rate: float, force: bool = True) -> str:
        """Replace each content word with probability ``rate``.

        With ``force`` at least one word changes, so no phrase survives verbatim.
        """
        words = list(_TOKEN.finditer(phrase))
        content = [i for i, m in enumerate(words) if m.group().lower() not in self.stopwords]
        chosen = {i for i in content if self.rng.random() < rate}
        if force and not chosen and content:
            chosen.add(self.rng.choice(content))
        out, last = [], 0
        for i, m in enumerate(words):
            out.append(phrase[last:m.start()])
            out.append(self.rng.choice(self.pool) if i in chosen else m.group())
            last = m.end()
        out.append(phrase[last:])
        return "".join(out)


def _strip_end(phrase: str) -> str:
    return phrase.rstrip(" .!?")


def _split_phrase(phrase: str) -> tuple[str, str]:
    words = _strip_end(phrase).split()
    cut = len(words) // 2
    second = " ".join(words[cut:])
    return " ".join(words[:cut]).rstrip(",;") + ".", second[0].upper() + second[1:] + "."


def _finish(items: list[tuple[str, frozenset[int]]], n_source: int, doc_id: str) -> Paraphrase:
    mapping: dict[int, list[int]] = {i: [] for i in range(n_source)}
    for j, (_, sources) in enumerate(items):
        for i in sources:
            mapping[i].append(j)
    doc = PhraseDocument(tuple(text for text, _ in items), doc_id)
    return Paraphrase(doc, AlignmentMap.from_dict(mapping, n_source, len(items)))


def _swap_pairs(items: list, rng: random.Random, count: int) -> None:
    for _ in range(count):
        k = rng.randrange(len(items) - 1)
        items[k], items[k + 1] = items[k + 1], items[k]


def basic_paraphrase(
    source: list[str], rate: float, editor: Editor, doc_id: str, change: str = "none"
) -> Paraphrase:
    """Substitutions plus at most one structural change.

    ``change`` is one of ``none``, ``delete`` (drop one phrase), ``add``
    (insert one new phrase) or ``permute`` (swap a few neighbouring phrases).
    """
    rng = editor.rng
    items = [(editor.substitute(p, rate), frozenset({i})) for i, p in enumerate(source)]
    if change == "delete":
        del items[rng.randrange(len(items))]
    elif change == "add":
        items.insert(rng.randrange(len(items) + 1), (rng.choice(_lines(EXTRA)), frozenset()))
    elif change == "permute":
        _swap_pairs(items, rng, 3)
    return _finish(items, len(source), doc_id)


def complex_paraphrase(
    source: list[str],
    rate: float,
    editor: Editor,
    doc_id: str,
    merges: int = 1,
    splits: int = 1,
    exchanges: int = 1,
    added: int = 2,
    deleted: int = 2,
    swaps: int = 2,
) -> Paraphrase:
    """Heavier substitutions plus merges, splits, segment exchanges, additions,
    deletions and a mild reordering."""
    rng = editor.rng
    items = [(editor.substitute(p, rate), frozenset({i})) for i, p in enumerate(source)]

    for _ in range(deleted):
        del items[rng.randrange(len(items))]
    for _ in range(exchanges):
        k = rng.randrange(len(items) - 1)
        (a, sa), (b, sb) = items[k], items[k + 1]
        a1, a2 = _split_phrase(a)
        b1, b2 = _split_phrase(b)
        both = sa | sb
        items[k] = (_strip_end(a1) + " " + b2[0].lower() + b2[1:], both)
        items[k + 1] = (_strip_end(b1) + " " + a2[0].lower() + a2[1:], both)
    for _ in range(merges):
        k = rng.randrange(len(items) - 1)
        (a, sa), (b, sb) = items[k], items[k + 1]
        items[k:k + 2] = [(_strip_end(a) + ", und " + b[0].lower() + b[1:], sa | sb)]
    for _ in range(splits):
        k = rng.randrange(len(items))
        text, sources = items[k]
        first, second = _split_phrase(text)
        items[k:k + 1] = [(first, sources), (second, sources)]
    extra = _lines(EXTRA)
    for text in rng.sample(extra, added):
        items.insert(rng.randrange(len(items) + 1), (editor.substitute(text, rate), frozenset()))
    _swap_pairs(items, rng, swaps)
    return _finish(items, len(source), doc_id)


def unrelated_document(editor: Editor, doc_id: str, size: int = 20) -> PhraseDocument:
    phrases = editor.rng.sample(_lines(UNRELATED), size)
    return PhraseDocument(tuple(editor.substitute(p, 0.2) for p in phrases), doc_id)


def cited_document(source: list[str], editor: Editor, doc_id: str) -> PhraseDocument:
    """A closely related document: a contiguous excerpt, barely edited."""
    rng = editor.rng
    start = rng.randrange(len(source) // 3)
    excerpt = source[start:start + 2 * len(source) // 3]
    return PhraseDocument(tuple(editor.substitute(p, 0.05, force=False) for p in excerpt), doc_id)


BASIC_RATES = (0.10, 0.15, 0.20, 0.25, 0.30)
BASIC_CHANGES = ("none", "delete", "add", "permute", "none")
COMPLEX_RATES = (0.40, 0.45, 0.50, 0.55, 0.60)
COMPLEX_SHAPES = (
    dict(merges=1, splits=1, exchanges=0, added=2, deleted=2, swaps=0),
    dict(merges=2, splits=2, exchanges=1, added=3, deleted=2, swaps=2),
    dict(merges=2, splits=1, exchanges=0, added=3, deleted=3, swaps=0),
    dict(merges=3, splits=3, exchanges=2, added=5, deleted=5, swaps=3),
    dict(merges=2, splits=1, exchanges=1, added=3, deleted=5, swaps=2),
)


def source_document() -> PhraseDocument:
    return PhraseDocument(tuple(_lines(SOURCE)), "source")


def build_corpus(seed: int = SEED) -> dict[str, str]:
    """Relative path -> file content for the whole synthetic corpus."""
    editor = Editor(random.Random(seed))
    source = _lines(SOURCE)
    files = {"source.txt": "\n".join(source) + "\n"}

    def put(rel: str, doc: PhraseDocument) -> None:
        files[rel] = doc.text() + "\n"

    for k, (rate, change) in enumerate(zip(BASIC_RATES, BASIC_CHANGES), start=1):
        p = basic_paraphrase(source, rate, editor, f"{k:02d}", change)
        put(f"basic/{k:02d}.txt", p.doc)
        files[f"maps/basic-{k:02d}.map"] = serialize_alignment(p.gold)
    for k, (rate, shape) in enumerate(zip(COMPLEX_RATES, COMPLEX_SHAPES), start=1):
        p = complex_paraphrase(source, rate, editor, f"{k:02d}", **shape)
        put(f"complex/{k:02d}.txt", p.doc)
        files[f"maps/complex-{k:02d}.map"] = serialize_alignment(p.gold)
    for k in range(1, 6):
        put(f"control/cited/{k:02d}.txt", cited_document(source, editor, f"{k:02d}"))
    for k in range(1, 6):
        put(f"control/unrelated/{k:02d}.txt", unrelated_document(editor, f"{k:02d}"))
    return files


def permuted_paraphrase(
    source: PhraseDocument, rate: float, seed: int = SEED, doc_id: str = "permuted"
) -> Paraphrase:
    """Shuffle the source phrases and edit each at ``rate``; ``rate=0`` keeps
    the text and yields a pure permutation."""
    editor = Editor(random.Random(seed))
    items = [
        (editor.substitute(p, rate) if rate > 0 else p, frozenset({i}))
        for i, p in enumerate(source.phrases)
    ]
    editor.rng.shuffle(items)
    return _finish(items, len(source), doc_id)


def write_corpus(root: str | Path, seed: int = SEED) -> list[Path]:
    root = Path(root)
    written = []
    for rel, content in build_corpus(seed).items():
        path = root / rel
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(content, encoding="utf-8")
        written.append(path)
    align = root / "align"
    align.mkdir(exist_ok=True)
    source = source_document()
    for name, rate in (("light", 0.15), ("pure", 0.0)):
        p = permuted_paraphrase(source, rate, seed, name)
        for path, content in (
            (align / f"{name}.txt", p.doc.text() + "\n"),
            (align / f"{name}.map", serialize_alignment(p.gold)),
        ):
            path.write_text(content, encoding="utf-8")
            written.append(path)
    return written


if __name__ == "__main__":
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "corpus/synthetic")
    for path in write_corpus(out):
        print(path)
