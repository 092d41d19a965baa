"""POS-sequence patterns and their frequency table."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from kosana.errors import EmptyCorpus
from kosana.tagging import FineTag, TaggedCorpus, TaggedEntry

RENDER = {
    FineTag.NoCm: "N",
    FineTag.NoPr: "N",
    FineTag.AjBa: "Adj",
    FineTag.AjCp: "Adj",
    FineTag.AjSp: "Adj",
    FineTag.AsPp: "Adp",
    FineTag.At: "Art",
    FineTag.Cj: "Conj",
    FineTag.Vb: "V",
    FineTag.Ad: "Adv",
    FineTag.Abbr: "Abr",
    FineTag.Rgf: "Res",
    FineTag.Dig: "Dig",
    FineTag.PnDm: "Pn",
    FineTag.PnPe: "Pn",
    FineTag.PnRi: "Pn",
    FineTag.PnPo: "Pn",
    FineTag.PtNg: "Pt",
    FineTag.PunctOpen: "OPunct",
    FineTag.PunctClose: "CPunct",
    FineTag.PunctOther: "Punct",
}

LEGEND = {
    "Abr": "Abbreviation",
    "Adj": "Adjective",
    "Adp": "Adposition",
    "Adv": "Adverb",
    "Art": "Article",
    "Conj": "Conjunction",
    "CPunct": "Close punctuation",
    "Dig": "Digits",
    "N": "Noun (common and proper)",
    "OPunct": "Open punctuation",
    "Pn": "Pronoun",
    "Pt": "Negative particle",
    "Punct": "Punctuation",
    "Res": "Residual (foreign word)",
    "V": "Verb",
}

SEP = " + "


@dataclass(frozen=True, order=True)
class PatternKey:
    rendered: tuple

    def __post_init__(self):
        if not self.rendered:
            raise ValueError("a pattern needs at least one tag")

    @property
    def display(self) -> str:
        return SEP.join(self.rendered)

    @classmethod
    def parse(cls, display: str) -> "PatternKey":
        return cls(tuple(display.split(SEP)))

    def __str__(self):
        return self.display


def render_tags(tags) -> PatternKey:
    return PatternKey(tuple(RENDER[FineTag(t)] for t in tags))


def render_pattern(entry: TaggedEntry) -> PatternKey:
    return render_tags(entry.tags)


@dataclass(frozen=True)
class PatternRow:
    pattern: PatternKey
    count: int
    pct_of_entries: Fraction


@dataclass(frozen=True)
class PatternTable:
    rows: tuple
    entries: int
    k: int

    @property
    def unique_patterns(self) -> int:
        return len(self.rows)

    @property
    def entries_per_pattern_avg(self) -> Fraction:
        return Fraction(self.entries, self.unique_patterns)

    def coverage(self, k: int | None = None) -> tuple:
        """``(k, covered entries, share of entries)`` for the first k rows."""
        k = self.k if k is None else k
        covered = sum(r.count for r in self.rows[:k])
        return k, covered, Fraction(covered, self.entries)

    @property
    def topk_coverage(self) -> tuple:
        return self.coverage()

    def top(self, k: int | None = None) -> tuple:
        return self.rows[: self.k if k is None else k]


def table_from_counts(counts: dict, k: int = 20) -> PatternTable:
    """Sort by count descending, ties by display form."""
    if k < 1:
        raise ValueError("k must be at least 1")
    total = sum(counts.values())
    if total == 0:
        raise EmptyCorpus("no entries to mine")
    ordered = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0].display))
    rows = tuple(PatternRow(p, c, Fraction(c, total)) for p, c in ordered)
    return PatternTable(rows, total, k)


def mine_patterns(corpus: TaggedCorpus, k: int = 20) -> PatternTable:
    if not corpus.entries:
        raise EmptyCorpus(f"corpus {corpus.name!r} has no entries")
    return table_from_counts(Counter(render_pattern(te) for te in corpus.entries), k)
