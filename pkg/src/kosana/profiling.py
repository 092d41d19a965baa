"""Entity/relation roles and per-corpus tag statistics.

All ratios are kept as :class:`fractions.Fraction`; rounding happens only
when a value is formatted.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from decimal import Decimal
from enum import Enum
from fractions import Fraction
from typing import NamedTuple

from kosana.errors import EmptyCorpus
from kosana.tagging import NON_WORD_TAGS, FineTag, TaggedCorpus, TaggedEntry


class Role(str, Enum):
    Entity = "Entity"
    Relation = "Relation"
    Uncategorized = "Uncategorized"


ENTITY_TAGS = (
    FineTag.NoCm, FineTag.NoPr, FineTag.Abbr,
    FineTag.PnDm, FineTag.PnPe, FineTag.PnRi, FineTag.Rgf,
)
RELATION_TAGS = (
    FineTag.Vb, FineTag.Cj, FineTag.AsPp, FineTag.PtNg,
    FineTag.AjCp, FineTag.AjSp, FineTag.Ad, FineTag.PnPo,
)
UNCATEGORIZED_TAGS = (
    FineTag.AjBa, FineTag.At, FineTag.Dig,
    FineTag.PunctOpen, FineTag.PunctClose, FineTag.PunctOther,
)

_ROLES = {t: Role.Entity for t in ENTITY_TAGS}
_ROLES.update({t: Role.Relation for t in RELATION_TAGS})
_ROLES.update({t: Role.Uncategorized for t in UNCATEGORIZED_TAGS})

# Published totals that cannot be reproduced from their own components.
REFERENCE_NOTES = (
    "relation-sum: the relation total is computed as the exact sum of Vb, Cj, AsPp, PtNg, "
    "AjCp, AjSp, Ad and PnPo. Published reference totals for three corpora exceed the sum "
    "of their listed components (Eurovoc 637 vs 622, LCSH 1671 vs 1653, DDC 2300 vs 2277); "
    "those totals are not replicated.",
    "ddc-adposition-pct: the published DDC adposition share reads 2.44%, but 796 of 14613 "
    "words is 5.45%; the published cell is treated as a typo.",
    "share-cells: two more published shares disagree with their counts (Eurovoc conjunctions "
    "0.75% vs 98/15067 = 0.65%; LCSH adverbs 1.40% vs 213/20497 = 1.04%); shares here are "
    "always recomputed from counts.",
)


def classify_role(tag: FineTag) -> Role:
    return _ROLES[FineTag(tag)]


def word_count(entry: TaggedEntry) -> int:
    """Tokens that are neither digits nor punctuation."""
    return sum(1 for t in entry.tokens if t.tag not in NON_WORD_TAGS)


def round2(value: Fraction) -> Decimal:
    """Round half away from zero to two decimals, exactly."""
    value = Fraction(value)
    scaled = abs(value) * 100
    n = int(scaled + Fraction(1, 2))
    if value < 0:
        n = -n
    return Decimal(n).scaleb(-2)


def fmt_num(value: Fraction) -> str:
    return f"{round2(value):.2f}"


def fmt_pct(value: Fraction) -> str:
    return f"{round2(value * 100):.2f}%"


class Stat(NamedTuple):
    count: int
    avg_per_entry: Fraction
    pct_of_words: Fraction  # a share in [0, 1]; format with fmt_pct


def ratio_stat(count: int, entries: int, words: int) -> Stat:
    avg = Fraction(count, entries) if entries else Fraction(0)
    pct = Fraction(count, words) if words else Fraction(0)
    return Stat(count, avg, pct)


@dataclass(frozen=True)
class CorpusProfile:
    entries: int
    tokens: int
    words: int
    tag_counts: dict
    name: str = ""
    scheme: str = "generic"
    notes: tuple = field(default=REFERENCE_NOTES)

    @property
    def words_per_entry(self) -> Fraction:
        return Fraction(self.words, self.entries) if self.entries else Fraction(0)

    def stat(self, count: int) -> Stat:
        return ratio_stat(count, self.entries, self.words)

    @property
    def per_tag(self) -> dict:
        return {t: self.stat(self.tag_counts.get(t, 0)) for t in FineTag}

    @property
    def entity_sum(self) -> Stat:
        return self.stat(sum(self.tag_counts.get(t, 0) for t in ENTITY_TAGS))

    @property
    def relation_sum(self) -> Stat:
        return self.stat(sum(self.tag_counts.get(t, 0) for t in RELATION_TAGS))

    @property
    def uncategorized_adjective(self) -> tuple:
        s = self.stat(self.tag_counts.get(FineTag.AjBa, 0))
        return s.count, s.pct_of_words


def profile_counts(entries: int, tag_counts: dict, *, name="", scheme="generic") -> CorpusProfile:
    """Build a profile from an entry count and a tag -> token count map."""
    counts = {t: int(tag_counts.get(t, 0)) for t in FineTag}
    tokens = sum(counts.values())
    words = sum(c for t, c in counts.items() if t not in NON_WORD_TAGS)
    return CorpusProfile(entries, tokens, words, counts, name, scheme)


def profile_corpus(corpus: TaggedCorpus) -> CorpusProfile:
    if not corpus.entries:
        raise EmptyCorpus(f"corpus {corpus.name!r} has no entries")
    counts = Counter(t.tag for te in corpus.entries for t in te.tokens)
    return profile_counts(len(corpus.entries), counts, name=corpus.name, scheme=corpus.scheme)
