"""Serialization and side-by-side rendering of analysis results.

An *analysis bundle* is the JSON document written by ``kosana analyze``:
``{"name", "scheme", "profile", "patterns", "distribution"}``. Counts are
stored unrounded so every derived value can be rebuilt exactly; the
two-decimal strings next to them are for readers only.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

from kosana.concepts import Distribution
from kosana.errors import KosError, TooFewCorpora
from kosana.patterns import LEGEND, PatternKey, PatternRow, PatternTable
from kosana.profiling import (
    ENTITY_TAGS,
    RELATION_TAGS,
    UNCATEGORIZED_TAGS,
    CorpusProfile,
    Stat,
    fmt_num,
    fmt_pct,
    profile_counts,
)
from kosana.tagging import FineTag

TAG_LABELS = {
    FineTag.NoCm: "Nouns common",
    FineTag.NoPr: "Nouns proper",
    FineTag.Abbr: "Abbreviations",
    FineTag.PnDm: "Pronouns demonstrative",
    FineTag.PnPe: "Pronouns personal",
    FineTag.PnRi: "Pronouns relative-indefinite",
    FineTag.Rgf: "Residual, foreign word",
    FineTag.Vb: "Verbs",
    FineTag.Cj: "Conjunctions",
    FineTag.AsPp: "Adpositions",
    FineTag.PtNg: "Particles negative",
    FineTag.AjCp: "Adjectives comparative",
    FineTag.AjSp: "Adjectives superlative",
    FineTag.Ad: "Adverbs",
    FineTag.PnPo: "Pronouns possessive",
    FineTag.AjBa: "Adjectives basic",
    FineTag.At: "Articles",
    FineTag.Dig: "Digits",
    FineTag.PunctOpen: "Punctuation open",
    FineTag.PunctClose: "Punctuation close",
    FineTag.PunctOther: "Punctuation other",
}

CLASSIFIER_NOTE = (
    "concept-classifier: atomic/complex classes come from a syntactic heuristic "
    "(relation tags and parenthetical qualifiers make composites; conjunctions, listing "
    "commas and open-class markers make enumerations). Compounds that are single concepts "
    "despite an adposition must be whitelisted; the shares are an approximation."
)
PATTERN_LEGEND_NOTE = "pattern-legend: " + "; ".join(f"{k} = {v}" for k, v in sorted(LEGEND.items()))


# --- profile -----------------------------------------------------------------

def _stat_dict(s: Stat) -> dict:
    return {"count": s.count, "avg_per_entry": fmt_num(s.avg_per_entry), "pct_of_words": fmt_pct(s.pct_of_words)}


def profile_to_dict(p: CorpusProfile) -> dict:
    per_tag = p.per_tag
    adj_count, adj_pct = p.uncategorized_adjective
    return {
        "name": p.name,
        "scheme": p.scheme,
        "entries": p.entries,
        "tokens": p.tokens,
        "words": p.words,
        "words_per_entry": fmt_num(p.words_per_entry),
        "entities": {
            "sum": _stat_dict(p.entity_sum),
            "tags": {t.value: _stat_dict(per_tag[t]) for t in ENTITY_TAGS},
        },
        "relations": {
            "sum": _stat_dict(p.relation_sum),
            "tags": {t.value: _stat_dict(per_tag[t]) for t in RELATION_TAGS},
        },
        "uncategorized": {
            "tags": {t.value: _stat_dict(per_tag[t]) for t in UNCATEGORIZED_TAGS},
        },
        "uncategorized_adjective": {"count": adj_count, "pct_of_words": fmt_pct(adj_pct)},
        "notes": list(p.notes),
    }


def profile_from_dict(d: dict) -> CorpusProfile:
    try:
        counts = {}
        for block in ("entities", "relations", "uncategorized"):
            for tag, stat in d[block]["tags"].items():
                counts[FineTag(tag)] = int(stat["count"])
        p = profile_counts(int(d["entries"]), counts, name=d.get("name", ""), scheme=d.get("scheme", "generic"))
    except (KeyError, TypeError, ValueError) as exc:
        raise KosError(f"malformed profile document: {exc}") from None
    if p.tokens != d["tokens"] or p.words != d["words"]:
        raise KosError("profile document totals disagree with its tag counts")
    return CorpusProfile(p.entries, p.tokens, p.words, p.tag_counts, p.name, p.scheme, tuple(d.get("notes", ())))


def _profile_rows(p: CorpusProfile) -> list[tuple]:
    """(label, role, count, avg, pct) in display order; blanks are ''."""
    per_tag = p.per_tag
    rows = [
        ("Number of entries", "", str(p.entries), "", ""),
        ("Number of tokens", "", str(p.tokens), "", ""),
        ("Number of words", "", str(p.words), "", ""),
        ("Words per entry (avg)", "", fmt_num(p.words_per_entry), "", ""),
    ]

    def stat_row(label, role, s):
        return (label, role, str(s.count), fmt_num(s.avg_per_entry), fmt_pct(s.pct_of_words))

    rows.append(stat_row("POS defined as entities (sum)", "Entity", p.entity_sum))
    rows += [stat_row(f"- {TAG_LABELS[t]} ({t.value})", "Entity", per_tag[t]) for t in ENTITY_TAGS]
    rows.append(stat_row("POS defined as relations (sum)", "Relation", p.relation_sum))
    rows += [stat_row(f"- {TAG_LABELS[t]} ({t.value})", "Relation", per_tag[t]) for t in RELATION_TAGS]
    rows += [stat_row(f"- {TAG_LABELS[t]} ({t.value})", "Uncategorized", per_tag[t]) for t in UNCATEGORIZED_TAGS]
    return rows


def render_profile(p: CorpusProfile, fmt: str = "json") -> bytes:
    if fmt == "json":
        return (json.dumps(profile_to_dict(p), indent=2, ensure_ascii=False) + "\n").encode("utf-8")
    rows = _profile_rows(p)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["metric", "role", "count", "avg_per_entry", "pct_of_words"])
        w.writerows(rows)
        return buf.getvalue().encode("utf-8")
    if fmt in ("md", "markdown"):
        title = p.name or "corpus"
        lines = [
            f"### Tag metrics: {title}",
            "",
            "| Metric | Count | Avg per entry | % of words |",
            "|---|---:|---:|---:|",
        ]
        lines += [f"| {label} | {count} | {avg} | {pct} |" for label, _role, count, avg, pct in rows]
        if p.notes:
            lines += ["", "Notes:", ""] + [f"- {n}" for n in p.notes]
        return ("\n".join(lines) + "\n").encode("utf-8")
    raise ValueError(f"unknown format {fmt!r}")


# --- patterns ----------------------------------------------------------------

def pattern_table_to_dict(t: PatternTable) -> dict:
    k, covered, share = t.topk_coverage
    return {
        "entries": t.entries,
        "unique_patterns": t.unique_patterns,
        "entries_per_pattern_avg": fmt_num(t.entries_per_pattern_avg),
        "k": t.k,
        "topk_coverage": {"k": k, "covered_entries": covered, "pct": fmt_pct(share)},
        "rows": [{"pattern": r.pattern.display, "count": r.count, "pct": fmt_pct(r.pct_of_entries)} for r in t.rows],
    }


def pattern_table_from_dict(d: dict) -> PatternTable:
    try:
        rows = tuple(
            PatternRow(PatternKey.parse(r["pattern"]), int(r["count"]), Fraction(int(r["count"]), int(d["entries"])))
            for r in d["rows"]
        )
        return PatternTable(rows, int(d["entries"]), int(d["k"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise KosError(f"malformed pattern table: {exc}") from None


def coverage_label(t: PatternTable, k: int | None = None) -> str:
    k = t.k if k is None else k
    return f"Sum of {k}" if t.unique_patterns >= k else "Sum"


def render_patterns(t: PatternTable, fmt: str = "md") -> bytes:
    if fmt == "json":
        return (json.dumps(pattern_table_to_dict(t), indent=2, ensure_ascii=False) + "\n").encode("utf-8")
    if fmt not in ("md", "markdown"):
        raise ValueError(f"unknown format {fmt!r}")
    _, covered, share = t.topk_coverage
    lines = ["| POS pattern | Total No and rate |", "|---|---:|"]
    lines += [f"| {r.pattern.display} | {r.count} ({fmt_pct(r.pct_of_entries)}) |" for r in t.top()]
    lines.append(f"| {coverage_label(t)} | {covered} ({fmt_pct(share)}) |")
    lines += [
        "",
        f"Unique patterns: {t.unique_patterns}; entries per pattern (avg): {fmt_num(t.entries_per_pattern_avg)}",
    ]
    return ("\n".join(lines) + "\n").encode("utf-8")


# --- distribution --------------------------------------------------------------

def distribution_to_dict(d: Distribution) -> dict:
    return {
        "entries": d.entries,
        "atomic": int(d.atomic * d.entries),
        "enumeration": int(d.enumeration * d.entries),
        "composite": int(d.composite * d.entries),
        "atomic_pct": fmt_pct(d.atomic),
        "enumeration_pct": fmt_pct(d.enumeration),
        "composite_pct": fmt_pct(d.composite),
    }


def distribution_from_dict(d: dict) -> Distribution:
    n = int(d["entries"])
    return Distribution(Fraction(int(d["atomic"]), n), Fraction(int(d["enumeration"]), n), Fraction(int(d["composite"]), n), n)


# --- bundles and comparison ------------------------------------------------------

@dataclass
class CorpusBundle:
    name: str
    profile: CorpusProfile
    patterns: PatternTable
    distribution: Distribution

    @property
    def scheme(self) -> str:
        return self.profile.scheme


def bundle_to_dict(b: CorpusBundle) -> dict:
    return {
        "name": b.name,
        "scheme": b.scheme,
        "profile": profile_to_dict(b.profile),
        "patterns": pattern_table_to_dict(b.patterns),
        "distribution": distribution_to_dict(b.distribution),
    }


def bundle_from_dict(d: dict) -> CorpusBundle:
    try:
        return CorpusBundle(
            d["name"],
            profile_from_dict(d["profile"]),
            pattern_table_from_dict(d["patterns"]),
            distribution_from_dict(d["distribution"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise KosError(f"malformed analysis document: {exc}") from None


def render_bundle(b: CorpusBundle, fmt: str) -> bytes:
    if fmt == "json":
        return (json.dumps(bundle_to_dict(b), indent=2, ensure_ascii=False) + "\n").encode("utf-8")
    if fmt == "csv":
        return render_profile(b.profile, "csv")
    d = b.distribution
    parts = [
        render_profile(b.profile, "md").decode("utf-8"),
        f"### Syntactic patterns: {b.name}\n",
        render_patterns(b.patterns, "md").decode("utf-8"),
        f"### Concept classes: {b.name}\n",
        "| Class | Share |\n|---|---:|\n"
        f"| Atomic | {fmt_pct(d.atomic)} |\n"
        f"| Complex: enumeration | {fmt_pct(d.enumeration)} |\n"
        f"| Complex: composite | {fmt_pct(d.composite)} |\n",
    ]
    return "\n".join(parts).encode("utf-8")


@dataclass
class ComparisonReport:
    corpora: list
    k: int
    notes: list = field(default_factory=list)


def compare(bundles: list[CorpusBundle], k: int = 20) -> ComparisonReport:
    if len(bundles) < 2:
        raise TooFewCorpora(f"comparison needs at least 2 corpora, got {len(bundles)}")
    corpora = [
        CorpusBundle(b.name, b.profile, PatternTable(b.patterns.rows, b.patterns.entries, k), b.distribution)
        for b in bundles
    ]
    notes = []
    for b in corpora:
        for n in b.profile.notes:
            if n not in notes:
                notes.append(n)
    notes.append(CLASSIFIER_NOTE)
    notes.append(PATTERN_LEGEND_NOTE)
    by_scheme = {b.scheme: b for b in corpora}
    if "subject-headings" in by_scheme and "thesaurus" in by_scheme:
        sh = by_scheme["subject-headings"].distribution
        th = by_scheme["thesaurus"].distribution
        notes.append(
            "complex-concept share, subject headings vs thesaurus: "
            f"{fmt_pct(1 - sh.atomic)} versus {fmt_pct(1 - th.atomic)} here; "
            "the published reference comparison reads 20.55% versus 7.79%."
        )
    return ComparisonReport(corpora, k, notes)


def _md_table(header: list[str], rows: list[list[str]]) -> list[str]:
    out = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    out += ["| " + " | ".join(r) + " |" for r in rows]
    return out


def render_comparison(report: ComparisonReport) -> bytes:
    names = [b.name for b in report.corpora]
    lines = ["# KOS comparison", "", "## Tag metrics", "", "Cells read count / avg per entry / % of words.", ""]

    per_corpus = [_profile_rows(b.profile) for b in report.corpora]
    rows = []
    for i, row in enumerate(per_corpus[0]):
        cells = []
        for prows in per_corpus:
            _label, _role, count, avg, pct = prows[i]
            cells.append(f"{count} / {avg} / {pct}" if avg else count)
        rows.append([row[0]] + cells)
    lines += _md_table(["Metric"] + names, rows)

    k = report.k
    lines += ["", f"## Syntactic patterns (top {k})", ""]
    rows = []
    for rank in range(k):
        cells = []
        for b in report.corpora:
            top = b.patterns.top()
            if rank < len(top):
                r = top[rank]
                cells.append(f"{r.pattern.display}: {r.count} ({fmt_pct(r.pct_of_entries)})")
            else:
                cells.append("-")
        if all(c == "-" for c in cells):
            break
        rows.append([str(rank + 1)] + cells)
    sums = []
    for b in report.corpora:
        _, covered, share = b.patterns.topk_coverage
        sums.append(f"{coverage_label(b.patterns)}: {covered} ({fmt_pct(share)})")
    rows.append(["Coverage"] + sums)
    rows.append(["Unique patterns"] + [str(b.patterns.unique_patterns) for b in report.corpora])
    rows.append(["Entries per pattern (avg)"] + [fmt_num(b.patterns.entries_per_pattern_avg) for b in report.corpora])
    lines += _md_table(["Rank"] + names, rows)

    lines += ["", "## Concept classes", ""]
    rows = [
        ["Atomic"] + [fmt_pct(b.distribution.atomic) for b in report.corpora],
        ["Complex: enumeration"] + [fmt_pct(b.distribution.enumeration) for b in report.corpora],
        ["Complex: composite"] + [fmt_pct(b.distribution.composite) for b in report.corpora],
    ]
    lines += _md_table(["Class"] + names, rows)

    if report.notes:
        lines += ["", "## Notes", ""] + [f"- {n}" for n in report.notes]
    return ("\n".join(lines) + "\n").encode("utf-8")
