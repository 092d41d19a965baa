"""Atomic/complex concept classification and lint findings.

The classifier is syntactic. Some multi-word entries are single concepts
even though they contain an adposition ("Hours of labor"); those have to
be listed in ``ClassifierConfig.compound_whitelist``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import IO, Iterable

from kosana.errors import ConfigError, EmptyCorpus, UnknownRule
from kosana.profiling import Role, classify_role
from kosana.patterns import RENDER
from kosana.tagging import FineTag, TaggedCorpus, TaggedEntry


class ConceptKind(str, Enum):
    Atomic = "Atomic"
    ComplexEnumeration = "ComplexEnumeration"
    ComplexComposite = "ComplexComposite"


@dataclass(frozen=True)
class ConceptClass:
    value: ConceptKind
    evidence: tuple = ()

    def __post_init__(self):
        if (self.value is ConceptKind.Atomic) != (not self.evidence):
            raise ValueError("Atomic carries no evidence; complex classes need at least one span")


@dataclass
class ClassifierConfig:
    compound_whitelist: frozenset = frozenset()
    open_class_markers: frozenset = frozenset({"other", "etc"})
    qualifier_as_composite: bool = True

    def __post_init__(self):
        self.compound_whitelist = frozenset(self.compound_whitelist)
        self.open_class_markers = frozenset(m.casefold() for m in self.open_class_markers)


COMPOSITE_TAGS = frozenset({FineTag.AsPp, FineTag.Vb, FineTag.PnPo, FineTag.PtNg, FineTag.AjCp, FineTag.AjSp})
# tokens that delimit the runs an "and" or a comma joins
_RUN_BREAKS = frozenset({FineTag.Cj, FineTag.PunctOther, FineTag.PunctOpen, FineTag.PunctClose})


def _is_entity(tok) -> bool:
    return classify_role(tok.tag) is Role.Entity


def _is_comma(tok) -> bool:
    return tok.tag is FineTag.PunctOther and tok.surface == ","


def parenthetical_qualifiers(entry: TaggedEntry) -> list[tuple]:
    """Spans ``(start, end)`` of bracketed groups that hold an entity token."""
    found = []
    toks = entry.tokens
    i = 0
    while i < len(toks):
        if toks[i].tag is FineTag.PunctOpen:
            for j in range(i + 1, len(toks)):
                if toks[j].tag is FineTag.PunctClose:
                    if any(_is_entity(t) for t in toks[i + 1 : j]):
                        found.append((toks[i].span[0], toks[j].span[1]))
                    i = j
                    break
        i += 1
    return found


def _run_has_entity(toks, start: int, step: int) -> bool:
    i = start
    while 0 <= i < len(toks) and toks[i].tag not in _RUN_BREAKS:
        if _is_entity(toks[i]):
            return True
        i += step
    return False


def joining_conjunctions(entry: TaggedEntry) -> list[int]:
    """Indexes of Cj tokens with an entity-bearing run on both sides."""
    toks = entry.tokens
    return [
        i for i, t in enumerate(toks)
        if t.tag is FineTag.Cj and _run_has_entity(toks, i - 1, -1) and _run_has_entity(toks, i + 1, 1)
    ]


def listing_commas(entry: TaggedEntry) -> list[int]:
    """Indexes of commas separating two entity-bearing runs."""
    toks = entry.tokens
    return [
        i for i, t in enumerate(toks)
        if _is_comma(t) and _run_has_entity(toks, i - 1, -1) and _run_has_entity(toks, i + 1, 1)
    ]


def classify_concept(entry: TaggedEntry, config: ClassifierConfig | None = None) -> ConceptClass:
    config = config or ClassifierConfig()
    if entry.text in config.compound_whitelist:
        return ConceptClass(ConceptKind.Atomic)

    toks = entry.tokens
    relation_spans = tuple(t.span for t in toks if t.tag in COMPOSITE_TAGS)
    if relation_spans:
        return ConceptClass(ConceptKind.ComplexComposite, relation_spans)

    if config.qualifier_as_composite:
        quals = parenthetical_qualifiers(entry)
        if quals:
            return ConceptClass(ConceptKind.ComplexComposite, tuple(quals))

    enum_idx = {i for i, t in enumerate(toks) if t.tag is FineTag.Cj}
    enum_idx.update(listing_commas(entry))
    enum_idx.update(i for i, t in enumerate(toks) if t.surface.casefold() in config.open_class_markers)
    if enum_idx:
        return ConceptClass(ConceptKind.ComplexEnumeration, tuple(toks[i].span for i in sorted(enum_idx)))
    return ConceptClass(ConceptKind.Atomic)


@dataclass(frozen=True)
class Distribution:
    atomic: Fraction
    enumeration: Fraction
    composite: Fraction
    entries: int

    def as_tuple(self) -> tuple:
        return self.atomic, self.enumeration, self.composite


def distribution(corpus: TaggedCorpus, config: ClassifierConfig | None = None) -> Distribution:
    if not corpus.entries:
        raise EmptyCorpus(f"corpus {corpus.name!r} has no entries")
    n = len(corpus.entries)
    counts = {k: 0 for k in ConceptKind}
    for te in corpus.entries:
        counts[classify_concept(te, config).value] += 1
    return Distribution(
        Fraction(counts[ConceptKind.Atomic], n),
        Fraction(counts[ConceptKind.ComplexEnumeration], n),
        Fraction(counts[ConceptKind.ComplexComposite], n),
        n,
    )


# --- lint ----------------------------------------------------------------------

SEVERITIES = ("info", "warning", "error")
SEVERITY_RANK = {s: i for i, s in enumerate(SEVERITIES)}

# schemes whose entries are meant to be concepts rather than ontology terms
CONCEPT_SCHEMES = frozenset({"thesaurus", "subject-headings", "classification", "generic"})


@dataclass(frozen=True)
class Rule:
    code: str
    rule_id: str
    severity: str
    description: str


RULES = (
    Rule("R1", "COMPOSITE_CONCEPT", "warning", "entry is a composite of related concepts"),
    Rule("R2", "ENUMERATION", "warning", "entry enumerates several concepts or names an open class"),
    Rule("R3", "AMBIGUOUS_CONJUNCTION", "warning", "conjunction joins two concepts; union or intersection is unstated"),
    Rule("R4", "INVERTED_HEADING", "info", "inverted heading: noun, comma, adjective"),
    Rule("R5", "PARENTHETICAL_QUALIFIER", "info", "parenthetical qualifier attached to the term"),
    Rule("R6", "INSTANCE_CLASS_MIXING", "info", "proper noun or abbreviation mixes instances into a concept scheme"),
    Rule("R7", "CHRONOLOGY_DIGITS", "info", "digit sequence, usually chronological, inside the entry"),
)
RULES_BY_ID = {r.rule_id: r for r in RULES}
_ALIASES = {r.code: r.rule_id for r in RULES}
_RULE_ORDER = {r.rule_id: i for i, r in enumerate(RULES)}


@dataclass(frozen=True)
class Finding:
    rule_id: str
    severity: str
    entry_locator: str
    message: str
    evidence: tuple = ()  # ((start, end), surface) pairs

    def to_dict(self) -> dict:
        return {
            "rule_id": self.rule_id,
            "severity": self.severity,
            "entry_locator": self.entry_locator,
            "message": self.message,
            "evidence": [[list(span), surface] for span, surface in self.evidence],
        }

    def to_text(self) -> str:
        ev = ", ".join(f"{a}-{b} {s!r}" for (a, b), s in self.evidence)
        return f"{self.entry_locator}: {self.severity.upper()} {self.rule_id} {self.message} [{ev}]"


@dataclass
class RuleSettings:
    """Per-rule enable flag and severity, keyed by rule id."""

    enabled: dict = field(default_factory=lambda: {r.rule_id: True for r in RULES})
    severity: dict = field(default_factory=lambda: {r.rule_id: r.severity for r in RULES})

    @classmethod
    def from_mapping(cls, mapping: dict) -> "RuleSettings":
        settings = cls()
        for key, opts in mapping.items():
            rule_id = _ALIASES.get(key, key)
            if rule_id not in RULES_BY_ID:
                raise UnknownRule(f"unknown rule {key!r}")
            if not isinstance(opts, dict):
                raise ConfigError(f"rule {key!r}: expected an object with enabled/severity")
            if "enabled" in opts:
                settings.enabled[rule_id] = bool(opts["enabled"])
            if "severity" in opts:
                if opts["severity"] not in SEVERITY_RANK:
                    raise ConfigError(f"rule {key!r}: unknown severity {opts['severity']!r}")
                settings.severity[rule_id] = opts["severity"]
        return settings

    @classmethod
    def load(cls, fp: IO[str]) -> "RuleSettings":
        try:
            mapping = json.load(fp)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"rules file is not valid JSON: {exc}") from None
        if not isinstance(mapping, dict):
            raise ConfigError("rules file must be a JSON object")
        return cls.from_mapping(mapping)


def _evidence(entry: TaggedEntry, spans: Iterable[tuple]) -> tuple:
    return tuple((tuple(span), entry.text[span[0] : span[1]]) for span in spans)


def _inverted_heading_spans(entry: TaggedEntry) -> list[tuple]:
    toks = entry.tokens
    return [
        (toks[i].span[0], toks[i + 2].span[1])
        for i in range(len(toks) - 2)
        if RENDER[toks[i].tag] == "N" and _is_comma(toks[i + 1]) and RENDER[toks[i + 2].tag] == "Adj"
    ]


def lint_entry(entry: TaggedEntry, scheme: str, config: ClassifierConfig) -> dict:
    """Map rule id -> evidence spans for every rule the entry triggers."""
    hits = {}
    concept = classify_concept(entry, config)
    if concept.value is ConceptKind.ComplexComposite:
        hits["COMPOSITE_CONCEPT"] = concept.evidence
    elif concept.value is ConceptKind.ComplexEnumeration:
        hits["ENUMERATION"] = concept.evidence

    toks = entry.tokens
    conj = joining_conjunctions(entry)
    if conj:
        hits["AMBIGUOUS_CONJUNCTION"] = tuple(toks[i].span for i in conj)
    inverted = _inverted_heading_spans(entry)
    if inverted:
        hits["INVERTED_HEADING"] = tuple(inverted)
    quals = parenthetical_qualifiers(entry)
    if quals:
        hits["PARENTHETICAL_QUALIFIER"] = tuple(quals)
    if scheme in CONCEPT_SCHEMES:
        names = tuple(t.span for t in toks if t.tag in (FineTag.NoPr, FineTag.Abbr))
        if names:
            hits["INSTANCE_CLASS_MIXING"] = names
    digits = tuple(t.span for t in toks if t.tag is FineTag.Dig)
    if digits:
        hits["CHRONOLOGY_DIGITS"] = digits
    return hits


def entry_locator(entry: TaggedEntry, index: int) -> str:
    return entry.entry.provenance[0] if entry.entry.provenance else f"#{index}"


def lint_corpus(
    corpus: TaggedCorpus,
    config: ClassifierConfig | None = None,
    rules: RuleSettings | None = None,
) -> list[Finding]:
    """Findings ordered by entry, then by rule."""
    config = config or ClassifierConfig()
    rules = rules or RuleSettings()
    for rule_id in rules.enabled:
        if rule_id not in RULES_BY_ID:
            raise UnknownRule(f"unknown rule {rule_id!r}")
    findings = []
    for idx, te in enumerate(corpus.entries):
        hits = lint_entry(te, corpus.scheme, config)
        for rule_id in sorted(hits, key=_RULE_ORDER.__getitem__):
            if not rules.enabled.get(rule_id, True):
                continue
            findings.append(Finding(
                rule_id,
                rules.severity[rule_id],
                entry_locator(te, idx),
                RULES_BY_ID[rule_id].description,
                _evidence(te, hits[rule_id]),
            ))
    return findings


def worst_severity(findings: Iterable[Finding]) -> str | None:
    worst = None
    for f in findings:
        if worst is None or SEVERITY_RANK[f.severity] > SEVERITY_RANK[worst]:
            worst = f.severity
    return worst


def write_findings_jsonl(findings: Iterable[Finding], fp: IO[str]) -> None:
    for f in findings:
        fp.write(json.dumps(f.to_dict(), ensure_ascii=False) + "\n")


def write_findings_text(findings: Iterable[Finding], fp: IO[str]) -> None:
    for f in findings:
        fp.write(f.to_text() + "\n")
