"""Readers for the supported vocabulary source formats.

Every reader turns a byte stream into a flat list of :class:`RawEntry`.
Entry text is returned exactly as decoded; cleaning happens in
:mod:`kosana.normalize`.
"""
from __future__ import annotations

import csv
import io
import logging
import re
import xml.etree.ElementTree as ET
from dataclasses import dataclass
from typing import BinaryIO, Iterable

from kosana.errors import (
    EmptyCaption,
    IngestError,
    MalformedCsv,
    MalformedRow,
    MalformedTriple,
    MalformedXml,
    UnknownKind,
)

log = logging.getLogger(__name__)

SCHEMES = (
    "thesaurus",
    "subject-headings",
    "classification",
    "ontology-classes",
    "ontology-properties",
    "generic",
)

RDF_TYPE = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type"
SKOS_PREF_LABEL = "http://www.w3.org/2004/02/skos/core#prefLabel"
SKOS_CONCEPT = "http://www.w3.org/2004/02/skos/core#Concept"

LABEL_KINDS = {
    "class": "ontology-classes",
    "property": "ontology-properties",
    "generic": "generic",
}


@dataclass(frozen=True)
class RawEntry:
    text: str
    scheme: str
    locator: str
    source_file: str = ""

    def __post_init__(self):
        if not self.text.strip():
            raise ValueError("RawEntry text must be non-empty after trimming")
        if not self.locator:
            raise ValueError("RawEntry locator must be non-empty")
        if self.scheme not in SCHEMES:
            raise ValueError(f"unknown scheme {self.scheme!r}")


@dataclass
class IngestConfig:
    language_tag: str = "en"
    marc_include_subfields: frozenset = frozenset({"a", "x"})
    marc_exclude_subfields: frozenset = frozenset({"z", "y"})
    marc_include_tags: frozenset = frozenset({"150"})
    skos_label_predicate: str = SKOS_PREF_LABEL
    skos_concept_type: str = SKOS_CONCEPT

    def __post_init__(self):
        self.marc_include_subfields = frozenset(self.marc_include_subfields)
        self.marc_exclude_subfields = frozenset(self.marc_exclude_subfields)
        self.marc_include_tags = frozenset(self.marc_include_tags)
        overlap = self.marc_include_subfields & self.marc_exclude_subfields
        if overlap:
            raise ValueError(f"subfield codes both included and excluded: {sorted(overlap)}")


def _fail(err: IngestError, strict: bool, errors: list | None):
    if strict:
        raise err
    log.warning("skipped: %s", err)
    if errors is not None:
        errors.append(err)


def _read_text(stream: BinaryIO | bytes) -> str:
    data = stream if isinstance(stream, (bytes, bytearray)) else stream.read()
    return bytes(data).decode("utf-8-sig")


# --- N-Triples ---------------------------------------------------------------

_IRI = r"<([^<>\"{}|^`\\\x00-\x20]*)>"
_BNODE = r"_:([A-Za-z0-9_][A-Za-z0-9_.\-]*)"
_LITERAL = r'"((?:[^"\\\n\r]|\\.)*)"(?:@([A-Za-z]+(?:-[A-Za-z0-9]+)*)|\^\^' + _IRI + r")?"
_TRIPLE = re.compile(
    rf"^\s*(?:{_IRI}|{_BNODE})\s+{_IRI}\s+(?:{_IRI}|{_BNODE}|{_LITERAL})\s*\.\s*(?:#.*)?$"
)
_ESCAPE = re.compile(r"\\(u[0-9A-Fa-f]{4}|U[0-9A-Fa-f]{8}|[tbnrf\"'\\])")
_SIMPLE_ESCAPES = {"t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f", '"': '"', "'": "'", "\\": "\\"}


def _unescape(s: str) -> str:
    def repl(m):
        code = m.group(1)
        if code[0] in "uU":
            return chr(int(code[1:], 16))
        return _SIMPLE_ESCAPES[code]

    return _ESCAPE.sub(repl, s)


@dataclass(frozen=True)
class Triple:
    subject: str
    predicate: str
    object: str
    is_literal: bool = False
    language: str | None = None
    subject_is_bnode: bool = False


def iter_ntriples(text: str, strict: bool = False, errors: list | None = None) -> Iterable[Triple]:
    """Yield triples from N-Triples text, one per non-blank, non-comment line."""
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        m = _TRIPLE.match(line)
        if m is None:
            _fail(MalformedTriple(f"line {lineno}", stripped[:80]), strict, errors)
            continue
        s_iri, s_bnode, pred, o_iri, o_bnode, lit, lang, _dtype = m.groups()
        if lit is not None:
            try:
                value = _unescape(lit)
            except ValueError:
                _fail(MalformedTriple(f"line {lineno}", "bad escape"), strict, errors)
                continue
            yield Triple(s_iri or s_bnode, pred, value, True, lang, s_iri is None)
        else:
            yield Triple(s_iri or s_bnode, pred, o_iri or o_bnode, False, None, s_iri is None)


def parse_skos_ntriples(
    stream: BinaryIO | bytes,
    config: IngestConfig | None = None,
    *,
    scheme: str = "thesaurus",
    source_file: str = "",
    strict: bool = False,
    errors: list | None = None,
) -> list[RawEntry]:
    """Preferred labels of typed SKOS concepts, in the language of ``config``.

    Labels are buffered until the whole stream is read because the type
    triple may come after the label. Blank-node subjects are never concepts.
    """
    config = config or IngestConfig()
    want_lang = config.language_tag.lower()
    concepts = set()
    labels = []
    seen = set()
    for t in iter_ntriples(_read_text(stream), strict=strict, errors=errors):
        if t.subject_is_bnode:
            continue
        if t.predicate == RDF_TYPE and not t.is_literal and t.object == config.skos_concept_type:
            concepts.add(t.subject)
        elif (
            t.predicate == config.skos_label_predicate
            and t.is_literal
            and t.language is not None
            and t.language.lower() == want_lang
            and t.object.strip()
            and (t.subject, t.object) not in seen
        ):
            seen.add((t.subject, t.object))
            labels.append((t.subject, t.object))
    return [
        RawEntry(text, scheme, subject, source_file)
        for subject, text in labels
        if subject in concepts
    ]


# --- MARCXML -----------------------------------------------------------------

def _local(tag: str) -> str:
    return tag.rsplit("}", 1)[-1]


def parse_marc_authorities(
    stream: BinaryIO | bytes,
    config: IngestConfig | None = None,
    *,
    scheme: str = "subject-headings",
    source_file: str = "",
) -> list[RawEntry]:
    """Explode MARCXML authority headings into one entry per kept subfield.

    The locator is ``tag$code@record/subfield`` where both indices are
    zero-based and the subfield index runs over the whole record.
    """
    config = config or IngestConfig()
    try:
        root = ET.fromstring(_read_text(stream))
    except ET.ParseError as exc:
        line, col = exc.position
        raise MalformedXml(f"line {line}, column {col}", str(exc)) from None

    records = [root] if _local(root.tag) == "record" else [
        el for el in root.iter() if _local(el.tag) == "record"
    ]
    out = []
    for rec_idx, record in enumerate(records):
        sub_idx = 0
        for datafield in record:
            if _local(datafield.tag) != "datafield":
                continue
            tag = (datafield.get("tag") or "").strip()
            for subfield in datafield:
                if _local(subfield.tag) != "subfield":
                    continue
                code = subfield.get("code") or ""
                idx = sub_idx
                sub_idx += 1
                if tag not in config.marc_include_tags:
                    continue
                if code in config.marc_exclude_subfields or code not in config.marc_include_subfields:
                    continue
                value = subfield.text or ""
                if not value.strip():
                    continue
                out.append(RawEntry(value, scheme, f"{tag}${code}@{rec_idx}/{idx}", source_file))
    return out


# --- DDC captions ------------------------------------------------------------

def parse_ddc_captions(
    stream: BinaryIO | bytes,
    *,
    source_file: str = "",
    strict: bool = False,
    errors: list | None = None,
) -> list[RawEntry]:
    """Read a ``notation,caption`` CSV; rows are numbered from 1 after the header."""
    reader = csv.reader(io.StringIO(_read_text(stream), newline=""), strict=True)
    try:
        header = next(reader, None)
    except csv.Error as exc:
        raise MalformedCsv("row 0", str(exc)) from None
    if header is None:
        return []
    if [h.strip() for h in header] != ["notation", "caption"]:
        raise MalformedCsv("row 0", f"expected header notation,caption, got {header!r}")

    out = []
    row_no = 0
    while True:
        row_no += 1
        try:
            row = next(reader)
        except StopIteration:
            break
        except csv.Error as exc:
            # the reader cannot resynchronise after a quoting error
            raise MalformedCsv(f"row {row_no}", str(exc)) from None
        if not row:
            continue
        if len(row) != 2:
            _fail(MalformedCsv(f"row {row_no}", f"expected 2 fields, got {len(row)}"), strict, errors)
            continue
        notation, caption = row
        if not caption.strip():
            _fail(EmptyCaption(f"row {row_no}", notation), strict, errors)
            continue
        if not notation.strip():
            _fail(MalformedCsv(f"row {row_no}", "empty notation"), strict, errors)
            continue
        out.append(RawEntry(caption, "classification", notation, source_file))
    return out


# --- label tables ------------------------------------------------------------

def parse_label_table(
    stream: BinaryIO | bytes,
    *,
    source_file: str = "",
    strict: bool = False,
    errors: list | None = None,
) -> list[RawEntry]:
    """Read a ``kind<TAB>label`` table.

    The result is grouped by scheme (classes, properties, generic), keeping
    file order inside each group. Locators are 1-based data row numbers.
    """
    lines = _read_text(stream).splitlines()
    if not lines:
        return []
    if lines[0].split("\t") != ["kind", "label"]:
        raise MalformedRow("row 0", f"expected header kind<TAB>label, got {lines[0]!r}")
    groups = {scheme: [] for scheme in LABEL_KINDS.values()}
    for row_no, line in enumerate(lines[1:], start=1):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not parts[1].strip():
            _fail(MalformedRow(f"row {row_no}", line[:80]), strict, errors)
            continue
        kind, label = parts
        scheme = LABEL_KINDS.get(kind.strip())
        if scheme is None:
            _fail(UnknownKind(f"row {row_no}", kind), strict, errors)
            continue
        groups[scheme].append(RawEntry(label, scheme, str(row_no), source_file))
    return [e for scheme in LABEL_KINDS.values() for e in groups[scheme]]


FORMATS = ("skos-nt", "marcxml", "ddc-csv", "labels-tsv")


def parse_source(fmt: str, stream, config: IngestConfig, *, source_file="", strict=False, errors=None):
    """Dispatch on a CLI format name."""
    if fmt == "skos-nt":
        return parse_skos_ntriples(stream, config, source_file=source_file, strict=strict, errors=errors)
    if fmt == "marcxml":
        return parse_marc_authorities(stream, config, source_file=source_file)
    if fmt == "ddc-csv":
        return parse_ddc_captions(stream, source_file=source_file, strict=strict, errors=errors)
    if fmt == "labels-tsv":
        return parse_label_table(stream, source_file=source_file, strict=strict, errors=errors)
    raise ValueError(f"unknown format {fmt!r}")
