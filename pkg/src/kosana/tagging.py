"""Tokenization and part-of-speech tags.

Two ways in: the built-in lexicon tagger (exact lookup plus a few
orthographic fallbacks) for tests and small vocabularies, and an importer
for the tab-separated vertical format that an external tagger can emit.
"""
from __future__ import annotations

import json
import unicodedata
from dataclasses import dataclass, field
from enum import Enum
from typing import IO, BinaryIO, Iterable, NamedTuple

from kosana.errors import (
    CountMismatch,
    EmptyCorpus,
    EmptyFile,
    KosError,
    MissingTab,
    TextMismatch,
    UnknownTag,
)
from kosana.normalize import Corpus, Entry, corpus_header, read_header


class FineTag(str, Enum):
    NoCm = "NoCm"
    NoPr = "NoPr"
    Abbr = "Abbr"
    AjBa = "AjBa"
    AjCp = "AjCp"
    AjSp = "AjSp"
    Vb = "Vb"
    Cj = "Cj"
    AsPp = "AsPp"
    PtNg = "PtNg"
    Ad = "Ad"
    At = "At"
    PnDm = "PnDm"
    PnPe = "PnPe"
    PnRi = "PnRi"
    PnPo = "PnPo"
    Rgf = "Rgf"
    Dig = "Dig"
    PunctOpen = "PunctOpen"
    PunctClose = "PunctClose"
    PunctOther = "PunctOther"

    def __str__(self):
        return self.value


PUNCT_TAGS = frozenset({FineTag.PunctOpen, FineTag.PunctClose, FineTag.PunctOther})
NON_WORD_TAGS = PUNCT_TAGS | {FineTag.Dig}


def parse_tag(value: str, where: str = "") -> FineTag:
    try:
        return FineTag(value)
    except ValueError:
        raise UnknownTag(where or "?", repr(value)) from None


# --- tokenizer ---------------------------------------------------------------

OPEN_PUNCT = "([{«"
CLOSE_PUNCT = ")]}»"
OTHER_PUNCT = ",.;:'\"/—-"
# these two stay inside a word when flanked by word characters
SOFT_PUNCT = "-'"
_ALL_PUNCT = OPEN_PUNCT + CLOSE_PUNCT + OTHER_PUNCT

_HINTS = {c: "open" for c in OPEN_PUNCT} | {c: "close" for c in CLOSE_PUNCT} | {c: "other" for c in OTHER_PUNCT}


class RawToken(NamedTuple):
    surface: str
    hint: str  # word | dig | open | close | other
    start: int
    end: int


def _wordlike(ch: str | None) -> bool:
    return ch is not None and not ch.isspace() and ch not in _ALL_PUNCT


def tokenize(text: str) -> list[RawToken]:
    """Split ``text`` into word, digit and single-character punctuation tokens."""
    tokens = []
    n = len(text)
    word_start = None

    def close_word(end):
        surface = text[word_start:end]
        hint = "dig" if surface.isdecimal() else "word"
        tokens.append(RawToken(surface, hint, word_start, end))

    for i, ch in enumerate(text):
        if ch.isspace():
            if word_start is not None:
                close_word(i)
                word_start = None
            continue
        if ch in _ALL_PUNCT:
            if ch in SOFT_PUNCT:
                prev = text[i - 1] if i > 0 else None
                nxt = text[i + 1] if i + 1 < n else None
                if word_start is not None and _wordlike(prev) and _wordlike(nxt):
                    continue
            if word_start is not None:
                close_word(i)
                word_start = None
            tokens.append(RawToken(ch, _HINTS[ch], i, i + 1))
            continue
        if word_start is None:
            word_start = i
    if word_start is not None:
        close_word(n)
    return tokens


# --- tagged entries ----------------------------------------------------------

@dataclass(frozen=True)
class Token:
    surface: str
    tag: FineTag
    span: tuple


@dataclass(frozen=True)
class TaggedEntry:
    entry: Entry
    tokens: tuple

    @property
    def text(self) -> str:
        return self.entry.text

    @property
    def tags(self) -> tuple:
        return tuple(t.tag for t in self.tokens)


@dataclass
class TaggedCorpus:
    name: str
    scheme: str
    entries: list = field(default_factory=list)
    duplicate_count: int = 0
    dropped_empty_count: int = 0

    def __len__(self):
        return len(self.entries)


def reconstruct_text(surfaces_and_tags: Iterable[tuple]) -> tuple[str, list[tuple]]:
    """Join surfaces with single spaces, except before closing/other
    punctuation and after opening punctuation. Returns text and spans."""
    parts = []
    spans = []
    pos = 0
    prev_tag = None
    for surface, tag in surfaces_and_tags:
        if prev_tag is not None and tag not in (FineTag.PunctClose, FineTag.PunctOther) and prev_tag != FineTag.PunctOpen:
            parts.append(" ")
            pos += 1
        parts.append(surface)
        spans.append((pos, pos + len(surface)))
        pos += len(surface)
        prev_tag = tag
    return "".join(parts), spans


def locate_spans(text: str, surfaces: list[str]) -> list[tuple]:
    """Find each surface in order, allowing only whitespace between them."""
    spans = []
    pos = 0
    for s in surfaces:
        idx = text.find(s, pos)
        if idx < 0 or text[pos:idx].strip():
            raise KosError(f"token {s!r} does not align with text {text!r}")
        spans.append((idx, idx + len(s)))
        pos = idx + len(s)
    if text[pos:].strip():
        raise KosError(f"text {text!r} has characters not covered by tokens")
    return spans


# --- lexicon tagger ----------------------------------------------------------

SCRIPTS_BY_LANGUAGE = {
    "el": "GREEK",
    "grc": "GREEK",
    "ru": "CYRILLIC",
    "bg": "CYRILLIC",
    "uk": "CYRILLIC",
    "sr": "CYRILLIC",
    "ar": "ARABIC",
    "he": "HEBREW",
}


def primary_script_for(language_tag: str) -> str:
    return SCRIPTS_BY_LANGUAGE.get(language_tag.split("-")[0].lower(), "LATIN")


def char_script(ch: str) -> str | None:
    name = unicodedata.name(ch, "")
    return name.split(" ", 1)[0] if name else None


def load_lexicon(fp: IO[str]) -> dict:
    """Read ``surface<TAB>tag`` lines; repeating a surface is an error."""
    lexicon = {}
    for lineno, line in enumerate(fp.read().splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        if "\t" not in line:
            raise MissingTab(f"line {lineno}", line[:80])
        surface, tag = line.split("\t", 1)
        if surface in lexicon:
            raise KosError(f"line {lineno}: duplicate lexicon surface {surface!r}")
        lexicon[surface] = parse_tag(tag.strip(), f"line {lineno}")
    return lexicon


def _fallback_tag(surface: str, entry_initial: bool, primary_script: str | None) -> FineTag:
    letters = [c for c in surface if c.isalpha()]
    if len(surface) >= 2 and letters and all(c.isupper() for c in letters):
        return FineTag.Abbr
    if surface[0].isupper() and not entry_initial:
        return FineTag.NoPr
    if primary_script is not None and any(char_script(c) != primary_script for c in letters):
        return FineTag.Rgf
    return FineTag.NoCm


_PUNCT_HINT_TAGS = {"open": FineTag.PunctOpen, "close": FineTag.PunctClose, "other": FineTag.PunctOther}


def tag_with_lexicon(
    tokens: list[RawToken],
    lexicon: dict,
    primary_script: str | None = "LATIN",
    entry: Entry | None = None,
) -> TaggedEntry:
    out = []
    seen_word = False
    for tok in tokens:
        if tok.hint in _PUNCT_HINT_TAGS:
            tag = _PUNCT_HINT_TAGS[tok.hint]
        elif tok.hint == "dig":
            tag = FineTag.Dig
        elif tok.surface in lexicon:
            tag = lexicon[tok.surface]
        else:
            tag = _fallback_tag(tok.surface, not seen_word, primary_script)
        if tok.hint == "word":
            seen_word = True
        out.append(Token(tok.surface, tag, (tok.start, tok.end)))
    if entry is None:
        entry = Entry(" ".join(t.surface for t in tokens))
    return TaggedEntry(entry, tuple(out))


def tag_text(text: str, lexicon: dict, primary_script: str | None = "LATIN") -> TaggedEntry:
    return tag_with_lexicon(tokenize(text), lexicon, primary_script, Entry(text))


def tag_corpus(corpus: Corpus, lexicon: dict, primary_script: str | None = "LATIN") -> TaggedCorpus:
    return TaggedCorpus(
        name=corpus.name,
        scheme=corpus.scheme,
        entries=[tag_with_lexicon(tokenize(e.text), lexicon, primary_script, e) for e in corpus.entries],
        duplicate_count=corpus.duplicate_count,
        dropped_empty_count=corpus.dropped_empty_count,
    )


# --- vertical format -----------------------------------------------------------

def import_pretagged(stream: BinaryIO | bytes) -> list[TaggedEntry]:
    data = stream if isinstance(stream, (bytes, bytearray)) else stream.read()
    text = bytes(data).decode("utf-8-sig")

    entries = []
    block: list[tuple] = []

    def flush():
        if block:
            rebuilt, spans = reconstruct_text(block)
            tokens = tuple(Token(s, t, sp) for (s, t), sp in zip(block, spans))
            entries.append(TaggedEntry(Entry(rebuilt), tokens))
            block.clear()

    for lineno, line in enumerate(text.split("\n"), start=1):
        line = line.rstrip("\r")
        if not line.strip():
            flush()
            continue
        if line.startswith("#"):
            continue
        if "\t" not in line:
            raise MissingTab(f"line {lineno}", line[:80])
        surface, tag = line.split("\t", 1)
        if not surface:
            raise MissingTab(f"line {lineno}", "empty surface")
        block.append((surface, parse_tag(tag.strip(), f"line {lineno}")))
    flush()
    if not entries:
        raise EmptyFile("pre-tagged file contains no entries")
    return entries


def export_vertical(entries: Iterable[TaggedEntry], fp: IO[str]) -> None:
    for te in entries:
        for tok in te.tokens:
            fp.write(f"{tok.surface}\t{tok.tag.value}\n")
        fp.write("\n")


def align_pretagged(corpus: Corpus, tagged: list[TaggedEntry]) -> TaggedCorpus:
    """Pair tagged blocks with corpus entries by position; texts must agree."""
    if len(tagged) != len(corpus.entries):
        raise CountMismatch(f"corpus has {len(corpus.entries)} entries, tagged input has {len(tagged)}")
    out = []
    for i, (entry, te) in enumerate(zip(corpus.entries, tagged)):
        if te.text != entry.text:
            raise TextMismatch(i, entry.text, te.text)
        out.append(TaggedEntry(entry, te.tokens))
    return TaggedCorpus(corpus.name, corpus.scheme, out, corpus.duplicate_count, corpus.dropped_empty_count)


# --- tagged JSON Lines ---------------------------------------------------------

def write_tagged(corpus: TaggedCorpus, fp: IO[str]) -> None:
    fp.write(json.dumps(corpus_header(corpus), ensure_ascii=False) + "\n")
    for te in corpus.entries:
        rec = {
            "text": te.text,
            "tokens": [[t.surface, t.tag.value] for t in te.tokens],
            "provenance": list(te.entry.provenance),
        }
        fp.write(json.dumps(rec, ensure_ascii=False) + "\n")


def read_tagged(fp: IO[str]) -> TaggedCorpus:
    lines = [ln for ln in fp.read().splitlines() if ln.strip()]
    if not lines:
        raise EmptyCorpus("tagged corpus file is empty")
    header = read_header(lines[0])
    entries = []
    for lineno, line in enumerate(lines[1:], start=2):
        try:
            rec = json.loads(line)
            text = rec["text"]
            pairs = [(s, parse_tag(t, f"line {lineno}")) for s, t in rec["tokens"]]
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise KosError(f"line {lineno}: bad tagged record: {exc}") from None
        spans = locate_spans(text, [s for s, _ in pairs])
        tokens = tuple(Token(s, t, sp) for (s, t), sp in zip(pairs, spans))
        entries.append(TaggedEntry(Entry(text, tuple(rec.get("provenance", ()))), tokens))
    return TaggedCorpus(
        name=header["name"],
        scheme=header["scheme"],
        entries=entries,
        duplicate_count=int(header.get("duplicate_count", 0)),
        dropped_empty_count=int(header.get("dropped_empty_count", 0)),
    )
