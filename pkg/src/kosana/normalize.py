"""Symbol stripping, whitespace cleanup and case-sensitive deduplication."""
from __future__ import annotations

import json
import unicodedata
from dataclasses import dataclass, field
from typing import IO, Iterable

from kosana.errors import KosError, MixedSchemes
from kosana.ingest import SCHEMES, RawEntry

DEFAULT_SYMBOLS = frozenset("!%*")


@dataclass(frozen=True)
class Entry:
    text: str
    provenance: tuple = ()


@dataclass
class Corpus:
    name: str
    scheme: str
    entries: list = field(default_factory=list)
    duplicate_count: int = 0
    dropped_empty_count: int = 0

    def __len__(self):
        return len(self.entries)


def strip_symbols(text: str, symbols: Iterable[str] = DEFAULT_SYMBOLS) -> str:
    symbols = set(symbols)
    return "".join(ch for ch in text if ch not in symbols)


def normalize_whitespace(text: str) -> str:
    return " ".join(text.split())


def normalize_text(text: str, symbols: Iterable[str] = DEFAULT_SYMBOLS, nfc: bool = False) -> str:
    # stripping can open up whitespace runs, so it has to come first
    if nfc:
        text = unicodedata.normalize("NFC", text)
    return normalize_whitespace(strip_symbols(text, symbols))


def dedup_entries(
    raw: list[RawEntry],
    name: str,
    symbols: Iterable[str] = DEFAULT_SYMBOLS,
    nfc: bool = False,
) -> Corpus:
    """Normalize ``raw`` and merge exact duplicates, keeping first-seen order.

    Comparison is case-sensitive: "Freedom" and "freedom" stay apart.
    Entries that normalize to the empty string are dropped and counted in
    ``dropped_empty_count`` rather than ``duplicate_count``.
    """
    schemes = {r.scheme for r in raw}
    if len(schemes) > 1:
        raise MixedSchemes(f"entries mix schemes: {sorted(schemes)}")
    scheme = schemes.pop() if schemes else "generic"

    symbols = frozenset(symbols)
    merged: dict[str, list[str]] = {}
    dropped = 0
    for r in raw:
        text = normalize_text(r.text, symbols, nfc)
        if not text:
            dropped += 1
            continue
        merged.setdefault(text, []).append(r.locator)
    entries = [Entry(text, tuple(locs)) for text, locs in merged.items()]
    return Corpus(
        name=name,
        scheme=scheme,
        entries=entries,
        duplicate_count=len(raw) - len(entries) - dropped,
        dropped_empty_count=dropped,
    )


# --- JSON Lines persistence ----------------------------------------------------

def corpus_header(corpus) -> dict:
    return {
        "name": corpus.name,
        "scheme": corpus.scheme,
        "duplicate_count": corpus.duplicate_count,
        "dropped_empty_count": corpus.dropped_empty_count,
    }


def read_header(line: str) -> dict:
    try:
        header = json.loads(line)
    except json.JSONDecodeError as exc:
        raise KosError(f"line 1: invalid JSON header: {exc}") from None
    if not isinstance(header, dict) or "name" not in header or "scheme" not in header:
        raise KosError("line 1: missing corpus header with name and scheme")
    if header["scheme"] not in SCHEMES:
        raise KosError(f"line 1: unknown scheme {header['scheme']!r}")
    return header


def write_corpus(corpus: Corpus, fp: IO[str]) -> None:
    fp.write(json.dumps(corpus_header(corpus), ensure_ascii=False) + "\n")
    for e in corpus.entries:
        fp.write(json.dumps({"text": e.text, "provenance": list(e.provenance)}, ensure_ascii=False) + "\n")


def read_corpus(fp: IO[str]) -> Corpus:
    lines = [ln for ln in fp.read().splitlines() if ln.strip()]
    if not lines:
        raise KosError("empty corpus file (no header)")
    header = read_header(lines[0])
    entries = []
    for lineno, line in enumerate(lines[1:], start=2):
        try:
            obj = json.loads(line)
            entries.append(Entry(obj["text"], tuple(obj.get("provenance", ()))))
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise KosError(f"line {lineno}: bad entry record: {exc}") from None
    return Corpus(
        name=header["name"],
        scheme=header["scheme"],
        entries=entries,
        duplicate_count=int(header.get("duplicate_count", 0)),
        dropped_empty_count=int(header.get("dropped_empty_count", 0)),
    )
