import itertools

import pytest

from kosana.normalize import Entry
from kosana.tagging import FineTag as T
from kosana.tagging import TaggedCorpus, TaggedEntry, Token, reconstruct_text

import reference_tables as ref

# independent of kosana.patterns.RENDER: one fine tag per rendered symbol
FINE_FOR_SYMBOL = {
    "N": T.NoCm, "Adj": T.AjBa, "Adp": T.AsPp, "Art": T.At, "Conj": T.Cj, "V": T.Vb,
    "Adv": T.Ad, "Abr": T.Abbr, "Res": T.Rgf, "Dig": T.Dig, "Pn": T.PnDm, "Pt": T.PtNg,
    "OPunct": T.PunctOpen, "CPunct": T.PunctClose, "Punct": T.PunctOther,
}

SURFACE_FOR_TAG = {
    T.PunctOpen: "(", T.PunctClose: ")", T.PunctOther: ",", T.Dig: "1866",
    T.Abbr: "EU", T.NoPr: "Athens",
}


def make_entry(pairs, provenance=()):
    """TaggedEntry from (surface, tag) pairs, text rebuilt with the vertical-format spacing."""
    pairs = [(s, T(t)) for s, t in pairs]
    text, spans = reconstruct_text(pairs)
    return TaggedEntry(Entry(text, tuple(provenance)), tuple(Token(s, t, sp) for (s, t), sp in zip(pairs, spans)))


def entry_from_tags(tags, word="w"):
    return make_entry([(SURFACE_FOR_TAG.get(T(t), word), t) for t in tags])


def make_corpus(entries, scheme="generic", name="test"):
    return TaggedCorpus(name, scheme, list(entries))


def tag_count_corpus(name):
    """A tagged corpus whose entry/token/word totals and tag counts equal the
    published ones. Words not covered by a published row become articles;
    non-word tokens become commas."""
    entries, tokens, words = ref.TOTALS[name]
    counts = dict(ref.TAG_COUNTS[name])
    counts[T.At] = words - sum(counts.values())
    counts[T.PunctOther] = tokens - words
    assert counts[T.At] >= 0 and counts[T.PunctOther] >= 0
    stream = [t for t, c in counts.items() for _ in range(c)]
    buckets = [[] for _ in range(entries)]
    for i, tag in enumerate(stream):
        buckets[i % entries].append(tag)
    return make_corpus([entry_from_tags(b) for b in buckets], name=name)


def filler_patterns(n):
    """n distinct patterns over {Pn, Pt}; no published pattern uses either."""
    out = []
    for length in itertools.count(1):
        for combo in itertools.product(("Pn", "Pt"), repeat=length):
            out.append(list(combo))
            if len(out) == n:
                return out
    return out


def pattern_count_corpus(name):
    """Entries realizing the published top patterns plus filler patterns so
    that the entry total and the number of distinct patterns match."""
    entries, _, _ = ref.TOTALS[name]
    top = ref.TOP_PATTERNS[name]
    n_fill = ref.UNIQUE_PATTERNS[name] - len(top)
    remaining = entries - sum(c for _, c in top)
    cap = min(c for _, c in top)
    seqs = []
    for display, count in top:
        seqs += [display.split(" + ")] * count
    if n_fill:
        base, extra = divmod(remaining, n_fill)
        assert base >= 1 and base + (1 if extra else 0) <= cap
        for i, pat in enumerate(filler_patterns(n_fill)):
            seqs += [pat] * (base + (1 if i < extra else 0))
    else:
        assert remaining == 0
    return make_corpus([entry_from_tags([FINE_FOR_SYMBOL[s] for s in seq]) for seq in seqs], name=name)


BASIC_LEXICON = {
    "against": T.AsPp, "for": T.AsPp, "of": T.AsPp, "in": T.AsPp, "to": T.AsPp,
    "and": T.Cj, "or": T.Cj,
    "the": T.At, "a": T.At,
    "thermal": T.AjBa, "red": T.AjBa, "Modern": T.AjBa, "Greek": T.AjBa,
    "has": T.Vb, "produced": T.Vb, "not": T.PtNg,
}


@pytest.fixture
def lexicon():
    return dict(BASIC_LEXICON)


# --- acceptance summary ----------------------------------------------------------

_acceptance_results = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or report.when != "call" and not report.failed:
        return
    number, title = marker.args
    ok = report.passed if report.when == "call" else False
    prev = _acceptance_results.get(number, (title, True))
    _acceptance_results[number] = (title, prev[1] and ok)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance_results):
        title, ok = _acceptance_results[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}")
