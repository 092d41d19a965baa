"""``kosana`` command line: ingest -> tag -> analyze / patterns / lint -> compare.

Each stage reads and writes files so an external tagger can be slotted in
between ``ingest`` and ``tag``. Exit codes: 0 success, 1 lint findings at or
above ``--fail-on``, 2 usage or input errors.
"""
from __future__ import annotations

import argparse
import io
import json
import logging
import os
import sys
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

from kosana import __version__
from kosana.concepts import (
    SEVERITY_RANK,
    ClassifierConfig,
    RuleSettings,
    distribution,
    lint_corpus,
    worst_severity,
    write_findings_jsonl,
    write_findings_text,
)
from kosana.errors import ConfigError, KosError, MixedSchemes
from kosana.ingest import FORMATS, SCHEMES, IngestConfig, parse_source
from kosana.normalize import DEFAULT_SYMBOLS, dedup_entries, read_corpus, write_corpus
from kosana.patterns import mine_patterns
from kosana.profiling import profile_corpus
from kosana.report import (
    CorpusBundle,
    bundle_from_dict,
    compare,
    render_bundle,
    render_comparison,
    render_patterns,
)
from kosana.tagging import (
    align_pretagged,
    import_pretagged,
    load_lexicon,
    primary_script_for,
    read_tagged,
    tag_corpus,
    write_tagged,
)

log = logging.getLogger("kosana")

CONFIG_ENV = "KOSANA_CONFIG"

DEFAULT_SCHEMES = {
    "skos-nt": "thesaurus",
    "marcxml": "subject-headings",
    "ddc-csv": "classification",
}


@dataclass
class CliConfig:
    language_tag: str = "en"
    marc_include_subfields: list = field(default_factory=lambda: ["a", "x"])
    marc_exclude_subfields: list = field(default_factory=lambda: ["z", "y"])
    marc_include_tags: list = field(default_factory=lambda: ["150"])
    skos_label_predicate: str = IngestConfig.skos_label_predicate
    skos_concept_type: str = IngestConfig.skos_concept_type
    compound_whitelist: list = field(default_factory=list)
    open_class_markers: list = field(default_factory=lambda: ["other", "etc"])
    qualifier_as_composite: bool = True
    strip_symbols: str = "".join(sorted(DEFAULT_SYMBOLS))
    nfc: bool = False
    top_k: int = 20
    strict: bool = False
    format: str | None = None

    def ingest_config(self) -> IngestConfig:
        try:
            return IngestConfig(
                language_tag=self.language_tag,
                marc_include_subfields=self.marc_include_subfields,
                marc_exclude_subfields=self.marc_exclude_subfields,
                marc_include_tags=self.marc_include_tags,
                skos_label_predicate=self.skos_label_predicate,
                skos_concept_type=self.skos_concept_type,
            )
        except ValueError as exc:
            raise ConfigError(str(exc)) from None

    def classifier_config(self) -> ClassifierConfig:
        return ClassifierConfig(
            compound_whitelist=self.compound_whitelist,
            open_class_markers=self.open_class_markers,
            qualifier_as_composite=self.qualifier_as_composite,
        )


def load_config(path: str | None, strict: bool) -> CliConfig:
    """Read the JSON config at ``path`` (or $KOSANA_CONFIG); unknown keys
    are fatal only in strict mode."""
    cfg = CliConfig()
    path = path or os.environ.get(CONFIG_ENV)
    if not path:
        return cfg
    try:
        with open(path, encoding="utf-8") as fp:
            data = json.load(fp)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ConfigError(f"config {path} must be a JSON object")
    strict = strict or bool(data.get("strict", False))
    known = set(CliConfig.__dataclass_fields__)
    for key, value in data.items():
        if key not in known:
            if strict:
                raise ConfigError(f"unknown config key {key!r}")
            log.warning("ignoring unknown config key %r", key)
            continue
        setattr(cfg, key, value)
    return cfg


def atomic_write(path: str | None, data: bytes) -> None:
    """Write via a temp file and rename; ``None`` or ``-`` means stdout."""
    if path is None or path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        return
    target = Path(path)
    fd, tmp = tempfile.mkstemp(dir=target.parent or ".", prefix=f".{target.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as fp:
            fp.write(data)
        os.replace(tmp, target)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def _read_text_file(path: str) -> io.StringIO:
    with open(path, encoding="utf-8") as fp:
        return io.StringIO(fp.read())


# --- subcommands ---------------------------------------------------------------

def cmd_ingest(args, cfg: CliConfig) -> int:
    icfg = cfg.ingest_config()
    raw = []
    skipped = []
    for path in args.inputs:
        with open(path, "rb") as fp:
            entries = parse_source(args.format, fp, icfg, source_file=path, strict=cfg.strict, errors=skipped)
        if args.scheme and args.format != "labels-tsv":
            entries = [type(e)(e.text, args.scheme, e.locator, e.source_file) for e in entries]
        raw.extend(entries)
    if skipped:
        log.warning("%d malformed line(s) skipped", len(skipped))
    if args.format == "labels-tsv" and args.scheme:
        raw = [e for e in raw if e.scheme == args.scheme]
    elif args.format == "labels-tsv" and len({e.scheme for e in raw}) > 1:
        raise MixedSchemes("label table mixes kinds; pick one with --scheme ontology-classes|ontology-properties|generic")

    name = args.name or (Path(args.out).stem if args.out else "corpus")
    corpus = dedup_entries(raw, name, symbols=cfg.strip_symbols, nfc=cfg.nfc)
    if not raw and args.scheme:
        corpus.scheme = args.scheme
    elif not raw:
        corpus.scheme = DEFAULT_SCHEMES.get(args.format, "generic")
    buf = io.StringIO()
    write_corpus(corpus, buf)
    atomic_write(args.out, buf.getvalue().encode("utf-8"))
    log.info("%s: %d raw, %d unique, %d duplicates, %d empty", name, len(raw), len(corpus.entries),
             corpus.duplicate_count, corpus.dropped_empty_count)
    return 0


def cmd_tag(args, cfg: CliConfig) -> int:
    corpus = read_corpus(_read_text_file(args.corpus))
    if args.pretagged:
        with open(args.pretagged, "rb") as fp:
            tagged = align_pretagged(corpus, import_pretagged(fp))
    else:
        lexicon = load_lexicon(_read_text_file(args.lexicon))
        tagged = tag_corpus(corpus, lexicon, primary_script_for(cfg.language_tag))
    buf = io.StringIO()
    write_tagged(tagged, buf)
    atomic_write(args.out, buf.getvalue().encode("utf-8"))
    return 0


def _analyze(tagged, cfg: CliConfig, k: int) -> CorpusBundle:
    return CorpusBundle(
        tagged.name,
        profile_corpus(tagged),
        mine_patterns(tagged, k),
        distribution(tagged, cfg.classifier_config()),
    )


def cmd_analyze(args, cfg: CliConfig) -> int:
    tagged = read_tagged(_read_text_file(args.tagged))
    fmt = args.format or cfg.format or "json"
    atomic_write(args.out, render_bundle(_analyze(tagged, cfg, args.top_k or cfg.top_k), fmt))
    return 0


def cmd_patterns(args, cfg: CliConfig) -> int:
    tagged = read_tagged(_read_text_file(args.tagged))
    table = mine_patterns(tagged, args.top_k or cfg.top_k)
    atomic_write(args.out, render_patterns(table, args.format or "md"))
    return 0


def cmd_lint(args, cfg: CliConfig) -> int:
    tagged = read_tagged(_read_text_file(args.tagged))
    rules = RuleSettings()
    if args.rules:
        with open(args.rules, encoding="utf-8") as fp:
            rules = RuleSettings.load(fp)
    findings = lint_corpus(tagged, cfg.classifier_config(), rules)
    buf = io.StringIO()
    if args.format == "jsonl":
        write_findings_jsonl(findings, buf)
    else:
        write_findings_text(findings, buf)
    atomic_write(args.out, buf.getvalue().encode("utf-8"))
    worst = worst_severity(findings)
    if worst is not None and SEVERITY_RANK[worst] >= SEVERITY_RANK[args.fail_on]:
        print(f"lint: {len(findings)} finding(s), worst severity {worst}", file=sys.stderr)
        return 1
    return 0


def cmd_compare(args, cfg: CliConfig) -> int:
    bundles = []
    for path in args.inputs:
        with open(path, encoding="utf-8") as fp:
            try:
                bundles.append(bundle_from_dict(json.load(fp)))
            except json.JSONDecodeError as exc:
                raise KosError(f"{path}: not valid JSON: {exc}") from None
    report = compare(bundles, args.top_k or cfg.top_k)
    atomic_write(args.out, render_comparison(report))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kosana", description="Analyze controlled vocabularies: tags, patterns, concept lint.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--config", help=f"JSON config file (falls back to ${CONFIG_ENV})")
    p.add_argument("--strict", action="store_true", help="abort on the first malformed input line or unknown config key")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("ingest", help="parse sources into a normalized corpus (JSON Lines)")
    s.add_argument("--format", required=True, choices=FORMATS)
    s.add_argument("--lang", help="language tag for SKOS labels and script detection")
    s.add_argument("--scheme", choices=SCHEMES, help="override scheme; for labels-tsv selects one kind")
    s.add_argument("--name", help="corpus name (default: output file stem)")
    s.add_argument("--strip-symbols", help="characters removed from entries (default '!%%*')")
    s.add_argument("--nfc", action="store_true", help="apply Unicode NFC before cleaning")
    s.add_argument("--out")
    s.add_argument("inputs", nargs="+", metavar="IN")
    s.set_defaults(func=cmd_ingest)

    s = sub.add_parser("tag", help="attach POS tags to a corpus")
    s.add_argument("--corpus", required=True)
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--pretagged", help="vertical surface<TAB>tag file from an external tagger")
    g.add_argument("--lexicon", help="surface<TAB>tag lexicon for the built-in tagger")
    s.add_argument("--lang", help="language tag; selects the primary script")
    s.add_argument("--out")
    s.set_defaults(func=cmd_tag)

    s = sub.add_parser("analyze", help="tag metrics, pattern table and concept classes")
    s.add_argument("--tagged", required=True)
    s.add_argument("--top-k", type=int)
    s.add_argument("--format", choices=("json", "csv", "md"))
    s.add_argument("--out")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("patterns", help="syntactic pattern frequency table")
    s.add_argument("--tagged", required=True)
    s.add_argument("--top-k", type=int)
    s.add_argument("--format", choices=("md", "json"))
    s.add_argument("--out")
    s.set_defaults(func=cmd_patterns)

    s = sub.add_parser("lint", help="machine-processability findings")
    s.add_argument("--tagged", required=True)
    s.add_argument("--rules", help="JSON map rule_id -> {enabled, severity}")
    s.add_argument("--fail-on", choices=tuple(SEVERITY_RANK), default="error")
    s.add_argument("--format", choices=("text", "jsonl"), default="text")
    s.add_argument("--out")
    s.set_defaults(func=cmd_lint)

    s = sub.add_parser("compare", help="side-by-side report from analyze JSON outputs")
    s.add_argument("inputs", nargs="+", metavar="ANALYSIS")
    s.add_argument("--top-k", type=int)
    s.add_argument("--out")
    s.set_defaults(func=cmd_compare)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("kosana: %(levelname)s: %(message)s"))
    root = logging.getLogger("kosana")
    root.handlers[:] = [handler]
    root.propagate = False
    root.setLevel(logging.INFO if args.verbose else logging.WARNING)
    try:
        cfg = load_config(args.config, args.strict)
        cfg.strict = cfg.strict or args.strict
        if getattr(args, "lang", None):
            cfg.language_tag = args.lang
        if getattr(args, "strip_symbols", None) is not None:
            cfg.strip_symbols = args.strip_symbols
        if getattr(args, "nfc", False):
            cfg.nfc = True
        if getattr(args, "top_k", None) is not None and args.top_k < 1:
            raise ConfigError("--top-k must be at least 1")
        return args.func(args, cfg)
    except KosError as exc:
        print(f"kosana: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"kosana: error: {exc.filename or ''}: {exc.strerror}", file=sys.stderr)
        return 2
    except UnicodeDecodeError as exc:
        print(f"kosana: error: input is not UTF-8: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
