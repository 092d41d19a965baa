import json

import pytest

from kosana.cli import main
from kosana.ingest import RDF_TYPE, SKOS_CONCEPT, SKOS_PREF_LABEL

LEXICON = "against\tAsPp\nand\tCj\nof\tAsPp\nthermal\tAjBa\nModern\tAjBa\n"

MARCXML = """<?xml version="1.0" encoding="UTF-8"?>
<collection xmlns="http://www.loc.gov/MARC21/slim">
<record><datafield tag="150"><subfield code="a">Crimes against peace</subfield></datafield></record>
<record><datafield tag="150"><subfield code="a">Sex and law</subfield><subfield code="z">Greece</subfield></datafield></record>
<record><datafield tag="150"><subfield code="a">Cooking (Apricots)</subfield></datafield></record>
<record><datafield tag="150"><subfield code="a">Art, Modern</subfield><subfield code="x">History!</subfield></datafield></record>
<record><datafield tag="150"><subfield code="a">Sex and law</subfield></datafield></record>
</collection>
"""


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("KOSANA_CONFIG", raising=False)
    (tmp_path / "lcsh.xml").write_text(MARCXML, encoding="utf-8")
    (tmp_path / "lex.tsv").write_text(LEXICON, encoding="utf-8")
    (tmp_path / "ddc.csv").write_text(
        'notation,caption\n"551.2","Volcanoes, earthquakes, thermal waters and gases"\n'
        '"943.08","1866-"\n"025.39","Recataloging, reclassification, re-indexing"\n',
        encoding="utf-8",
    )
    return tmp_path


def run(*argv):
    return main([str(a) for a in argv])


def pipeline(d):
    assert run("ingest", "--format", "marcxml", "--out", d / "lcsh.jsonl", d / "lcsh.xml") == 0
    assert run("tag", "--corpus", d / "lcsh.jsonl", "--lexicon", d / "lex.tsv", "--out", d / "lcsh.tagged.jsonl") == 0
    assert run("analyze", "--tagged", d / "lcsh.tagged.jsonl", "--out", d / "lcsh.json") == 0
    assert run("ingest", "--format", "ddc-csv", "--out", d / "ddc.jsonl", d / "ddc.csv") == 0
    assert run("tag", "--corpus", d / "ddc.jsonl", "--lexicon", d / "lex.tsv", "--out", d / "ddc.tagged.jsonl") == 0
    assert run("analyze", "--tagged", d / "ddc.tagged.jsonl", "--out", d / "ddc.json") == 0
    assert run("compare", d / "lcsh.json", d / "ddc.json", "--out", d / "report.md") == 0


def test_full_pipeline(workdir):
    pipeline(workdir)
    lines = (workdir / "lcsh.jsonl").read_text().splitlines()
    header = json.loads(lines[0])
    assert header == {"name": "lcsh", "scheme": "subject-headings", "duplicate_count": 1, "dropped_empty_count": 0}
    assert [json.loads(x)["text"] for x in lines[1:]] == [
        "Crimes against peace", "Sex and law", "Cooking (Apricots)", "Art, Modern", "History"
    ]
    analysis = json.loads((workdir / "lcsh.json").read_text())
    assert analysis["profile"]["entries"] == 5
    report = (workdir / "report.md").read_text()
    assert "| Metric | lcsh | ddc |" in report


def test_replay_is_byte_identical(workdir):
    pipeline(workdir)
    first = {p.name: p.read_bytes() for p in workdir.iterdir() if p.suffix in (".jsonl", ".json", ".md")}
    for name in first:
        (workdir / name).unlink()
    pipeline(workdir)
    assert {n: (workdir / n).read_bytes() for n in first} == first


def test_lint_exit_codes(workdir, capsys):
    pipeline(workdir)
    tagged = workdir / "lcsh.tagged.jsonl"
    assert run("lint", "--tagged", tagged, "--fail-on", "warning") == 1
    out, err = capsys.readouterr()
    assert "WARNING AMBIGUOUS_CONJUNCTION" in out
    assert "lint:" in err and "lint:" not in out
    assert run("lint", "--tagged", tagged, "--fail-on", "error") == 0
    rules = workdir / "rules.json"
    rules.write_text(json.dumps({"AMBIGUOUS_CONJUNCTION": {"severity": "error"}}))
    assert run("lint", "--tagged", tagged, "--rules", rules, "--fail-on", "error") == 1
    rules.write_text(json.dumps({"R42": {"enabled": True}}))
    assert run("lint", "--tagged", tagged, "--rules", rules) == 2


def test_lint_jsonl(workdir, capsys):
    pipeline(workdir)
    capsys.readouterr()
    assert run("lint", "--tagged", workdir / "ddc.tagged.jsonl", "--format", "jsonl") == 0
    recs = [json.loads(x) for x in capsys.readouterr().out.splitlines()]
    assert {"entry_locator": "943.08", "rule_id": "CHRONOLOGY_DIGITS"}.items() <= next(
        r for r in recs if r["rule_id"] == "CHRONOLOGY_DIGITS").items()


def test_analyze_empty_file(workdir, capsys):
    (workdir / "empty.jsonl").write_text("")
    assert run("analyze", "--tagged", workdir / "empty.jsonl") == 2
    assert "EmptyCorpus" in capsys.readouterr().err


def test_analyze_header_only(workdir, capsys):
    (workdir / "h.jsonl").write_text('{"name": "h", "scheme": "generic", "duplicate_count": 0}\n')
    assert run("analyze", "--tagged", workdir / "h.jsonl") == 2
    assert "EmptyCorpus" in capsys.readouterr().err


def test_compare_one_input(workdir, capsys):
    pipeline(workdir)
    assert run("compare", workdir / "lcsh.json") == 2
    assert "TooFewCorpora" in capsys.readouterr().err


def test_usage_error(capsys):
    assert run("frobnicate") == 2
    assert run("ingest", "--format", "marcxml") == 2


def test_missing_file(workdir, capsys):
    assert run("ingest", "--format", "ddc-csv", "nope.csv") == 2
    assert "nope.csv" in capsys.readouterr().err


def test_analyze_formats_and_patterns(workdir, capsys):
    pipeline(workdir)
    capsys.readouterr()
    tagged = workdir / "ddc.tagged.jsonl"
    assert run("analyze", "--tagged", tagged, "--format", "md") == 0
    assert "| Words per entry (avg) |" in capsys.readouterr().out
    assert run("analyze", "--tagged", tagged, "--format", "csv") == 0
    assert capsys.readouterr().out.startswith("metric,role,count")
    assert run("patterns", "--tagged", tagged, "--top-k", "2") == 0
    out = capsys.readouterr().out
    assert "| Sum of 2 |" in out
    assert run("patterns", "--tagged", tagged, "--top-k", "0") == 2


def test_pretagged_path(workdir):
    d = workdir
    assert run("ingest", "--format", "ddc-csv", "--out", d / "c.jsonl", d / "ddc.csv") == 0
    vertical = (
        "Volcanoes\tNoCm\n,\tPunctOther\nearthquakes\tNoCm\n,\tPunctOther\nthermal\tAjBa\nwaters\tNoCm\n"
        "and\tCj\ngases\tNoCm\n\n1866\tDig\n-\tPunctOther\n\nRecataloging\tNoCm\n,\tPunctOther\n"
        "reclassification\tNoCm\n,\tPunctOther\nre-indexing\tNoCm\n"
    )
    (d / "v.tsv").write_text(vertical)
    assert run("tag", "--corpus", d / "c.jsonl", "--pretagged", d / "v.tsv", "--out", d / "t.jsonl") == 0
    (d / "bad.tsv").write_text("Volcanoes\tNoCm\n")
    assert run("tag", "--corpus", d / "c.jsonl", "--pretagged", d / "bad.tsv", "--out", d / "t2.jsonl") == 2
    assert not (d / "t2.jsonl").exists()


def test_skos_and_labels(workdir):
    d = workdir
    (d / "v.nt").write_text(
        f"<http://ex/1> <{RDF_TYPE}> <{SKOS_CONCEPT}> .\n"
        f'<http://ex/1> <{SKOS_PREF_LABEL}> "Πτηνά"@el .\n'
        f'<http://ex/1> <{SKOS_PREF_LABEL}> "Birds"@en .\n'
        "garbage line\n",
        encoding="utf-8",
    )
    assert run("ingest", "--format", "skos-nt", "--lang", "el", "--out", d / "v.jsonl", d / "v.nt") == 0
    assert json.loads((d / "v.jsonl").read_text().splitlines()[1])["text"] == "Πτηνά"
    assert run("--strict", "ingest", "--format", "skos-nt", "--out", d / "v2.jsonl", d / "v.nt") == 2

    (d / "cidoc.tsv").write_text("kind\tlabel\nclass\tPerson\nproperty\thas produced\n")
    assert run("ingest", "--format", "labels-tsv", "--out", d / "x.jsonl", d / "cidoc.tsv") == 2
    assert run("ingest", "--format", "labels-tsv", "--scheme", "ontology-properties",
               "--out", d / "p.jsonl", d / "cidoc.tsv") == 0
    header = json.loads((d / "p.jsonl").read_text().splitlines()[0])
    assert header["scheme"] == "ontology-properties"


def test_config_file_and_env(workdir, monkeypatch, capsys):
    d = workdir
    cfg = d / "cfg.json"
    cfg.write_text(json.dumps({"marc_include_subfields": ["a", "x", "z"], "marc_exclude_subfields": ["y"]}))
    assert run("--config", cfg, "ingest", "--format", "marcxml", "--out", d / "a.jsonl", d / "lcsh.xml") == 0
    assert "Greece" in (d / "a.jsonl").read_text()

    monkeypatch.setenv("KOSANA_CONFIG", str(cfg))
    assert run("ingest", "--format", "marcxml", "--out", d / "b.jsonl", d / "lcsh.xml") == 0
    assert "Greece" in (d / "b.jsonl").read_text()

    cfg.write_text(json.dumps({"bogus": 1}))
    assert run("--config", cfg, "ingest", "--format", "marcxml", "--out", d / "c.jsonl", d / "lcsh.xml") == 0
    assert "bogus" in capsys.readouterr().err
    assert run("--strict", "--config", cfg, "ingest", "--format", "marcxml", "--out", d / "c.jsonl", d / "lcsh.xml") == 2

    cfg.write_text(json.dumps({"marc_include_subfields": ["a"], "marc_exclude_subfields": ["a"]}))
    assert run("--config", cfg, "ingest", "--format", "marcxml", "--out", d / "c.jsonl", d / "lcsh.xml") == 2


def test_whitelist_via_config(workdir):
    pipeline(workdir)
    cfg = workdir / "cfg.json"
    cfg.write_text(json.dumps({"compound_whitelist": ["Crimes against peace", "Cooking (Apricots)"]}))
    assert run("--config", cfg, "analyze", "--tagged", workdir / "lcsh.tagged.jsonl", "--out", workdir / "w.json") == 0
    dist = json.loads((workdir / "w.json").read_text())["distribution"]
    assert dist["composite"] == 0
