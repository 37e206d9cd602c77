"""Corpus schema, join, count, and validation behavior.

Synthetic corpora exercise every failure class through temporary
files; the embedded corpus is checked for its published shape (row
counts per status and crossing number, required columns, derived
conway_check values).
"""

from __future__ import annotations

import pytest

from turaev.corpus import (
    ANOMALOUS_ROWS,
    CorpusRow,
    CountMismatch,
    JoinError,
    SchemaError,
    ValidationError,
    _conway_check,
    _parse_line,
    corpus_sha256,
    load_corpus,
    validate_corpus,
)
from turaev.dt import parse_dt

GOOD = ("K12n1\tresolved\t2 1\t2 1\t{{12},{4,6,8,10,12,14,16,18,20,22,24,2}}"
        "\t{{13},{4,6,8,10,12,14,16,18,20,22,24,26,2}}\ttable1+2")


def _load_lines(tmp_path, *lines):
    f = tmp_path / "corpus.tsv"
    f.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return load_corpus(f)


class TestParseLine:
    def test_good_line_parses(self):
        row = _parse_line(1, GOOD)
        assert row.name == "K12n1"
        assert row.crossing_number == 12
        assert row.dt_rep.n == 13
        assert row.source == "table1+2"

    def test_field_count(self):
        with pytest.raises(SchemaError, match="7 tab-separated"):
            _parse_line(3, "K12n1\tresolved\tonly")

    def test_bad_name(self):
        with pytest.raises(SchemaError, match="bad name"):
            _parse_line(1, GOOD.replace("K12n1", "L12a1"))

    def test_bad_status(self):
        with pytest.raises(SchemaError, match="bad status"):
            _parse_line(1, GOOD.replace("resolved", "maybe"))

    def test_bad_source(self):
        with pytest.raises(SchemaError, match="bad source"):
            _parse_line(1, GOOD.replace("table1+2", "table9"))

    def test_bad_dt_syntax(self):
        with pytest.raises(SchemaError, match="line 1"):
            _parse_line(1, GOOD.replace("{{13},", "{{13,", 1))

    def test_half_present_pair(self):
        fields = GOOD.split("\t")
        fields[3] = ""
        with pytest.raises(JoinError, match="only one of"):
            _parse_line(1, "\t".join(fields))


class TestLoadCorpus:
    def test_comments_and_blanks_skipped(self, tmp_path):
        # the single data row parses fine, so the complaint is about
        # global counts, not about the comment lines
        with pytest.raises(CountMismatch):
            _load_lines(tmp_path, "# header", "", "  ", GOOD)

    def test_duplicate_names(self, tmp_path):
        with pytest.raises(JoinError, match="duplicate"):
            _load_lines(tmp_path, GOOD, GOOD)

    def test_unexpected_crossing_number(self, tmp_path):
        bad = GOOD.replace("K12n1", "K9n1").replace(
            "{{12},{4,6,8,10,12,14,16,18,20,22,24,2}}",
            "{{9},{4,6,8,10,12,14,16,18,2}}")
        with pytest.raises(CountMismatch, match="unexpected crossing"):
            _load_lines(tmp_path, bad)


def _mkrow(**kw):
    base = dict(
        name="K12n1", status="resolved", conway_min="2 1",
        conway_rep="2 1",
        dt_min=parse_dt("{{12},{4,6,8,10,-12,14,16,18,-20,22,24,2}}"),
        dt_rep=parse_dt("{{13},{-4,6,8,10,12,14,16,18,20,22,24,26,2}}"),
        conway_check="applicable", source="table1+2")
    base.update(kw)
    return CorpusRow(**base)


class TestValidateCorpus:
    def test_duplicate_rows(self):
        with pytest.raises(ValidationError, match="duplicate"):
            validate_corpus([_mkrow(), _mkrow()])

    def test_status_rep_mismatch(self):
        with pytest.raises(ValidationError, match="inconsistent"):
            validate_corpus([_mkrow(status="open")])

    def test_crossing_number_mismatch(self):
        with pytest.raises(ValidationError, match="name implies"):
            validate_corpus([_mkrow(name="K11n1")])

    def test_min_code_must_classify_other(self):
        alternating = parse_dt(
            "{{12},{4,6,8,10,12,14,16,18,20,22,24,2}}")
        with pytest.raises(ValidationError, match="classify Other"):
            validate_corpus([_mkrow(dt_min=alternating)])

    def test_rep_code_crossing_range(self):
        small = parse_dt("{{12},{-4,6,8,10,12,14,16,18,20,22,24,2}}")
        with pytest.raises(ValidationError, match=r"outside \[13, 17\]"):
            validate_corpus([_mkrow(dt_rep=small)])

    def test_rep_code_must_classify_almost_alternating(self):
        alternating = parse_dt(
            "{{13},{4,6,8,10,12,14,16,18,20,22,24,26,2}}")
        with pytest.raises(ValidationError, match="AlmostAlternating"):
            validate_corpus([_mkrow(dt_rep=alternating)])


class TestConwayCheck:
    def test_anomalous_rows_flagged(self):
        assert "K12n748" in ANOMALOUS_ROWS
        assert _conway_check("K12n748", "2 1", "2 1") == "anomalous"

    def test_open_row_not_alignable(self):
        assert _conway_check("K12n1", "2 1", None) == "not-alignable"

    def test_aligned_pair_applicable(self):
        assert _conway_check("K12n1", "21", "3 -1") == "applicable"

    def test_skeleton_change_not_alignable(self):
        assert _conway_check("K12n1", "2, 2, 2", "2 2 2") == "not-alignable"


class TestEmbeddedCorpus:
    def test_loads_and_validates(self):
        rows = load_corpus()
        summary = validate_corpus(rows)
        assert summary.resolved_12 == 154
        assert summary.open_12 == 35
        assert summary.resolved_11 == 1
        assert summary.open_11 == 2

    def test_digest_is_stable_string(self):
        d = corpus_sha256()
        assert len(d) == 64 and set(d) <= set("0123456789abcdef")

    def test_known_rows(self):
        rows = {r.name: r for r in load_corpus()}
        assert rows["K11n183"].status == "resolved"
        assert rows["K11n95"].status == "open"
        assert rows["K11n118"].status == "open"
        assert rows["K12n748"].conway_check == "anomalous"
        assert rows["K12n644"].conway_check == "not-alignable"
        # whole-form mirror restatement, not a single-slot rewrite
        assert rows["K12n353"].conway_check == "not-alignable"

    def test_total_dt_code_count(self):
        rows = load_corpus()
        n_codes = sum(1 for r in rows for c in (r.dt_min, r.dt_rep)
                      if c is not None)
        assert n_codes == 347
