"""The census data table: names, Conway notations, and DT codes.

The table ships inside the package as a tab-separated UTF-8 text file
(``data/corpus.tsv``) with one record per knot and seven fields:

    name  status  conway_min  conway_rep  dt_min  dt_rep  source

``status`` is ``resolved`` (an almost alternating representation is on
record) or ``open``; ``conway_rep``/``dt_rep`` are empty exactly when
the row is open.  ``source`` records which part of the data set the row
came from (``table1+2``, ``table3`` or ``prose``).  Lines starting with
``#`` are comments.  DT fields use the bit-exact text form of module
``dt``.

Loading re-checks the structural invariants (schema, joinedness of the
two notation columns, global counts); :func:`validate_corpus` re-checks
everything again, including the sign classification of every code, and
is intended as the loud guard in front of any verification run.  Only
notations and codes are stored; derived quantities (Jones polynomials,
genus, spans) are always recomputed downstream.

Each row also carries ``conway_check``, computed at load time:

    applicable      the two Conway strings share their separator
                    skeleton, so slotwise substitutions can be checked
    not-alignable   no rewrite on record, or the rewrite is not a
                    single-slot substitution (different skeleton, or
                    several slots restated at once)
    anomalous       rows whose printed rewrite is internally
                    inconsistent; substitution failures on these are
                    reported as warnings, not errors
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .dt import DtCode, DtCodeError, SignKind, classify_signs, parse_dt
from .tangle import extract_substitutions

__all__ = [
    "ANOMALOUS_ROWS",
    "CorpusRow",
    "CorpusSummary",
    "CorpusError",
    "SchemaError",
    "JoinError",
    "CountMismatch",
    "ValidationError",
    "corpus_bytes",
    "corpus_sha256",
    "load_corpus",
    "validate_corpus",
]


class CorpusError(ValueError):
    """Base class for corpus loading and validation failures."""


class SchemaError(CorpusError):
    """A line does not parse as a corpus record."""


class JoinError(CorpusError):
    """A name is duplicated, or a row has only half of its notation pair."""


class CountMismatch(CorpusError):
    """Global row counts differ from the published totals."""


class ValidationError(CorpusError):
    """A loaded row violates one of its invariants."""


# Rows whose printed Conway rewrite is internally inconsistent (the
# rewrite does not preserve the tangle fraction it replaces).  Their
# substitution check is reported as a warning so the discrepancy stays
# visible without masking the DT-level verification result.
ANOMALOUS_ROWS = frozenset({"K12n748"})

_STATUSES = ("resolved", "open")
_SOURCES = ("table1+2", "table3", "prose")
_NAME_RE = re.compile(r"^K(\d+)n(\d+)$")

_EXPECTED = {"resolved_12": 154, "open_12": 35, "resolved_11": 1, "open_11": 2}


@dataclass(frozen=True)
class CorpusRow:
    """One census knot with its notations and codes."""

    name: str
    status: str
    conway_min: str
    conway_rep: str | None
    dt_min: DtCode
    dt_rep: DtCode | None
    conway_check: str
    source: str

    @property
    def crossing_number(self) -> int:
        return int(_NAME_RE.match(self.name).group(1))


@dataclass(frozen=True)
class CorpusSummary:
    """Counts by status and crossing number."""

    resolved_12: int
    open_12: int
    resolved_11: int
    open_11: int


def corpus_bytes(source: str | Path | None = None) -> bytes:
    """Raw bytes of the corpus file (embedded one when source is None)."""
    if source is None or source == "embedded":
        return resources.files("turaev").joinpath("data/corpus.tsv").read_bytes()
    return Path(source).read_bytes()


def corpus_sha256(source: str | Path | None = None) -> str:
    return hashlib.sha256(corpus_bytes(source)).hexdigest()


def _conway_check(name: str, conway_min: str, conway_rep: str | None) -> str:
    if name in ANOMALOUS_ROWS:
        return "anomalous"
    if not conway_rep:
        return "not-alignable"
    subs = extract_substitutions(conway_min, conway_rep)
    return "applicable" if subs is not None else "not-alignable"


def _parse_line(lineno: int, line: str) -> CorpusRow:
    fields = line.split("\t")
    if len(fields) != 7:
        raise SchemaError(f"line {lineno}: expected 7 tab-separated fields, "
                          f"got {len(fields)}")
    name, status, conway_min, conway_rep, dt_min, dt_rep, source = fields
    if not _NAME_RE.match(name):
        raise SchemaError(f"line {lineno}: bad name {name!r}")
    if status not in _STATUSES:
        raise SchemaError(f"line {lineno}: bad status {status!r}")
    if source not in _SOURCES:
        raise SchemaError(f"line {lineno}: bad source {source!r}")
    if not conway_min or not dt_min:
        raise SchemaError(f"line {lineno}: conway_min and dt_min are required")
    try:
        code_min = parse_dt(dt_min)
        code_rep = parse_dt(dt_rep) if dt_rep else None
    except DtCodeError as exc:
        raise SchemaError(f"line {lineno}: {exc}") from exc
    # the two notation columns were merged into one record per name;
    # a half-present pair means the merge lost a row
    if (code_rep is None) != (not conway_rep):
        raise JoinError(f"line {lineno}: {name} has only one of "
                        f"conway_rep/dt_rep")
    return CorpusRow(
        name=name,
        status=status,
        conway_min=conway_min,
        conway_rep=conway_rep or None,
        dt_min=code_min,
        dt_rep=code_rep,
        conway_check=_conway_check(name, conway_min, conway_rep or None),
        source=source,
    )


def load_corpus(source: str | Path | None = None) -> list[CorpusRow]:
    """Parse the corpus (embedded by default, or a file path).

    Raises SchemaError / JoinError / CountMismatch; the result preserves
    file order and is fully structurally checked.
    """
    text = corpus_bytes(source).decode("utf-8")
    rows: list[CorpusRow] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        rows.append(_parse_line(lineno, line))
    names = [r.name for r in rows]
    dupes = {n for n in names if names.count(n) > 1}
    if dupes:
        raise JoinError(f"duplicate names: {sorted(dupes)}")
    _check_counts(rows)
    return rows


def _check_counts(rows: list[CorpusRow]) -> CorpusSummary:
    got = {"resolved_12": 0, "open_12": 0, "resolved_11": 0, "open_11": 0}
    for r in rows:
        key = f"{r.status}_{r.crossing_number}"
        if key not in got:
            raise CountMismatch(f"{r.name}: unexpected crossing number "
                                f"{r.crossing_number}")
        got[key] += 1
    if got != _EXPECTED:
        raise CountMismatch(f"row counts {got} != expected {_EXPECTED}")
    return CorpusSummary(**got)


def validate_corpus(rows: list[CorpusRow]) -> CorpusSummary:
    """Re-check every row invariant; return the count summary.

    Raises ValidationError naming the first offending row, or
    CountMismatch when the totals are off.
    """
    seen: set[str] = set()
    for r in rows:
        if r.name in seen:
            raise ValidationError(f"{r.name}: duplicate row")
        seen.add(r.name)
        if (r.status == "resolved") != (r.dt_rep is not None):
            raise ValidationError(f"{r.name}: status {r.status} inconsistent "
                                  f"with dt_rep presence")
        if (r.dt_rep is None) != (r.conway_rep is None):
            raise ValidationError(f"{r.name}: notation pair half-present")
        if r.dt_min.n != r.crossing_number:
            raise ValidationError(f"{r.name}: dt_min has {r.dt_min.n} "
                                  f"crossings, name implies "
                                  f"{r.crossing_number}")
        if classify_signs(r.dt_min).kind != SignKind.OTHER:
            raise ValidationError(f"{r.name}: dt_min does not classify Other")
        if r.dt_rep is not None:
            if not 13 <= r.dt_rep.n <= 17:
                raise ValidationError(f"{r.name}: dt_rep has {r.dt_rep.n} "
                                      f"crossings, outside [13, 17]")
            if classify_signs(r.dt_rep).kind != SignKind.ALMOST_ALTERNATING:
                raise ValidationError(f"{r.name}: dt_rep does not classify "
                                      f"AlmostAlternating")
        if r.conway_check not in ("applicable", "not-alignable", "anomalous"):
            raise ValidationError(f"{r.name}: bad conway_check "
                                  f"{r.conway_check!r}")
    return _check_counts(rows)
