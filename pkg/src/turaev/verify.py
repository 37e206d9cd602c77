"""Row verification pipeline and report rendering.

Per-row checks, in evaluation order: both DT codes realize to planar
diagrams; the representative code has exactly one minority crossing
sign; the Jones polynomials of the two diagrams agree up to mirror;
the representative diagram has Turaev genus exactly 1; the minimal
diagram has Turaev genus at least 1; the Jones span in t is strictly
below the crossing number; every aligned Conway substitution pair
swaps one tangle for a fraction-preserving word whose only negative
entry is a single -1.

Check values are the strings "pass", "fail", "not-applicable".  Rows
with status "open" yield verdict OPEN and run only the checks that
need no representative diagram.  A resolved row is VERIFIED when every
applicable check passes, FAILED otherwise.  Substitution failures on
rows whose conway_check is "anomalous" downgrade to warnings: the row
stays visible without masking the DT-level result.

Rendered report bodies (text, JSON, CSV) exclude the wall-clock
duration, so two runs over the same corpus are byte identical no
matter the worker count.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import __version__
from .corpus import CorpusRow
from .diagram import turaev_genus
from .dt import SignKind, classify_signs
from .poly import equal_up_to_mirror, jones, span_t
from .realize import try_realize
from .tangle import extract_substitutions, verify_substitution

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"

CHECK_NAMES = (
    "realizable_min",
    "realizable_rep",
    "rep_almost_alternating",
    "jones_match_up_to_mirror",
    "genus_rep_equals_1",
    "genus_min_at_least_1",
    "span_lt_crossing_number",
    "conway_substitutions_ok",
)

VERIFIED = "VERIFIED"
FAILED = "FAILED"
OPEN = "OPEN"


@dataclass(frozen=True)
class RowResult:
    """Outcome of every check for one corpus row."""

    name: str
    verdict: str
    checks: dict[str, str]
    jones_min: str
    span: int | None
    genus_min: int | None
    genus_rep: int | None
    warnings: tuple[str, ...] = ()


@dataclass(frozen=True)
class VerificationReport:
    """All row results plus totals; duration is excluded from renders."""

    results: tuple[RowResult, ...]
    verified: int
    failed: int
    open_rows: int
    duration_s: float
    version: str
    corpus_digest: str

    @property
    def total(self) -> int:
        return len(self.results)

    @property
    def warnings(self) -> tuple[str, ...]:
        out: list[str] = []
        for r in self.results:
            out.extend(r.warnings)
        return tuple(sorted(out))


def _check_substitutions(row: CorpusRow) -> tuple[str, tuple[str, ...]]:
    """Tri-state plus warnings for the Conway substitution check."""
    if row.conway_check == "not-alignable" or row.conway_rep is None:
        return NOT_APPLICABLE, ()
    pairs = extract_substitutions(row.conway_min, row.conway_rep)
    ok = pairs is not None and all(
        verify_substitution(left, right) for left, right in pairs)
    if ok:
        return PASS, ()
    if row.conway_check == "anomalous":
        msg = (f"{row.name}: substitution check failed on a row "
               f"recorded as anomalous")
        return NOT_APPLICABLE, (msg,)
    return FAIL, ()


def verify_row(row: CorpusRow) -> RowResult:
    """Run every applicable check; failures are recorded, not raised."""
    checks = {name: NOT_APPLICABLE for name in CHECK_NAMES}
    warnings: tuple[str, ...] = ()
    jones_min = ""
    span: int | None = None
    genus_min: int | None = None
    genus_rep: int | None = None

    d_min = try_realize(row.dt_min).diagram
    checks["realizable_min"] = PASS if d_min is not None else FAIL
    j_min = None
    if d_min is not None:
        j_min = jones(d_min)
        jones_min = j_min.render()
        span = span_t(j_min)
        genus_min = turaev_genus(d_min)
        checks["genus_min_at_least_1"] = (
            PASS if genus_min >= 1 else FAIL)
        checks["span_lt_crossing_number"] = (
            PASS if span < row.crossing_number else FAIL)

    if row.status == "resolved" and row.dt_rep is not None:
        d_rep = try_realize(row.dt_rep).diagram
        checks["realizable_rep"] = PASS if d_rep is not None else FAIL
        kind = classify_signs(row.dt_rep).kind
        checks["rep_almost_alternating"] = (
            PASS if kind is SignKind.ALMOST_ALTERNATING else FAIL)
        if d_rep is not None:
            if j_min is not None:
                checks["jones_match_up_to_mirror"] = (
                    PASS if equal_up_to_mirror(j_min, jones(d_rep))
                    else FAIL)
            genus_rep = turaev_genus(d_rep)
            checks["genus_rep_equals_1"] = (
                PASS if genus_rep == 1 else FAIL)
        checks["conway_substitutions_ok"], warnings = (
            _check_substitutions(row))

    if row.status == "open":
        verdict = OPEN
    else:
        applicable = [v for v in checks.values() if v != NOT_APPLICABLE]
        verdict = (VERIFIED if all(v == PASS for v in applicable)
                   else FAILED)
    return RowResult(
        name=row.name, verdict=verdict, checks=checks,
        jones_min=jones_min, span=span, genus_min=genus_min,
        genus_rep=genus_rep, warnings=warnings)


def verify_all(rows: list[CorpusRow], workers: int = 1,
               corpus_digest: str = "") -> VerificationReport:
    """Evaluate all rows; results are sorted by name before reporting."""
    t0 = time.perf_counter()
    if workers <= 1:
        results = [verify_row(r) for r in rows]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(verify_row, rows))
    results.sort(key=lambda r: r.name)
    verified = sum(1 for r in results if r.verdict == VERIFIED)
    failed = sum(1 for r in results if r.verdict == FAILED)
    open_rows = sum(1 for r in results if r.verdict == OPEN)
    return VerificationReport(
        results=tuple(results), verified=verified, failed=failed,
        open_rows=open_rows, duration_s=time.perf_counter() - t0,
        version=__version__, corpus_digest=corpus_digest)


def _row_object(r: RowResult) -> dict:
    return {
        "name": r.name,
        "verdict": r.verdict,
        "checks": dict(r.checks),
        "jones_min": r.jones_min,
        "span": r.span,
        "genus_min": r.genus_min,
        "genus_rep": r.genus_rep,
    }


def render_json(report: VerificationReport) -> str:
    doc = {
        "version": report.version,
        "corpus_digest": report.corpus_digest,
        "summary": {
            "rows": report.total,
            "verified": report.verified,
            "failed": report.failed,
            "open": report.open_rows,
            "warnings": list(report.warnings),
        },
        "rows": [_row_object(r) for r in report.results],
    }
    return json.dumps(doc, indent=2) + "\n"


def render_csv(report: VerificationReport) -> str:
    import csv
    import io
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("name", "verdict") + CHECK_NAMES
                    + ("jones_min", "span", "genus_min", "genus_rep"))
    for r in report.results:
        num = ["" if v is None else v
               for v in (r.span, r.genus_min, r.genus_rep)]
        writer.writerow([r.name, r.verdict]
                        + [r.checks[c] for c in CHECK_NAMES]
                        + [r.jones_min] + num)
    return buf.getvalue()


def render_text(report: VerificationReport) -> str:
    lines = [
        f"turaev {report.version}  corpus {report.corpus_digest}",
        f"rows {report.total}  verified {report.verified}  "
        f"failed {report.failed}  open {report.open_rows}",
    ]
    for msg in report.warnings:
        lines.append(f"warning: {msg}")
    lines.append("")
    for r in report.results:
        bits = [f"{r.name:<9} {r.verdict:<8}"]
        if r.genus_min is not None:
            bits.append(f"genus_min={r.genus_min}")
        if r.genus_rep is not None:
            bits.append(f"genus_rep={r.genus_rep}")
        if r.span is not None:
            bits.append(f"span={r.span}")
        fails = [c for c in CHECK_NAMES if r.checks[c] == FAIL]
        if fails:
            bits.append("fail:" + ",".join(fails))
        lines.append(" ".join(bits))
    return "\n".join(lines) + "\n"


RENDERERS = {
    "text": render_text,
    "json": render_json,
    "csv": render_csv,
}
