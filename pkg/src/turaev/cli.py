"""Command-line front end.

Subcommands: `verify` runs the full corpus pipeline and renders a
report; `jones`, `genus`, `realize`, and `classify` evaluate a single
DT code given as a string such as "{{4},{4,6,8,2}}"; `tangle-fraction`
and `tangle-synthesize` convert between tangle words and extended
rationals.  The tool never touches the network: the corpus ships
inside the package and is overridable only by the --corpus flag.

Exit codes: 0 on success (for `verify`: zero FAILED rows), 1 when
verification fails or the corpus does not validate, 2 on bad input.
"""

from __future__ import annotations

import argparse
import sys

from .corpus import CorpusError, corpus_sha256, load_corpus, validate_corpus
from .diagram import turaev_genus
from .dt import DtCodeError, classify_signs, parse_dt
from .poly import jones
from .realize import NotRealizable, format_diagram, realize
from .tangle import (
    ExtendedRational,
    MalformedWord,
    NotFound,
    fraction,
    parse_word,
    render_word,
    synthesize_one_minus_one,
)
from .verify import RENDERERS, verify_all


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="turaev",
        description="Planar DT-code realization, Jones polynomials, "
                    "Turaev genus, and corpus verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser(
        "verify", help="check every corpus row and render a report")
    p_verify.add_argument("--corpus", metavar="PATH", default=None,
                          help="TSV corpus path (default: embedded)")
    p_verify.add_argument("--report", metavar="PATH", default=None,
                          help="write the report here instead of stdout")
    p_verify.add_argument("--format", choices=("text", "json", "csv"),
                          default="text")
    p_verify.add_argument("--workers", type=int, default=1, metavar="N")

    for name, help_text in (
            ("jones", "Jones polynomial of a DT code"),
            ("genus", "Turaev genus of the realized diagram"),
            ("realize", "planar diagram of a DT code"),
            ("classify", "crossing sign pattern of a DT code")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("dtcode", help='e.g. "{{4},{4,6,8,2}}"')

    p_frac = sub.add_parser(
        "tangle-fraction", help="fraction of a rational tangle word")
    p_frac.add_argument("word", help='e.g. "2 1 1" or "-2 0"')

    p_syn = sub.add_parser(
        "tangle-synthesize",
        help="word with a single -1 realizing fraction P/Q")
    p_syn.add_argument("pq", metavar="P/Q",
                       help='e.g. "7/3", "-3/5", or "1/0"')
    # let a leading minus read as a fraction, not an option flag
    import re
    p_syn._negative_number_matcher = re.compile(r"^-\d+(/-?\d+)?$")
    return parser


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        rows = load_corpus(args.corpus)
        validate_corpus(rows)
    except (CorpusError, OSError) as exc:
        print(f"corpus error: {exc}", file=sys.stderr)
        return 1
    digest = corpus_sha256(args.corpus)
    report = verify_all(rows, workers=max(1, args.workers),
                        corpus_digest=digest)
    body = RENDERERS[args.format](report)
    if args.report is None:
        sys.stdout.write(body)
    else:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(body)
    print(f"{report.total} rows in {report.duration_s:.1f}s", file=sys.stderr)
    return 0 if report.failed == 0 else 1


def _parse_rational(text: str) -> ExtendedRational:
    parts = text.split("/")
    if len(parts) == 1:
        return ExtendedRational(int(parts[0]), 1)
    if len(parts) == 2:
        return ExtendedRational(int(parts[0]), int(parts[1]))
    raise ValueError(f"not a fraction: {text!r}")


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "verify":
        return _cmd_verify(args)
    try:
        if args.command in ("jones", "genus", "realize", "classify"):
            code = parse_dt(args.dtcode)
            if args.command == "classify":
                print(classify_signs(code).kind.value)
            elif args.command == "realize":
                print(format_diagram(realize(code)))
            elif args.command == "jones":
                print(jones(realize(code)).render())
            else:
                print(turaev_genus(realize(code)))
        elif args.command == "tangle-fraction":
            print(fraction(parse_word(args.word)))
        elif args.command == "tangle-synthesize":
            print(render_word(synthesize_one_minus_one(
                _parse_rational(args.pq))))
        return 0
    except (DtCodeError, NotRealizable, MalformedWord, NotFound,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
