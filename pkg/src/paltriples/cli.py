"""Command-line interface.

Exit codes: 0 success, 1 a verification found a failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import contextlib
import datetime as _dt
import logging
import os
import sys
from typing import Any, Dict, Optional, Sequence, TextIO

from . import __version__
from .catalog import verify_catalog
from .families import FamilyId, check_member, member
from .records import FORMATTERS, OutputRecord, header_line, to_jsonl
from .search import SearchHit, SearchQuery, decompose, run_query
from .triples import (
    Triple,
    all_palindrome_prefilter,
    digit_parity_form,
    is_primitive,
    lemma42_report,
    profile,
    table3_form,
)

log = logging.getLogger("paltriples")

ROLE_CHOICES = {"odd-leg": "odd_leg", "even-leg": "even_leg", "hypotenuse": "hypotenuse"}


class UsageError(Exception):
    pass


def default_threads() -> int:
    env = os.environ.get("PAL_THREADS")
    if env:
        try:
            n = int(env)
        except ValueError:
            raise UsageError(f"PAL_THREADS must be an integer, got {env!r}")
        if n < 1:
            raise UsageError(f"PAL_THREADS must be positive, got {n}")
        return n
    return os.cpu_count() or 1


def _positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text!r}")
    return n


def _hit_record(hit: SearchHit) -> OutputRecord:
    t = hit.triple
    return OutputRecord(
        str(t.a),
        str(t.b),
        str(t.c),
        hit.primitive,
        hit.profile.flags,
        hit.profile.count,
        hit.profile.parity_pattern,
        hit.provenance.get("mode", ""),
        dict(hit.provenance),
    )


def _triple_record(t: Triple, source: str, params: Dict[str, Any]) -> OutputRecord:
    prof = profile(t)
    return OutputRecord(
        str(t.a), str(t.b), str(t.c), is_primitive(t), prof.flags, prof.count, prof.parity_pattern, source, params
    )


# -- subcommands -------------------------------------------------------------


def cmd_family(args, threads: int):
    fam = FamilyId(args.family)
    records, failures = [], []
    for n in range(args.start, args.start + args.count):
        m = member(fam, n)
        report = check_member(m)
        params = {
            "family": fam.value,
            "index": n,
            "pattern": [None if p is None else str(p) for p in m.predicted_pattern],
            "declared_pal_count": m.declared_pal_count,
        }
        if m.multiplier is not None:
            params["multiplier"] = str(m.multiplier)
        if m.s is not None:
            params["s"] = m.s
            params["t"] = 1
        if args.verify:
            params["pattern_ok"] = report.ok
            if not report.ok:
                failures.append(f"{fam} index {n}: " + "; ".join(report.mismatches))
        records.append(_triple_record(m.triple, "family", params))
    return records, failures


def cmd_search(args, threads: int):
    if args.engine == "euclid":
        if args.max_s is None and args.max_z is None:
            raise UsageError("search euclid needs --max-s or --max-z")
        q = SearchQuery(
            "euclid",
            max_s=args.max_s,
            max_c=args.max_z,
            min_pal_count=args.min_pal,
            primitive_only=args.primitive_only,
        )
    else:
        if args.min_digits < 1 or args.max_digits < args.min_digits:
            raise UsageError("need 1 <= --min-digits <= --max-digits")
        q = SearchQuery(
            "anchored",
            anchor_role=ROLE_CHOICES[args.role],
            anchor_digit_range=(args.min_digits, args.max_digits),
            min_pal_count=args.min_pal,
            primitive_only=args.primitive_only,
        )
    return [_hit_record(h) for h in run_query(q, threads)], []


def cmd_decompose(args, threads: int):
    role = ROLE_CHOICES[args.role]
    triples = decompose(role, args.n, args.primitive_only)
    return [_triple_record(t, "decompose", {"role": role, "anchor": str(args.n)}) for t in triples], []


def cmd_evidence(args, threads: int):
    q = SearchQuery("evidence", max_c=args.max_z, prune=not args.no_prune)
    return [_hit_record(h) for h in run_query(q, threads)], []


def cmd_classify(args, threads: int):
    t = Triple(args.x, args.y, args.z)
    parity = digit_parity_form(t)
    params: Dict[str, Any] = {"parity_admissible": parity.admissible}
    if is_primitive(t):
        rep = lemma42_report(t)
        params["lemma42"] = {
            "exactly_one_leg_div3": rep.exactly_one_leg_div3,
            "even_leg_div4": rep.even_leg_div4,
            "exactly_one_component_div5": rep.exactly_one_component_div5,
        }
        params["table3_form"] = table3_form(t).value
        params["prefilter"] = all_palindrome_prefilter(t)
    else:
        params["lemma42"] = params["table3_form"] = params["prefilter"] = None
    return [_triple_record(t, "classify", params)], []


def cmd_verify_tables(args, threads: int):
    records, failures = [], []
    for v in verify_catalog():
        row = v.row
        params = {
            "row": row.row,
            "pythagorean": v.pythagorean,
            "ok": v.ok,
            "erratum_note": v.erratum_note,
        }
        if v.corrected is not None:
            params["corrected"] = [str(c) for c in v.corrected]
        records.append(OutputRecord.from_components(row.x, row.y, row.z, row.source, params))
        if not v.ok:
            why = [] if v.pythagorean else ["fails x^2 + y^2 = z^2"]
            if not v.primitive:
                why.append("not primitive")
            if v.pal_count < 2:
                why.append(f"only {v.pal_count} palindromic components")
            if v.erratum_note:
                why.append(v.erratum_note)
            failures.append(f"{row.source} row {row.row} ({row.x}, {row.y}, {row.z}): " + "; ".join(why))
    return records, failures


# -- parser ------------------------------------------------------------------


def _common(suppress: bool) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--format", choices=sorted(FORMATTERS), default=default("json"), help="output format")
    p.add_argument("--out", metavar="FILE", default=default(None), help="also write JSON-lines with a metadata header")
    p.add_argument("--threads", type=int, default=default(None), help="worker count (default: $PAL_THREADS or CPU count)")
    p.add_argument("-v", "--verbose", action="store_true", default=default(False))
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common(suppress=True)
    parser = argparse.ArgumentParser(
        prog="paltriples",
        description="Construct, search and verify Pythagorean triples with palindromic components.",
        parents=[_common(suppress=False)],
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("family", parents=[common], help="members of a constructive family")
    p.add_argument("family", choices=[f.value for f in FamilyId])
    p.add_argument("--from", dest="start", type=_positive_int, default=1)
    p.add_argument("--count", type=_positive_int, default=1)
    p.add_argument("--verify", action="store_true", help="check predicted digit patterns; exit 1 on mismatch")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("search", parents=[common], help="search for triples")
    engines = p.add_subparsers(dest="engine", required=True)
    e = engines.add_parser("euclid", parents=[common], help="sweep Euclid parameters")
    e.add_argument("--max-s", type=_positive_int)
    e.add_argument("--max-z", type=_positive_int)
    e.add_argument("--min-pal", type=int, choices=range(4), default=0)
    e.add_argument("--primitive-only", action="store_true")
    e.set_defaults(func=cmd_search)
    e = engines.add_parser("anchored", parents=[common], help="complete triples around palindromic anchors")
    e.add_argument("--role", choices=sorted(ROLE_CHOICES), required=True)
    e.add_argument("--min-digits", type=_positive_int, required=True)
    e.add_argument("--max-digits", type=_positive_int, required=True)
    e.add_argument("--min-pal", type=int, choices=range(4), default=0)
    e.add_argument("--primitive-only", action="store_true")
    e.set_defaults(func=cmd_search)

    p = sub.add_parser("decompose", parents=[common], help="all triples containing N in a role")
    p.add_argument("--role", choices=sorted(ROLE_CHOICES), required=True)
    p.add_argument("--primitive-only", action="store_true")
    p.add_argument("n", type=_positive_int)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("evidence", parents=[common], help="primitive triples made entirely of palindromes")
    p.add_argument("--max-z", type=_positive_int, required=True)
    p.add_argument("--no-prune", action="store_true", help="profile every triple (reference mode)")
    p.set_defaults(func=cmd_evidence)

    p = sub.add_parser("classify", parents=[common], help="profile and classify one triple")
    p.add_argument("x", type=_positive_int)
    p.add_argument("y", type=_positive_int)
    p.add_argument("z", type=_positive_int)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify-tables", parents=[common], help="check the golden tables; exit 1 on any failure")
    p.set_defaults(func=cmd_verify_tables)
    return parser


def _query_meta(args) -> Dict[str, Any]:
    skip = {"func", "format", "out", "verbose"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def run(argv: Optional[Sequence[str]] = None, stdout: TextIO = None, stderr: TextIO = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=stderr)
    try:
        threads = args.threads if args.threads is not None else default_threads()
        if threads < 1:
            raise UsageError(f"--threads must be positive, got {threads}")
        args.threads = threads
        records, failures = args.func(args, threads)
    except (UsageError, ValueError) as exc:
        print(f"paltriples: error: {exc}", file=stderr)
        return 2

    stdout.write(FORMATTERS[args.format](records))
    if args.out:
        meta = {
            "tool": "paltriples",
            "version": __version__,
            "query": _query_meta(args),
            "timestamp": _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds"),
        }
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(header_line(meta) + "\n")
            fh.write(to_jsonl(records))
    for msg in failures:
        print(f"FAIL {msg}", file=stderr)
    return 1 if failures else 0


def main() -> None:
    sys.exit(run())
