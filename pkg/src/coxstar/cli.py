"""
Command-line frontend.

    coxstar table A3 --format csv
    coxstar star A2 --x "1 2" --y "1 2"
    coxstar tri A2 --x "1" --y "1 2 1"
    coxstar longest H3 --subset "1,2"
    coxstar starsets A3 --j1 "1,2" --j2 "2,3"
    coxstar verify E6 --checks closedform
    coxstar oracle-check B3

Exit codes: 0 ok, 1 usage or parse error, 2 verification failure,
3 internal-mismatch alarm.  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys

import numpy as np

from . import __version__
from .demazure import down, longest, star
from .diagram import DiagramError, format_subset, from_mask, parse_subset, parse_type, to_mask
from .element import canonical_word, format_word, from_word, parse_word
from .facemonoid import (CHECK_GROUPS, InternalMismatch, NotALongestElement,
                         RankBoundExceeded, StarTable, star_sets, verify)
from .oracle import DEFAULT_GUARD, GuardExceeded, cross_check
from .rootsys import build_root_system

__all__ = ["main", "run", "emit_table", "load_table_json"]

log = logging.getLogger("coxstar")

EXIT_OK, EXIT_USAGE, EXIT_FAILED, EXIT_MISMATCH = 0, 1, 2, 3
FORMATS = ("json", "csv", "md")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _subset_list(mask: int) -> list[int]:
    return sorted(from_mask(mask))


def emit_table(t: StarTable, fmt: str = "json") -> bytes:
    """Serialize a table; output depends only on the table contents."""
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    size = 1 << t.rank
    T = t.table
    if fmt == "json":
        lines = []
        for m1 in range(size):
            j1 = json.dumps(_subset_list(m1))
            for m2 in range(size):
                v = int(T[m1, m2])
                s = json.dumps(_subset_list(v)) if v >= 0 else "null"
                lines.append(f'    {{"j1": {j1}, "j2": {json.dumps(_subset_list(m2))}, "star": {s}}}')
        verified = {k: bool(t.status.get(k, False))
                    for k in ("closure", "commutative", "containment", "closed_form_match")}
        text = (
            "{\n"
            f'  "type": {json.dumps(t.diagram.name)},\n'
            f'  "rank": {t.rank},\n'
            '  "entries": [\n' + ",\n".join(lines) + "\n  ],\n"
            f'  "verified": {json.dumps(verified)}\n'
            "}\n"
        )
        return text.encode()
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["j1", "j2", "star"])
        for m1 in range(size):
            for m2 in range(size):
                v = int(T[m1, m2])
                w.writerow([format_subset(from_mask(m1)), format_subset(from_mask(m2)),
                            format_subset(from_mask(v)) if v >= 0 else "?"])
        return buf.getvalue().encode()
    # markdown
    cell = lambda v: format_subset(from_mask(int(v))) if v >= 0 else "?"  # noqa: E731
    out = [f"# {t.diagram.name}", ""]
    if t.rank <= 4:
        header = ["J1 \\ J2"] + [format_subset(from_mask(m)) for m in range(size)]
        out.append("| " + " | ".join(header) + " |")
        out.append("|" + "---|" * len(header))
        for m1 in range(size):
            row = [format_subset(from_mask(m1))] + [cell(T[m1, m2]) for m2 in range(size)]
            out.append("| " + " | ".join(row) + " |")
    else:
        out.append("| j1 | j2 | star |")
        out.append("|---|---|---|")
        for m1 in range(size):
            for m2 in range(size):
                out.append(f"| {format_subset(from_mask(m1))} | {format_subset(from_mask(m2))} "
                           f"| {cell(T[m1, m2])} |")
    out.append("")
    status = ", ".join(f"{k}={'yes' if v else 'no'}" for k, v in sorted(t.status.items()))
    out.append(f"verified: {status}")
    return ("\n".join(out) + "\n").encode()


def load_table_json(data: bytes | str) -> StarTable:
    """Inverse of ``emit_table(t, "json")``."""
    obj = json.loads(data)
    d = parse_type(obj["type"])
    size = 1 << d.rank
    T = np.full((size, size), -1, dtype=np.int64)
    for e in obj["entries"]:
        T[to_mask(e["j1"]), to_mask(e["j2"])] = -1 if e["star"] is None else to_mask(e["star"])
    return StarTable(d, T, status=dict(obj["verified"]))


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="coxstar", description="Demazure products and the face monoid of a finite Coxeter group.")
    p.add_argument("--version", action="version", version=f"coxstar {__version__}")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    t = sub.add_parser("table", help="full J1 * J2 table with verification status")
    t.add_argument("type")
    t.add_argument("--format", choices=FORMATS, default="json")
    t.add_argument("--out", help="write to this path instead of stdout")

    for name, helptext in (("star", "canonical word of x * y"), ("tri", "canonical word of x |> y")):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("type")
        s.add_argument("--x", required=True, help='space-separated word, e.g. "1 2 1"')
        s.add_argument("--y", required=True)

    lo = sub.add_parser("longest", help="longest element of a parabolic subgroup")
    lo.add_argument("type")
    lo.add_argument("--subset", required=True, help='comma-separated labels, "-" for empty')

    ss = sub.add_parser("starsets", help="J1 * J2 on subsets")
    ss.add_argument("type")
    ss.add_argument("--j1", required=True)
    ss.add_argument("--j2", required=True)

    v = sub.add_parser("verify", help="check the full table")
    v.add_argument("type")
    v.add_argument("--checks", choices=sorted(CHECK_GROUPS), default="all")

    o = sub.add_parser("oracle-check", help="compare against brute force on an enumerable group")
    o.add_argument("type")
    o.add_argument("--guard", type=int, default=DEFAULT_GUARD)
    return p


def _cmd(args, out) -> int:
    d = parse_type(args.type)
    rs = build_root_system(d)
    if args.cmd in ("star", "tri"):
        x = from_word(rs, parse_word(rs, args.x))
        y = from_word(rs, parse_word(rs, args.y))
        z = star(x, y) if args.cmd == "star" else down(x, y)
        print(format_word(canonical_word(z)), file=out)
        return EXIT_OK
    if args.cmd == "longest":
        w = longest(rs, parse_subset(d, args.subset))
        print(format_word(canonical_word(w)), file=out)
        print(w.length, file=out)
        return EXIT_OK
    if args.cmd == "starsets":
        J = star_sets(rs, parse_subset(d, args.j1), parse_subset(d, args.j2))
        print(format_subset(J), file=out)
        return EXIT_OK
    if args.cmd == "table":
        report = verify(rs)
        data = emit_table(report.table, args.format)
        if args.out:
            with open(args.out, "wb") as fh:
                fh.write(data)
        else:
            out.write(data.decode())
        for f in report.failures:
            log.warning("%s", f)
        return EXIT_OK if report.ok else EXIT_FAILED
    if args.cmd == "verify":
        report = verify(rs, checks=args.checks)
        T = report.table.table
        full = (1 << d.rank) - 1
        proper = [(m1, m2) for m1 in range(full) for m2 in range(full) if T[m1, m2] > 0]
        doc = report.to_dict()
        doc["checks_group"] = args.checks
        doc["nonempty_proper_pairs"] = [
            {"j1": _subset_list(m1), "j2": _subset_list(m2), "star": _subset_list(int(T[m1, m2]))}
            for m1, m2 in proper if m1 <= m2]
        doc["seconds"] = {k: round(s, 3) for k, s in report.seconds.items()}
        print(json.dumps(doc, indent=2), file=out)
        return EXIT_OK if report.ok else EXIT_FAILED
    if args.cmd == "oracle-check":
        report = cross_check(rs, args.guard)
        print(json.dumps(report.to_dict(), indent=2), file=out)
        return EXIT_OK if report.ok else EXIT_FAILED
    raise _UsageError(f"unknown command {args.cmd}")


def run(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = _build_parser().parse_args(argv)
    except _UsageError as exc:
        print(f"coxstar: {exc}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    try:
        return _cmd(args, out)
    except InternalMismatch as exc:
        print(f"coxstar: internal mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except NotALongestElement as exc:
        print(f"coxstar: not closed: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except (DiagramError, RankBoundExceeded, GuardExceeded, ValueError, _UsageError) as exc:
        print(f"coxstar: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"coxstar: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
