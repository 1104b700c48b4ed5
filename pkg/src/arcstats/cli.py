"""Command-line front end: ``arcstats <subcommand> ...``.

Exit codes: 0 success, 1 verification failure or mismatch, 2 usage/parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import comb

from . import bruhat, enumeration, symmetry, verify
from .core import PartitionError, SetPartition, matching_from_partition, parse_matching, parse_partition
from .qpoly import q_double_factorial
from .render import HIGHLIGHTS, RenderSpec, render_svg
from .stats import partition_stats, stat_record

CLOSED_FORMS = {
    "ell": lambda n: q_double_factorial(n),
    "dindex": lambda n: q_double_factorial(n).shift(comb(n + 1, 2)),
    "inumber": lambda n: q_double_factorial(n).shift(comb(n, 2)),
}


class UsageError(Exception):
    pass


def _infer_n(text: str) -> int:
    tokens: list[str] = []
    for block in text.split("|"):
        tokens += block.split(",") if "," in block else list(block.strip())
    return len([t for t in tokens if t.strip()])


def _read_object(args):
    if getattr(args, "matching", None):
        return parse_matching(args.matching)
    if getattr(args, "partition", None):
        n = args.n if args.n is not None else _infer_n(args.partition)
        return parse_partition(args.partition, n)
    raise UsageError("give --partition TEXT [--n N] or --matching PAIRS")


def _add_object_args(p):
    p.add_argument("--partition", help='bar notation, e.g. "1378|26|45"')
    p.add_argument("--matching", help='pair list, e.g. "1-4,2-3"')
    p.add_argument("--n", type=int, help="ground set size (inferred when omitted)")


def cmd_stats(args) -> int:
    obj = _read_object(args)
    if isinstance(obj, SetPartition) and obj.is_matching() and obj.n % 2 == 0:
        obj = matching_from_partition(obj)
    if isinstance(obj, SetPartition):
        rec = partition_stats(obj)
    else:
        rec = stat_record(obj).to_dict()
    if args.format == "json":
        print(json.dumps(rec, separators=(",", ":")))
    else:
        print(obj)
        for k, v in rec.items():
            print(f"  {k:<9}{v}")
    return 0


def cmd_poly(args) -> int:
    poly = enumeration.generating_polynomial(args.family, args.n, args.stat, jobs=args.jobs)
    if args.compare_closed_form:
        if args.family != "matchings" or args.stat not in CLOSED_FORMS:
            raise UsageError(f"no closed form for {args.stat} on {args.family}; "
                             f"available for matchings: {', '.join(CLOSED_FORMS)}")
        want = CLOSED_FORMS[args.stat](args.n)
        if poly == want:
            print(f"MATCH: {poly}")
            return 0
        print(f"MISMATCH: got {poly}; expected {want}")
        return 1
    print(poly.to_json() if args.format == "json" else poly)
    return 0


def cmd_enumerate(args) -> int:
    if args.format == "csv":
        enumeration.export_csv(args.family, args.n, sys.stdout)
    elif args.format == "json":
        rows = []
        for obj in enumeration.objects(args.family, args.n):
            rec = stat_record(obj).to_dict() if args.family == "matchings" else partition_stats(obj)
            rows.append({"object": enumeration.canonical_string(obj), **rec})
        print(json.dumps(rows))
    else:
        for obj in enumeration.objects(args.family, args.n):
            print(enumeration.canonical_string(obj))
    return 0


def cmd_verify(args) -> int:
    if args.all and args.ids:
        raise UsageError("use either --all or --ids")
    ids = None if args.all or not args.ids else [s.strip() for s in args.ids.split(",") if s.strip()]
    if ids is not None and not ids:
        raise UsageError("empty --ids")
    try:
        report = verify.run_identity_suite(ids, max_n=args.max_n, max_partition_n=args.max_partition_n,
                                           bruhat_max_n=args.bruhat_max_n, long=args.long)
    except verify.SuiteError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        print(report.to_json())
    else:
        print("\n".join(report.summary_lines()))
        print("ALL PASS" if report.passed else "FAILED: " + ", ".join(report.failed_ids()))
    return 0 if report.passed else 1


def cmd_bruhat(args) -> int:
    bound = verify.LONG_CAPS["bruhat"] if args.long else bruhat.DEFAULT_MAX_N
    if not (args.covers or args.check_rank):
        raise UsageError("give --covers and/or --check-rank")
    if args.covers:
        sys.stdout.write(bruhat.to_dot(args.n, max_n=bound))
    if args.check_rank:
        rep = bruhat.verify_rank_is_length(args.n, max_n=bound)
        print(rep.to_json())
        return 0 if rep.passed else 1
    return 0


def cmd_bijection(args) -> int:
    build = {
        "phi": symmetry.cn_involution,
        "psi": symmetry.length_complement,
        "witness": symmetry.main_theorem_witness,
    }[args.kind]
    sys.stdout.write(build(args.n).to_csv())
    return 0


def cmd_render(args) -> int:
    obj = _read_object(args)
    if args.highlight and isinstance(obj, SetPartition):
        obj = matching_from_partition(obj)
    spec = RenderSpec(obj, extended=args.extended, width=args.width, height=args.height,
                      highlight=args.highlight)
    svg = render_svg(spec)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="arcstats", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="statistics of one partition or matching")
    _add_object_args(p)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("poly", help="generating polynomial of a statistic")
    p.add_argument("--family", choices=enumeration.FAMILIES, default="matchings")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--stat", required=True)
    p.add_argument("--compare-closed-form", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("enumerate", help="list a whole family")
    p.add_argument("--family", choices=enumeration.FAMILIES, default="matchings")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json", "text"), default="csv")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run the identity suite")
    p.add_argument("--all", action="store_true")
    p.add_argument("--ids", help="comma-separated identity ids")
    p.add_argument("--max-n", type=int, default=verify.DEFAULT_MAX_N)
    p.add_argument("--max-partition-n", type=int, default=verify.DEFAULT_MAX_PARTITION_N)
    p.add_argument("--bruhat-max-n", type=int, default=verify.DEFAULT_BRUHAT_MAX_N)
    p.add_argument("--long", action="store_true", help="allow the larger sizes")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bruhat", help="Bruhat order on perfect matchings")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--covers", action="store_true", help="emit the Hasse diagram as DOT")
    p.add_argument("--check-rank", action="store_true", help="emit a JSON gradedness report")
    p.add_argument("--long", action="store_true")
    p.set_defaults(func=cmd_bruhat)

    p = sub.add_parser("bijection", help="export phi / psi / psi o phi as CSV")
    p.add_argument("--kind", choices=("phi", "psi", "witness"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("render", help="SVG arc diagram")
    _add_object_args(p)
    p.add_argument("--extended", action="store_true")
    p.add_argument("--highlight", choices=HIGHLIGHTS)
    p.add_argument("--width", type=int, default=640)
    p.add_argument("--height", type=int, default=260)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, PartitionError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
