"""mexkit command line: ``count``, ``bijection`` and ``verify``.

Exit codes: 0 success, 1 counterexample or violated map precondition,
2 usage error (unknown name, missing parameter, malformed partition text).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from mexkit import bijections as bj
from mexkit import families as fam
from mexkit.checks import ALL_CHECK_IDS, RunConfig, run_check
from mexkit.families import parse_colored, render_colored
from mexkit.partition_core import parse_partition

BIJECTIONS = ("phi", "phi_inv", "xi", "xi_inv", "glaisher", "glaisher_inv", "franklin", "d3k")
CSV_COLUMNS = ("check_id", "n", "k", "r", "lhs", "rhs", "status")


class UsageError(Exception):
    pass


def _require(args, name: str):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"{args.name} needs --{name}")
    return value


def cmd_count(args, out) -> int:
    try:
        result = fam.count(args.family, args.n, k=args.k, r=args.r)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    print(result.count, file=out)
    return 0


def _run_bijection(args, trace: Optional[list]) -> tuple[str, str]:
    """Returns (image text, parameter text)."""
    name = args.name
    try:
        if name in ("phi_inv", "xi_inv", "d3k_inv"):
            source = parse_colored(args.input)
        else:
            source = parse_partition(args.input)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if name == "phi":
        return render_colored(bj.phi(source, _require(args, "k"), trace)), ""
    if name == "phi_inv":
        lam, k = bj.phi_inverse(source, trace)
        return str(lam), f"k={k}"
    if name == "xi":
        return render_colored(bj.xi(source, _require(args, "r"), _require(args, "j"), trace)), ""
    if name == "xi_inv":
        lam, j = bj.xi_inverse(source, _require(args, "r"), trace)
        return str(lam), f"j={j}"
    if name == "glaisher":
        return str(bj.glaisher(source, _require(args, "r"), trace)), ""
    if name == "glaisher_inv":
        return str(bj.glaisher_inverse(source, _require(args, "r"), trace)), ""
    if name == "franklin":
        return str(bj.franklin(source, trace)), ""
    if name == "d3k":
        j = args.j if args.j is not None else 0
        return render_colored(bj.d3k_map(source, j, _require(args, "k"), trace)), ""
    raise UsageError(f"unknown bijection {name!r}")


def cmd_bijection(args, out, err) -> int:
    trace = [] if args.trace else None
    try:
        image, params = _run_bijection(args, trace)
    except bj.PreconditionError as exc:
        print(f"precondition violated: {exc}", file=err)
        return 1
    print(image, file=out)
    if params:
        print(params, file=out)
    if trace is not None:
        for line in trace:
            print(f"# {line}", file=out)
    return 0


def cmd_verify(args, out) -> int:
    if args.check_id not in ALL_CHECK_IDS:
        raise UsageError(f"unknown check {args.check_id!r}; choose from {', '.join(ALL_CHECK_IDS)}")
    try:
        config = RunConfig(max_n=args.max_n, max_k=args.max_k, max_r=args.max_r,
                           series_order=args.order, output_format=args.format,
                           parallelism=args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    report = run_check(args.check_id, config)
    if config.output_format == "json":
        payload = report.to_dict(include_elapsed=not args.no_elapsed)
        print(json.dumps(payload, indent=2), file=out)
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for row in report.rows:
            writer.writerow({key: "" if row[key] is None else row[key] for key in CSV_COLUMNS})
        out.write(buf.getvalue())
    return 1 if report.status == "fail" else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mexkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="evaluate a counting function")
    p_count.add_argument("family", help=", ".join(f.value for f in fam.Family))
    p_count.add_argument("--n", type=int, required=True)
    p_count.add_argument("--k", type=int)
    p_count.add_argument("--r", type=int)

    p_bij = sub.add_parser("bijection", help="apply a bijection to a partition")
    p_bij.add_argument("name", help=", ".join(BIJECTIONS))
    p_bij.add_argument("--input", required=True,
                       help='partition text such as "7+7+6+6+4+2" or "9_1+3_0"; "0" is empty')
    p_bij.add_argument("--k", type=int)
    p_bij.add_argument("--j", type=int)
    p_bij.add_argument("--r", type=int)
    p_bij.add_argument("--trace", action="store_true", help="print the step-by-step trace")

    p_ver = sub.add_parser("verify", help="run a verification sweep")
    p_ver.add_argument("check_id", help=", ".join(ALL_CHECK_IDS))
    p_ver.add_argument("--max-n", type=int)
    p_ver.add_argument("--max-k", type=int)
    p_ver.add_argument("--max-r", type=int)
    p_ver.add_argument("--order", type=int, default=100)
    p_ver.add_argument("--format", default="json")
    p_ver.add_argument("--jobs", type=int, default=1)
    p_ver.add_argument("--no-elapsed", action="store_true",
                       help="omit timing so repeated runs are byte-identical")
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "count":
            return cmd_count(args, out)
        if args.command == "bijection":
            return cmd_bijection(args, out, err)
        return cmd_verify(args, out)
    except UsageError as exc:
        print(f"mexkit: error: {exc}", file=err)
        return 2


if __name__ == "__main__":
    sys.exit(main())
