"""Command-line interface.

Subcommands: count (one signature), hz (closed-surface numbers), table
(bulk CSV/JSON emission), enumerate (class dumps), verify (consistency
suites). Exit codes: 0 success, 1 verification or consistency failure,
2 usage error. All output is deterministic and every count is printed as a
decimal integer, never a float.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Sequence

from .errors import (
    CacheError,
    ConsistencyError,
    DomainError,
    GluecountError,
)
from .formula import SurfaceSignature, count_closed
from .gluing import DEFAULT_ENUMERATION_CAP, count_brute, enumerate_classes
from .hz import hz_from_gluing_counts, hz_sum, hz_tanh
from .recursion import CountTable, count_recursive, memo_store_load, memo_store_save
from .verify import iter_bounded_signatures, run_suites

__all__ = ["main", "run", "build_parser"]


def _sizes_arg(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not parts:
        raise argparse.ArgumentTypeError("expected at least one boundary size")
    return parts


def _labels_arg(text: str) -> tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gluecount",
        description="Exact counts of polygon edge gluings by target surface.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="count gluings for one signature")
    p_count.add_argument("--genus", type=int, required=True)
    p_count.add_argument(
        "--holes", type=_sizes_arg, required=True,
        help="comma-separated boundary sizes, e.g. 1,0,0",
    )
    p_count.add_argument(
        "--method", choices=("closed", "recursive", "brute"), default="closed"
    )
    p_count.add_argument("--cache", help="memo file to load before / save after (recursive)")
    p_count.add_argument(
        "--cap", type=int, default=DEFAULT_ENUMERATION_CAP,
        help="largest polygon the brute method will enumerate",
    )
    p_count.set_defaults(func=_cmd_count)

    p_hz = sub.add_parser("hz", help="closed-surface gluing numbers")
    p_hz.add_argument("--genus", type=int, required=True)
    p_hz.add_argument("--N", type=int, required=True, help="half the polygon size")
    p_hz.add_argument("--method", choices=("sum", "series", "gluing"), default="sum")
    p_hz.set_defaults(func=_cmd_hz)

    p_table = sub.add_parser("table", help="emit all counts within bounds")
    p_table.add_argument("--max-genus", type=int, default=0)
    p_table.add_argument("--max-holes", type=int, default=0)
    p_table.add_argument("--max-n", type=int, default=0)
    p_table.add_argument("--format", choices=("csv", "json"), default="csv")
    p_table.add_argument("--out", help="output path (default: stdout)")
    p_table.add_argument("--cache", help="warm this memo file while tabulating")
    p_table.set_defaults(func=_cmd_table)

    p_enum = sub.add_parser("enumerate", help="dump gluing-word classes")
    p_enum.add_argument("--N", type=int, required=True, help="polygon size")
    p_enum.add_argument(
        "--labels", type=_labels_arg, default=(),
        help="comma-separated distinct free labels (default: none)",
    )
    p_enum.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP)
    p_enum.add_argument("--out", help="output path (default: stdout)")
    p_enum.set_defaults(func=_cmd_enumerate)

    p_verify = sub.add_parser("verify", help="run consistency suites")
    p_verify.add_argument("--level", choices=("quick", "full"), default="quick")
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _cmd_count(args: argparse.Namespace) -> int:
    sig = SurfaceSignature(args.genus, args.holes)
    if args.method == "closed":
        value = count_closed(sig)
    elif args.method == "recursive":
        memo = memo_store_load(args.cache) if args.cache else CountTable()
        value = count_recursive(sig, memo)
        if args.cache:
            memo_store_save(memo, args.cache)
    else:
        value = count_brute(sig, cap=args.cap)
    print(value)
    return 0


def _cmd_hz(args: argparse.Namespace) -> int:
    route = {"sum": hz_sum, "series": hz_tanh, "gluing": hz_from_gluing_counts}
    print(route[args.method](args.genus, args.N))
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    memo = memo_store_load(args.cache) if args.cache else None
    rows = []
    for sig in iter_bounded_signatures(args.max_genus, args.max_holes, args.max_n):
        value = count_closed(sig)
        if memo is not None:
            recursive = count_recursive(sig, memo)
            if recursive != value:
                raise ConsistencyError(
                    f"closed and recursive disagree at g={sig.genus}, "
                    f"ns={list(sig.sorted_sizes())}: {value} vs {recursive}"
                )
        rows.append((sig.genus, sig.sorted_sizes(), value))

    if args.format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["g", "ns", "count"])
        for genus, sizes, value in rows:
            writer.writerow([genus, "|".join(str(n) for n in sizes), str(value)])
        text = buffer.getvalue()
    else:
        payload = [
            {"g": genus, "ns": list(sizes), "count": str(value)}
            for genus, sizes, value in rows
        ]
        text = json.dumps(payload, indent=2) + "\n"

    _emit(text, args.out)
    if memo is not None:
        memo_store_save(memo, args.cache)
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    if args.N > args.cap:
        raise DomainError(f"polygon size {args.N} exceeds enumeration cap {args.cap}")
    lines = []
    for canon, surface in enumerate_classes(args.N, args.labels):
        boundaries = ",".join(
            "(" + ",".join(str(lab) for lab in cycle) + ")"
            for cycle in surface.boundary_cycles
        )
        lines.append(
            f"canon={canon.text()};g={surface.genus};"
            f"boundaries=[{boundaries}];punctures={surface.puncture_count}"
        )
    _emit("\n".join(lines) + ("\n" if lines else ""), args.out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    results = run_suites(args.level)
    for result in results:
        print(result.line())
    failed = [r for r in results if not r.passed]
    if failed:
        print(f"{len(failed)} of {len(results)} suites failed")
        return 1
    print(f"all {len(results)} suites passed")
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CacheError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return 1
    except GluecountError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    sys.exit(main())
