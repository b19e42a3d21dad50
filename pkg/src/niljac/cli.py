"""Command-line front end: term lookup, identity sweeps, sums, worked example.

Exit codes: 0 when every executed check passed, 1 when any check failed,
2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from pathlib import Path

from .algebra import NilQuat
from .identities import (
    EmptySelection,
    IdentityId,
    Report,
    identity_from_name,
    sweep,
    worked_example,
)
from .quaternions import SEQUENCE_KINDS, jn_quat, quat_sum_jn
from .sequences import IndexOutOfRange

#: Above this index a term already carries ~300k decimal digits.
_LARGE_INDEX = 10 ** 6

_RANGE_TOKEN = re.compile(r"([A-Za-z_]+)(\d+)\s*\.\.\s*([A-Za-z_]*)(\d+)")


class _UsageError(Exception):
    pass


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"index must be >= 0, got {value}")
    return value


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"count must be >= 1, got {value}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="niljac",
        description=(
            "Exact computation and identity verification for third-order "
            "Jacobsthal quaternions over nilpotent units."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    term = sub.add_parser("term", help="print one term of a sequence")
    term.add_argument("--kind", required=True, choices=list(SEQUENCE_KINDS))
    term.add_argument("--n", required=True, type=_nonneg)
    term.add_argument("--format", choices=("text", "json"), default="text")

    verify = sub.add_parser("verify", help="sweep identities over an index range")
    verify.add_argument(
        "--identity",
        required=True,
        action="append",
        metavar="ID",
        help=(
            "identity tag, short alias (p1..p9, t1..t13), 'all', a comma "
            "separated list, or a range like p1..p9; repeatable"
        ),
    )
    verify.add_argument("--max", required=True, type=_nonneg, dest="max_m")
    verify.add_argument(
        "--pairs",
        type=_positive,
        default=None,
        help="budget for two-index pairs (deterministic subsample)",
    )
    verify.add_argument("--format", choices=("text", "json", "csv"), default="text")
    verify.add_argument("--out", type=Path, default=None)

    sum_cmd = sub.add_parser("sum", help="partial sum of the quaternion sequence")
    sum_cmd.add_argument("--m", required=True, type=_nonneg)
    sum_cmd.add_argument("--format", choices=("text", "json"), default="text")

    example = sub.add_parser(
        "example", help="reproduce the worked Cassini-like computations"
    )
    example.add_argument("--format", choices=("text", "json", "csv"), default="text")
    example.add_argument("--out", type=Path, default=None)

    return parser


def _expand_range(token: str) -> list[IdentityId]:
    match = _RANGE_TOKEN.fullmatch(token.strip())
    if not match:
        raise KeyError(f"bad identity range {token!r}")
    prefix, lo, prefix2, hi = match.groups()
    if prefix2 and prefix2.lower() != prefix.lower():
        raise KeyError(f"bad identity range {token!r}")
    return [identity_from_name(f"{prefix}{k}") for k in range(int(lo), int(hi) + 1)]


def _parse_identity_selection(tokens: list[str]) -> list[IdentityId]:
    selected: list[IdentityId] = []
    for raw in tokens:
        for token in raw.split(","):
            token = token.strip()
            if not token:
                continue
            if token.lower() == "all":
                selected.extend(IdentityId)
            elif ".." in token:
                selected.extend(_expand_range(token))
            else:
                selected.append(identity_from_name(token))
    return selected


def _workers_hint() -> int | None:
    raw = os.environ.get("NQ_THREADS")
    if not raw:
        return None
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value < 1:
        print(f"warning: ignoring invalid NQ_THREADS={raw!r}", file=sys.stderr)
        return None
    return value


def _warn_if_large(n: int) -> None:
    if n > _LARGE_INDEX:
        print(
            f"warning: index {n} is large; terms carry roughly 0.3*n decimal digits",
            file=sys.stderr,
        )


def _emit_report(report: Report, fmt: str, out: Path | None, show_all: bool = False) -> None:
    if fmt == "json":
        payload = report.to_json() + "\n"
    elif fmt == "csv":
        payload = report.to_csv()
    else:
        payload = report.render_text(show_all=show_all) + "\n"
    if out is not None:
        out.write_text(payload, encoding="utf-8")
    else:
        sys.stdout.write(payload)


def _cmd_term(args: argparse.Namespace) -> int:
    _warn_if_large(args.n)
    value = SEQUENCE_KINDS[args.kind](args.n)
    if args.format == "json":
        rendered = value.to_json() if isinstance(value, NilQuat) else str(value)
        print(json.dumps({"kind": args.kind, "n": args.n, "value": rendered}))
    else:
        print(value)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        identities = _parse_identity_selection(args.identity)
    except KeyError as exc:
        raise _UsageError(exc.args[0])
    _warn_if_large(args.max_m)
    try:
        report = sweep(
            identities,
            args.max_m,
            pair_budget=args.pairs,
            workers=_workers_hint(),
        )
    except (EmptySelection, IndexOutOfRange) as exc:
        raise _UsageError(str(exc))
    _emit_report(report, args.format, args.out)
    return 0 if report.all_passed() else 1


def _cmd_sum(args: argparse.Namespace) -> int:
    _warn_if_large(args.m)
    closed = quat_sum_jn(args.m)
    naive = NilQuat()
    for s in range(args.m + 1):
        naive = naive + jn_quat(s)
    match = closed == naive
    if args.format == "json":
        print(
            json.dumps(
                {
                    "m": args.m,
                    "closed_form": closed.to_json(),
                    "naive": naive.to_json(),
                    "match": match,
                }
            )
        )
    else:
        print(f"sum of JN3[0..{args.m}] = {closed}")
        print(f"naive cross-check: {'ok' if match else f'MISMATCH, naive sum = {naive}'}")
    return 0 if match else 1


def _cmd_example(args: argparse.Namespace) -> int:
    report = worked_example()
    _emit_report(report, args.format, args.out, show_all=True)
    return 0 if report.all_passed() else 1


_HANDLERS = {
    "term": _cmd_term,
    "verify": _cmd_verify,
    "sum": _cmd_sum,
    "example": _cmd_example,
}


def run(argv: list[str] | None = None) -> int:
    """Parse ``argv`` and execute one command, returning the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 2
    try:
        return _HANDLERS[args.command](args)
    except _UsageError as exc:
        sys.stderr.write(parser.format_usage())
        print(f"niljac: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
