"""Command-line interface: count, table, enumerate, net, verify.

Exit codes: 0 success, 1 verification mismatch, 2 usage or domain error,
3 invalid sign sequence.  Sign sequences are accepted as "+/-" strings
("++--") or comma-separated entries ("1,1,-1,-1").  HEXAFLEX_THREADS caps
the worker threads used for per-n rows in `table --printable`.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import counting, geometry, labeling, render, sequences, verify

__all__ = ["main"]

USAGE_ERROR = 2
INVALID_SIGNS = 3


def _parse_signs(text: str) -> tuple[int, ...]:
    if "," in text:
        try:
            entries = tuple(int(part.strip()) for part in text.split(","))
        except ValueError:
            raise ValueError(f"cannot parse {text!r} as comma-separated signs")
    else:
        table = {"+": 1, "-": -1}
        if not text or any(ch not in table for ch in text):
            raise ValueError(f"cannot parse {text!r}: expected '+'/'-' characters")
        entries = tuple(table[ch] for ch in text)
    if len(entries) < 3 or any(a not in (1, -1) for a in entries):
        raise ValueError(f"{text!r} is not a sign sequence of length >= 3 over +1/-1")
    return entries


def _explain_invalid(signs: tuple[int, ...]) -> str:
    n = len(signs)
    if all(signs[j] != signs[(j + 1) % n] for j in range(n)):
        return (
            "signs alternate, so no two adjacent triangles fold together; "
            "a foldable sequence needs at least one equal adjacent pair"
        )
    achievable = counting.sum_set(n)
    return (
        f"entry sum {sum(signs)} is not reachable by extension moves from (1,1,1); "
        f"achievable sums at length {n} are {list(achievable)}"
    )


def _worker_cap() -> int:
    raw = os.environ.get("HEXAFLEX_THREADS", "")
    if not raw:
        return 1
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"HEXAFLEX_THREADS={raw!r} is not an integer")
    if cap < 1:
        raise ValueError(f"HEXAFLEX_THREADS must be >= 1, got {cap}")
    return cap


def cmd_count(args: argparse.Namespace) -> int:
    print(counting.hexaflexagon_count(args.n))
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    if args.min < 3 or args.max < args.min:
        raise ValueError(f"need 3 <= min <= max, got min={args.min} max={args.max}")
    ns = range(args.min, args.max + 1)
    if args.printable:
        if args.max > args.limit:
            raise ValueError(f"max={args.max} exceeds the enumeration limit {args.limit}")

        def row(n: int) -> tuple[int, int, int]:
            return (
                n,
                counting.hexaflexagon_count(n),
                geometry.printable_class_count(n, limit=args.limit),
            )

        cap = _worker_cap()
        if cap > 1:
            with ThreadPoolExecutor(max_workers=cap) as pool:
                rows = list(pool.map(row, ns))
        else:
            rows = [row(n) for n in ns]
    else:
        rows = [(n, counting.hexaflexagon_count(n), None) for n in ns]
    sys.stdout.write(render.render_table(rows))
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    records = sequences.enumerate_classes(
        args.n, printability=True, labels=args.with_labels, limit=args.limit
    )
    for record in records:
        payload = {
            "n": record.n,
            "signs": "".join("+" if a > 0 else "-" for a in record.signs),
            "sum": record.sum,
            "printable": record.printable,
        }
        if args.with_labels:
            payload["labels"] = list(record.labels)
        print(json.dumps(payload))
    return 0


def cmd_net(args: argparse.Namespace) -> int:
    if args.signs is not None:
        signs = _parse_signs(args.signs)
    else:
        records = sequences.enumerate_classes(args.n, limit=args.limit)
        if not 0 <= args.index < len(records):
            raise ValueError(
                f"--index {args.index} out of range: n={args.n} has {len(records)} classes"
            )
        signs = records[args.index].signs
    if not sequences.is_valid(signs):
        sys.stderr.write(f"invalid sign sequence: {_explain_invalid(signs)}\n")
        return INVALID_SIGNS
    pattern = labeling.build_pattern(sequences.reduction_history(signs))
    strip = geometry.lay_strip(pattern.signs, glue=args.glue)
    labels = labeling.strip_labels(pattern, glue=args.glue)
    document = render.render_strip(strip, labels, side=args.side, scale=args.scale)
    if args.out == "-":
        sys.stdout.write(document)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            handle.write(document)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    ok = verify.run_suites(args.max_n, paper_bracelet=args.paper_bracelet, report=print)
    return 0 if ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hexaflex",
        description="Count, enumerate, and print hexaflexagon strips.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="closed-form class count H(n)")
    count.add_argument("--n", type=int, required=True, help="number of top faces, n >= 3")
    count.set_defaults(func=cmd_count)

    table = sub.add_parser("table", help="CSV table of counts over a range of n")
    table.add_argument("--min", type=int, default=3)
    table.add_argument("--max", type=int, required=True)
    table.add_argument(
        "--printable", action="store_true", help="add the printable-class column Hp"
    )
    table.add_argument(
        "--limit",
        type=int,
        default=geometry.DEFAULT_COUNTING_LIMIT,
        help="largest n allowed for the printable column",
    )
    table.set_defaults(func=cmd_table)

    enumerate_ = sub.add_parser("enumerate", help="JSONL records of every class at n")
    enumerate_.add_argument("--n", type=int, required=True)
    enumerate_.add_argument("--format", choices=["jsonl"], default="jsonl")
    enumerate_.add_argument(
        "--with-labels", action="store_true", help="include the face label sequence"
    )
    enumerate_.add_argument(
        "--limit",
        type=int,
        default=sequences.DEFAULT_ENUMERATION_LIMIT,
        help="largest n allowed",
    )
    enumerate_.set_defaults(func=cmd_enumerate)

    net = sub.add_parser("net", help="SVG net for one class")
    which = net.add_mutually_exclusive_group(required=True)
    which.add_argument("--signs", help="sign sequence, '++--' or '1,1,-1,-1'")
    which.add_argument("--n", type=int, help="enumerate length n and pick --index")
    net.add_argument("--index", type=int, default=0, help="class index in canonical order")
    net.add_argument("--side", choices=["front", "back"], default="front")
    net.add_argument(
        "--glue",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="append the glue triangle (default on)",
    )
    net.add_argument("--scale", type=float, default=40.0, help="pixels per lattice unit")
    net.add_argument("--out", default="-", help="output path, '-' for stdout")
    net.add_argument(
        "--limit",
        type=int,
        default=sequences.DEFAULT_ENUMERATION_LIMIT,
        help="largest n allowed with --n",
    )
    net.set_defaults(func=cmd_net)

    verify_ = sub.add_parser("verify", help="formula-vs-brute-force suites")
    verify_.add_argument("--max-n", type=int, default=10, dest="max_n")
    verify_.add_argument(
        "--paper-bracelet",
        action="store_true",
        help=argparse.SUPPRESS,  # swaps in the non-integral even/even branch
    )
    verify_.set_defaults(func=cmd_verify)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as error:
        sys.stderr.write(f"error: {error}\n")
        return USAGE_ERROR
    except ArithmeticError as error:
        sys.stderr.write(f"internal arithmetic failure: {error}\n")
        return 1


def main() -> None:
    sys.exit(run())
