"""Command-line interface.

Subcommands: count, list, seq, compare, termcount, verify.

Exit codes are part of the contract for scripting: 0 ok, 2 bad usage or
input, 3 internal integrality-assertion failure, 4 engine disagreement
(compare), 5 verification mismatch (verify).
"""

import argparse
import json
import sys
import time
from typing import Callable, NamedTuple

from . import engines
from .arith import factorize
from .errors import IntegralityError
from .lattice import to_signature
from .partitions import PartitionTable

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INTERNAL = 3
EXIT_DISAGREE = 4
EXIT_MISMATCH = 5

DEFAULT_MAX_N = 2**64 - 1

ENGINE_NAMES = ("auto", "brute", "hs", "reduced", "gf")


class BFileRecord(NamedTuple):
    """One "index value" line of an OEIS-style b-file."""

    index: int
    value: int


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_INPUT


def _check_n(n: int, max_n: int, least: int = 1) -> str | None:
    if n < least:
        return f"n must be >= {least}, got {n}"
    if n > max_n:
        return f"n={n} exceeds the input cap {max_n} (raise it with --max-n)"
    return None


def _single_count(n: int, engine: str) -> int:
    if engine == "auto":
        return engines.count(n)
    if engine == "brute":
        return engines.brute_force_count(n)
    sig = to_signature(factorize(n))
    if engine == "hs":
        return engines.hs_count(sig)
    if engine == "reduced":
        return engines.reduced_count(sig)
    if engine == "gf":
        return engines.gf_count(sig)
    raise ValueError(f"unknown engine {engine!r}")


def cmd_count(args) -> int:
    problem = _check_n(args.n, args.max_n)
    if problem:
        return _fail(problem)
    print(_single_count(args.n, args.engine))
    return EXIT_OK


def cmd_list(args) -> int:
    problem = _check_n(args.n, args.max_n)
    if problem:
        return _fail(problem)
    if args.n == 1:
        print("1 (empty product)")
        return EXIT_OK
    for factors in engines.brute_force_list(args.n):
        print(".".join(map(str, factors)))
    return EXIT_OK


def cmd_seq(args) -> int:
    problem = _check_n(args.n_max, args.max_n)
    if problem:
        return _fail(problem)
    cache = engines.new_cache()
    ptable = PartitionTable()
    for n in range(1, args.n_max + 1):
        value = engines.count(n, cache, ptable)
        if args.format == "plain":
            print(value)
        elif args.format == "bfile":
            print(f"{n} {value}")
        else:
            print(json.dumps({"n": n, "pstar": value}))
    return EXIT_OK


def default_compare_engines() -> list[tuple[str, Callable[[int], int]]]:
    """The four counting routes, each with its own fresh cache."""
    brute = engines.brute_force_count

    hs_cache = engines.new_cache()

    def hs(n: int) -> int:
        return engines.hs_count(to_signature(factorize(n)), hs_cache)

    red_cache, red_ptable = engines.new_cache(), PartitionTable()

    def reduced(n: int) -> int:
        return engines.reduced_count(to_signature(factorize(n)), red_cache, red_ptable)

    gf_ptable = PartitionTable()

    def gf(n: int) -> int:
        return engines.gf_count(to_signature(factorize(n)), gf_ptable)

    return [("brute", brute), ("hs", hs), ("reduced", reduced), ("gf", gf)]


def run_compare(n_max, engine_list=None, show_timing=True, out=print) -> int:
    """Run every engine over 1..n_max and report the first disagreement."""
    if engine_list is None:
        engine_list = default_compare_engines()
    columns = []
    for name, fn in engine_list:
        start = time.perf_counter()
        values = [fn(n) for n in range(1, n_max + 1)]
        elapsed = time.perf_counter() - start
        line = f"engine={name} total={sum(values)}"
        if show_timing:
            line += f" time={elapsed:.3f}s"
        out(line)
        columns.append((name, values))
    for i in range(n_max):
        seen = {values[i] for _, values in columns}
        if len(seen) > 1:
            detail = " ".join(f"{name}={values[i]}" for name, values in columns)
            out(f"DISAGREE at n={i + 1}: {detail}")
            return EXIT_DISAGREE
    out(f"OK {n_max}/{n_max} agree")
    return EXIT_OK


def cmd_compare(args) -> int:
    if args.n_max < 1:
        return _fail(f"n_max must be >= 1, got {args.n_max}")
    return run_compare(args.n_max, show_timing=not args.no_timing)


def cmd_termcount(args) -> int:
    problem = _check_n(args.n, args.max_n, least=2)
    if problem:
        return _fail(problem)
    sig = to_signature(factorize(args.n))
    counts = engines.term_count(sig)
    measured = counts.hs_terms - counts.reduced_terms
    claimed = engines.claimed_saving(sig)
    print(f"signature={list(sig)}")
    print(f"hs_terms={counts.hs_terms}")
    print(f"reduced_terms={counts.reduced_terms}")
    print(f"measured_diff={measured}")
    print(f"claimed_diff={claimed}")
    if measured != claimed:
        print(
            f"MISMATCH: measured_diff={measured} != claimed_diff={claimed} "
            f"(off by {claimed - measured})"
        )
    return EXIT_OK


def parse_bfile(lines) -> list[BFileRecord]:
    """Parse b-file text: "index value" per line, '#' comments, blanks skipped.

    Raises ValueError (message prefixed with the 1-based line number) on
    anything else, including non-increasing indices.
    """
    records: list[BFileRecord] = []
    last = None
    for lineno, raw in enumerate(lines, 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'index value', got {raw!r}")
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(
                f"line {lineno}: expected 'index value', got {raw!r}"
            ) from None
        if index < 0 or value < 0:
            raise ValueError(f"line {lineno}: negative entry in {raw!r}")
        if last is not None and index <= last:
            raise ValueError(
                f"line {lineno}: index {index} not greater than previous {last}"
            )
        last = index
        records.append(BFileRecord(index, value))
    return records


def cmd_verify(args) -> int:
    try:
        with open(args.bfile, encoding="ascii") as fh:
            records = parse_bfile(fh)
    except OSError as exc:
        return _fail(str(exc))
    except ValueError as exc:
        return _fail(str(exc))

    cache = engines.new_cache()
    ptable = PartitionTable()
    checked = 0
    for index, value in records:
        if args.limit is not None and index > args.limit:
            continue
        if index < 1:
            return _fail(f"index {index} is outside the sequence domain (n >= 1)")
        computed = engines.count(index, cache, ptable)
        if computed != value:
            print(f"MISMATCH at n={index}: expected {value}, computed {computed}")
            return EXIT_MISMATCH
        checked += 1
    if checked == 0:
        print("warning: no records verified", file=sys.stderr)
    print(f"OK {checked} terms verified")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multipartitions",
        description="Count and enumerate unordered factorizations "
        "(multiplicative partitions, OEIS A001055).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_max_n(p):
        p.add_argument(
            "--max-n",
            type=int,
            default=DEFAULT_MAX_N,
            help="input cap for n (default 2**64 - 1)",
        )

    p = sub.add_parser("count", help="print the number of factorizations of n")
    p.add_argument("n", type=int)
    p.add_argument("--engine", choices=ENGINE_NAMES, default="auto")
    add_max_n(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("list", help="print every factorization of n, one per line")
    p.add_argument("n", type=int)
    add_max_n(p)
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("seq", help="print counts for n = 1..n_max")
    p.add_argument("n_max", type=int)
    p.add_argument("--format", choices=("plain", "bfile", "jsonl"), default="plain")
    add_max_n(p)
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("compare", help="run all four engines over 1..n_max")
    p.add_argument("n_max", type=int)
    p.add_argument("--no-timing", action="store_true", help="omit timing fields")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("termcount", help="recurrence summand counts for n")
    p.add_argument("n", type=int)
    add_max_n(p)
    p.set_defaults(func=cmd_termcount)

    p = sub.add_parser("verify", help="cross-check counts against a b-file")
    p.add_argument("bfile", help="path to an OEIS-style b-file")
    p.add_argument("--limit", type=int, default=None, help="verify indices <= limit")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except IntegralityError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ValueError as exc:
        return _fail(str(exc))


def entry() -> None:
    sys.exit(main())
