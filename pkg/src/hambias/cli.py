"""Command line interface.

Subcommands: gen (instances), solve (biased Hamilton cycle), verify (check a
claimed solution), enumerate (exhaustive landscape at desk scale). Output is
text or JSON only.

Exit codes:
  0  success
  1  verification failed
  2  usage, parameter, or input format error
  3  degree hypothesis not satisfied
  4  best-effort search failed (permissive mode)
  5  internal guarantee violation
  6  instance too large for exhaustive enumeration
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from .errors import (
    BestEffortFailedError,
    BiasGuaranteeError,
    DegreeHypothesisError,
    EnumerationSizeError,
    GraphFormatError,
    InfeasibilityError,
    InternalInvariantError,
)
from .extremal import build_layered, build_turan3
from .fileio import (
    dumps_coloured_graph,
    read_coloured_graph,
    read_cycle,
    write_coloured_graph,
    write_cycle,
)
from .instances import random_complete, random_min_degree
from .oracle import DEFAULT_ENUMERATION_LIMIT, bias_landscape, verify_solution
from .switching import solve_unbalanced

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_HYPOTHESIS = 3
EXIT_BEST_EFFORT = 4
EXIT_GUARANTEE = 5
EXIT_TOO_LARGE = 6


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hambias",
        description="Colour-biased Hamilton cycles: generate, solve, verify, enumerate.",
        epilog=(
            "exit codes: 0 ok, 1 verification failed, 2 usage/format error, "
            "3 degree hypothesis not satisfied, 4 best-effort failure, "
            "5 internal guarantee violation, 6 enumeration size guard"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate an instance file")
    gen.add_argument(
        "kind",
        choices=["layered", "turan3", "random-complete", "random-dirac"],
        help="instance family",
    )
    gen.add_argument("--n", type=int, required=True, help="number of vertices")
    gen.add_argument("--r", type=int, help="number of colours")
    gen.add_argument("--seed", type=int, help="seed (required for random families)")
    gen.add_argument("--min-degree", type=int, help="degree target for random-dirac")
    gen.add_argument("--output", default="-", help="output path, '-' for stdout")

    solve = sub.add_parser("solve", help="find a d-unbalanced Hamilton cycle")
    solve.add_argument("--input", required=True, help="coloured graph file")
    solve.add_argument("--d", type=int, required=True, help="required bias above n/r")
    solve.add_argument("--mode", choices=["strict", "permissive"], default="strict")
    solve.add_argument("--seed", type=int, default=0)
    solve.add_argument("--format", choices=["text", "json"], default="text")
    solve.add_argument("--cycle-out", help="also write the cycle to this path")

    verify = sub.add_parser("verify", help="check a claimed solution")
    verify.add_argument("--input", required=True, help="coloured graph file")
    verify.add_argument("--cycle", required=True, help="cycle file")
    verify.add_argument("--d", type=int, default=0, help="required bias (default 0)")

    enum = sub.add_parser("enumerate", help="exhaustive Hamilton cycle landscape")
    enum.add_argument("--input", required=True, help="coloured graph file")
    enum.add_argument("--limit", type=int, default=DEFAULT_ENUMERATION_LIMIT)
    enum.add_argument("--format", choices=["text", "json"], default="text")

    return parser


def _emit(record: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(record, indent=2))
    else:
        for key, value in record.items():
            if isinstance(value, (list, tuple)):
                value = " ".join(str(x) for x in value)
            print(f"{key}: {value}")


def _sha256(path: str) -> str:
    with open(path, "rb") as fh:
        return "sha256:" + hashlib.sha256(fh.read()).hexdigest()


def _cmd_gen(args) -> int:
    try:
        if args.kind == "layered":
            if args.r is None:
                raise ValueError("layered needs --r")
            g, col = build_layered(args.r, args.n)
        elif args.kind == "turan3":
            g, col = build_turan3(args.n)
        elif args.kind == "random-complete":
            if args.r is None or args.seed is None:
                raise ValueError("random-complete needs --r and --seed")
            g, col = random_complete(args.n, args.r, args.seed)
        else:  # random-dirac
            if args.r is None or args.seed is None:
                raise ValueError("random-dirac needs --r and --seed")
            target = args.min_degree if args.min_degree is not None else -(-args.n // 2)
            g, col = random_min_degree(args.n, target, args.r, args.seed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.output == "-":
        sys.stdout.write(dumps_coloured_graph(g, col))
    else:
        write_coloured_graph(args.output, g, col)
    return EXIT_OK


def _cmd_solve(args) -> int:
    if args.d < 1:
        print("error: --d must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        g, col = read_coloured_graph(args.input)
    except (OSError, GraphFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    record = {
        "status": "ok",
        "input": _sha256(args.input),
        "n": g.n,
        "r": col.r,
        "d": args.d,
        "mode": args.mode,
        "seed": args.seed,
    }
    start = time.perf_counter()
    try:
        outcome = solve_unbalanced(g, col, args.d, mode=args.mode, seed=args.seed)
    except DegreeHypothesisError as exc:
        record.update(status="hypothesis-error", error=str(exc))
        record["wall_time_ms"] = round((time.perf_counter() - start) * 1000, 3)
        _emit(record, args.format)
        return EXIT_HYPOTHESIS
    except BestEffortFailedError as exc:
        record.update(status="best-effort-failed", error=str(exc))
        if exc.best_cycle is not None:
            record["best_counts"] = list(exc.counts)
            record["best_cycle"] = list(exc.best_cycle.order)
        record["wall_time_ms"] = round((time.perf_counter() - start) * 1000, 3)
        _emit(record, args.format)
        return EXIT_BEST_EFFORT
    except (BiasGuaranteeError, InfeasibilityError, InternalInvariantError) as exc:
        record.update(status="guarantee-error", error=str(exc))
        record["wall_time_ms"] = round((time.perf_counter() - start) * 1000, 3)
        _emit(record, args.format)
        return EXIT_GUARANTEE
    wall = round((time.perf_counter() - start) * 1000, 3)
    record.update(
        witness_colour=outcome.witness_colour,
        bias=outcome.bias,
        counts=list(outcome.counts),
        early_exit=outcome.early_exit,
        star_colour=outcome.star_colour,
        switch_gap=outcome.switch_gap,
        steps=outcome.steps,
        wall_time_ms=wall,
        cycle=list(outcome.cycle.order),
    )
    if args.cycle_out:
        write_cycle(args.cycle_out, outcome.cycle.order)
    _emit(record, args.format)
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.d < 0:
        print("error: --d must be non-negative", file=sys.stderr)
        return EXIT_USAGE
    try:
        g, col = read_coloured_graph(args.input)
        order = read_cycle(args.cycle)
    except (OSError, GraphFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    result = verify_solution(g, col, order, args.d)
    if result.ok:
        counts = " ".join(str(c) for c in result.counts)
        print(f"ok: Hamilton cycle with counts {counts} meets bias d={args.d}")
        return EXIT_OK
    print(f"FAIL: {result.reason}")
    return EXIT_VERIFY_FAILED


def _cmd_enumerate(args) -> int:
    try:
        g, col = read_coloured_graph(args.input)
    except (OSError, GraphFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        result = bias_landscape(g, col, limit=args.limit)
    except EnumerationSizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    if args.format == "json":
        print(
            json.dumps(
                {
                    "n": result.n,
                    "r": result.r,
                    "hamiltonian": result.hamiltonian,
                    "cycle_count": result.cycle_count,
                    "max_count": result.max_count,
                    "vectors": [list(v) for v in result.vectors],
                },
                indent=2,
            )
        )
        return EXIT_OK
    print(f"n: {result.n}")
    print(f"r: {result.r}")
    print(f"hamiltonian: {result.hamiltonian}")
    print(f"cycle_count: {result.cycle_count}")
    print(f"max_count: {result.max_count}")
    print(f"vectors: {len(result.vectors)}")
    for vec in result.vectors:
        print(" ".join(str(c) for c in vec))
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "gen":
        return _cmd_gen(args)
    if args.command == "solve":
        return _cmd_solve(args)
    if args.command == "verify":
        return _cmd_verify(args)
    return _cmd_enumerate(args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
