"""Command line front end.

Exit codes: 0 success / suites pass, 1 verification failure, 2 usage error
(argparse's own), 3 internal soundness failure.
"""
from __future__ import annotations

import argparse
import sys

from .core import SearchError, SearchSpec
from .drivers import ALGORITHM_IDS, iterative_deepening
from .harness import (BASELINE_ID, DEFAULT_VERIFY_SEED, RunConfig,
                      VERIFY_SUITES, emit_csv, run_bench, run_verify)
from .domains.positions import append_record, parse_record


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mtsearch",
        description="Minimax search lab: benchmark and verify null-window "
                    "alpha-beta drivers against their baselines and oracles.")
    sub = parser.add_subparsers(dest="command", required=True)

    bench = sub.add_parser("bench", help="iterative-deepening benchmark to CSV")
    bench.add_argument("--positions", required=True, help="position-set file")
    bench.add_argument("--algos", default=",".join(ALGORITHM_IDS),
                       help="comma-separated algorithm ids "
                            f"(default: all; baseline {BASELINE_ID} always runs)")
    bench.add_argument("--depth", type=int, default=8)
    bench.add_argument("--tt-bits", type=int, default=21)
    bench.add_argument("--seed", type=int, default=1)
    bench.add_argument("--metric", choices=("nbp", "total"), default="nbp")
    bench.add_argument("--out", required=True, help="output CSV path")

    verify = sub.add_parser("verify", help="run one property suite")
    verify.add_argument("--suite", required=True, choices=VERIFY_SUITES)
    verify.add_argument("--seed", type=int, default=DEFAULT_VERIFY_SEED)
    verify.add_argument("--count", type=int, default=None,
                        help="override the suite's default case count")

    gen = sub.add_parser("gen", help="append a synthetic tree to a position set")
    gen.add_argument("--width", type=int, required=True)
    gen.add_argument("--depth", type=int, required=True)
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--p", type=float, default=1.0, dest="ordering")
    gen.add_argument("--model", choices=("iid", "edge"), default="edge")
    gen.add_argument("--range", type=int, default=100, dest="value_range")
    gen.add_argument("--out", required=True, help="position-set file to append to")

    analyze = sub.add_parser("analyze", help="run one algorithm on one position")
    analyze.add_argument("--position", required=True,
                         help="a position-set record, e.g. "
                              "'synthetic w=3 d=4 seed=7 p=1 model=edge range=100'")
    analyze.add_argument("--algo", required=True, choices=ALGORITHM_IDS)
    analyze.add_argument("--depth", type=int, required=True)
    analyze.add_argument("--tt-bits", type=int, default=21)
    return parser


def _cmd_bench(args: argparse.Namespace) -> int:
    algos = tuple(a.strip() for a in args.algos.split(",") if a.strip())
    cfg = RunConfig(algorithms=algos, max_depth=args.depth,
                    positions=args.positions, tt_bits=args.tt_bits,
                    seed=args.seed, metric=args.metric, out=args.out)
    records = run_bench(cfg)
    emit_csv(records, args.out)
    print(f"{len(records)} records -> {args.out}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    report = run_verify(args.suite, seed=args.seed, count=args.count)
    print(report.summary())
    return 0 if report.passed else 1


def _cmd_gen(args: argparse.Namespace) -> int:
    line = (f"synthetic w={args.width} d={args.depth} seed={args.seed} "
            f"p={args.ordering:g} model={args.model} range={args.value_range}")
    append_record(args.out, line)
    print(f"appended to {args.out}: {line}")
    return 0


def _cmd_analyze(args: argparse.Namespace) -> int:
    entry = parse_record(args.position)
    spec = SearchSpec(entry.adapter, args.depth, args.tt_bits)
    results = iterative_deepening(args.algo, spec, args.depth)
    final = results[-1]
    print(f"position   {entry.line}")
    print(f"algorithm  {args.algo}, iterative deepening to depth {args.depth}")
    print(f"value      {final.value}")
    for r in results:
        steps = " ".join(f"({s.gamma},{s.g},{s.result.value})"
                         for s in r.bound_history)
        print(f"  depth {r.depth}: value {r.value}, {r.ab_calls} root calls: {steps}")
    stats = final.stats
    print(f"stats      nbp={stats.nbp} total_nodes={stats.total_nodes} "
          f"tt_cutoffs={stats.tt_cutoffs} ab_calls={stats.ab_calls} "
          f"elapsed_ms={stats.elapsed_ns / 1e6:.1f}")
    ts = final.table_stats
    if ts is not None:
        print(f"table      hits={ts.hits} stores={ts.stores} "
              f"overwrites={ts.overwrites} occupancy={ts.occupancy}")
    return 0


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {"bench": _cmd_bench, "verify": _cmd_verify,
                "gen": _cmd_gen, "analyze": _cmd_analyze}
    try:
        return handlers[args.command](args)
    except SearchError as exc:
        print(f"soundness failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
