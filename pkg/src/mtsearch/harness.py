"""Experiment runner: iterative-deepening benchmarks, verify suites, CSV.

Benchmarks report every algorithm relative to aspiration NegaScout on the
same position and depth, using cumulative counters over all iterative-
deepening iterations.  The verify suites are the executable forms of this
lab's correctness claims; their failures are data, not exceptions.
"""
from __future__ import annotations

import csv
import random
from dataclasses import dataclass, field
from pathlib import Path

from .core import INF, SearchError, SearchSpec, Window, minimal_tree_leaves
from .drivers import ALGORITHM_IDS, DriverResult, iterative_deepening, mtd_f, run_driver
from .oracles import brute_minimax, stockman_sss, trace_capture
from .search import Searcher
from .ttable import TranspositionTable
from .domains.positions import PositionEntry, load_position_set
from .domains.synthetic import SyntheticTree, TreeConfig, ValueModel, gen_tree

BASELINE_ID = "asp-negascout"

VERIFY_SUITES = ("equivalence", "sss-order", "dominance", "minimal-tree",
                 "null-window", "mtd-exact-guess")

DEFAULT_VERIFY_SEED = 0x5EED


@dataclass(frozen=True)
class RunConfig:
    algorithms: tuple[str, ...]
    max_depth: int
    positions: str | Path
    tt_bits: int = 21
    seed: int = 1
    metric: str = "nbp"
    out: str | Path | None = None

    def __post_init__(self) -> None:
        if not self.algorithms:
            raise ValueError("at least one algorithm id is required")
        for algo in self.algorithms:
            if algo not in ALGORITHM_IDS:
                raise ValueError(f"unknown algorithm id {algo!r}")
        if self.max_depth < 1:
            raise ValueError(f"max_depth must be >= 1, got {self.max_depth}")
        if self.metric not in ("nbp", "total"):
            raise ValueError(f"metric must be 'nbp' or 'total', got {self.metric!r}")


@dataclass
class BenchRecord:
    domain: str
    position: str
    depth: int
    algorithm: str
    nbp_cumulative: int
    total_nodes_cumulative: int
    ab_calls: int
    tt_hits: int
    tt_stores: int
    tt_occupancy: int
    elapsed_ns: int
    ratio_vs_baseline: float


CSV_FIELDS = ("domain", "position", "depth", "algorithm", "nbp_cumulative",
              "total_nodes_cumulative", "ab_calls", "tt_hits", "tt_stores",
              "tt_occupancy", "elapsed_ns", "ratio_vs_baseline")


def _metric_of(result: DriverResult, metric: str) -> int:
    return result.stats.nbp if metric == "nbp" else result.stats.total_nodes


def run_bench(cfg: RunConfig,
              entries: list[PositionEntry] | None = None) -> list[BenchRecord]:
    """Benchmark every position x algorithm, iterative deepening to max_depth.

    Each algorithm gets a fresh table per position.  All algorithms must agree
    on the value at every depth; disagreement aborts the run, because records
    from an unsound search would be meaningless.
    """
    if entries is None:
        entries = load_position_set(cfg.positions)
    algos = list(dict.fromkeys(cfg.algorithms))
    if BASELINE_ID not in algos:
        algos.insert(0, BASELINE_ID)
    records: list[BenchRecord] = []
    for entry in entries:
        spec = SearchSpec(entry.adapter, cfg.max_depth, cfg.tt_bits)
        runs: dict[str, list[DriverResult]] = {}
        for algo in algos:
            runs[algo] = iterative_deepening(algo, spec, cfg.max_depth)
        for depth_idx in range(cfg.max_depth):
            values = {algo: runs[algo][depth_idx].value for algo in algos}
            if len(set(values.values())) != 1:
                raise SearchError(
                    f"value disagreement on {entry.label} at depth {depth_idx + 1}: "
                    + ", ".join(f"{a}={v}" for a, v in sorted(values.items())))
        base = runs[BASELINE_ID]
        for algo in algos:
            for result in runs[algo]:
                base_metric = _metric_of(base[result.depth - 1], cfg.metric)
                mine = _metric_of(result, cfg.metric)
                ts = result.table_stats
                records.append(BenchRecord(
                    domain=entry.domain,
                    position=entry.label,
                    depth=result.depth,
                    algorithm=algo,
                    nbp_cumulative=result.stats.nbp,
                    total_nodes_cumulative=result.stats.total_nodes,
                    ab_calls=result.ab_calls,
                    tt_hits=ts.hits,
                    tt_stores=ts.stores,
                    tt_occupancy=ts.occupancy,
                    elapsed_ns=result.stats.elapsed_ns,
                    ratio_vs_baseline=mine / base_metric if base_metric else 1.0,
                ))
    records.sort(key=lambda r: (r.position, r.algorithm, r.depth))
    return records


def emit_csv(records: list[BenchRecord], path: str | Path) -> None:
    """Header plus one row per record; ratios carry four decimals."""
    path = Path(path)
    try:
        with path.open("w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(CSV_FIELDS)
            for r in records:
                writer.writerow((r.domain, r.position, r.depth, r.algorithm,
                                 r.nbp_cumulative, r.total_nodes_cumulative,
                                 r.ab_calls, r.tt_hits, r.tt_stores,
                                 r.tt_occupancy, r.elapsed_ns,
                                 f"{r.ratio_vs_baseline:.4f}"))
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc


# ---------------------------------------------------------------------------
# Verify suites
# ---------------------------------------------------------------------------

@dataclass
class VerifyReport:
    suite: str
    checked: int
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        head = f"[{status}] {self.suite}: {self.checked} checks, " \
               f"{len(self.failures)} failures"
        lines = [head] + [f"  counterexample: {f}" for f in self.failures[:20]]
        lines += [f"  note: {n}" for n in self.notes]
        return "\n".join(lines)


def tt_bits_for(adapter: SyntheticTree) -> int:
    """Smallest table that cannot evict for this tree (ordinal-keyed slots)."""
    return min(28, max(4, (adapter.node_count() - 1).bit_length()))


def sample_tree_configs(seed: int, count: int,
                        widths: tuple[int, int] = (2, 5),
                        depths: tuple[int, int] = (2, 8),
                        models: tuple[ValueModel, ...] = (ValueModel.EDGE_DELTA,
                                                          ValueModel.IID_LEAF),
                        orderings: tuple[float, ...] = (0.5, 0.9, 1.0),
                        leaf_budget: int = 20_000) -> list[TreeConfig]:
    """Deterministic tree sample covering the full width/depth ranges.

    Width/depth pairs whose full tree exceeds ``leaf_budget`` are rejected so
    the exhaustive oracle stays affordable; every admissible width and depth
    still occurs.
    """
    rnd = random.Random(seed)
    configs: list[TreeConfig] = []
    while len(configs) < count:
        w = rnd.randint(*widths)
        d = rnd.randint(*depths)
        if w ** d > leaf_budget:
            continue
        configs.append(TreeConfig(
            width=w, depth=d, seed=rnd.getrandbits(48),
            value_model=models[len(configs) % len(models)],
            ordering_quality=rnd.choice(orderings),
            value_range=rnd.choice((25, 100)),
        ))
    return configs


def _verify_equivalence(seed: int, count: int) -> VerifyReport:
    report = VerifyReport("equivalence", 0)
    for cfg in sample_tree_configs(seed, count):
        adapter = gen_tree(cfg)
        expected = brute_minimax(adapter, adapter.root(), cfg.depth)
        spec = SearchSpec(adapter, cfg.depth, tt_bits_for(adapter))
        for algo in ALGORITHM_IDS:
            report.checked += 1
            try:
                got = run_driver(algo, spec).value
            except SearchError as exc:
                report.failures.append(f"{cfg.to_line()}: {algo} raised {exc}")
                continue
            if got != expected:
                report.failures.append(
                    f"{cfg.to_line()}: {algo} returned {got}, oracle {expected}")
    return report


def _verify_sss_order(seed: int, count: int) -> VerifyReport:
    report = VerifyReport("sss-order", 0)
    for cfg in sample_tree_configs(seed, count, widths=(2, 4), depths=(2, 6),
                                   leaf_budget=5_000):
        adapter = gen_tree(cfg)
        report.checked += 1
        reference = stockman_sss(adapter, adapter.root(), cfg.depth).leaf_trace
        spec = SearchSpec(adapter, cfg.depth, tt_bits_for(adapter))
        try:
            mine = trace_capture("ab-sss", spec)
        except SearchError as exc:
            report.failures.append(f"{cfg.to_line()}: {exc}")
            continue
        if mine != reference:
            at = next((i for i, (a, b) in enumerate(zip(mine, reference)) if a != b),
                      min(len(mine), len(reference)))
            report.failures.append(
                f"{cfg.to_line()}: traces diverge at leaf {at} "
                f"(lengths {len(mine)} vs {len(reference)})")
    return report


def _verify_dominance(seed: int, count: int) -> VerifyReport:
    report = VerifyReport("dominance", 0)
    for cfg in sample_tree_configs(seed, count, widths=(2, 4), depths=(2, 6),
                                   leaf_budget=5_000):
        adapter = gen_tree(cfg)
        report.checked += 1
        spec = SearchSpec(adapter, cfg.depth, tt_bits_for(adapter))
        sss_leaves = len(set(trace_capture("ab-sss", spec)))
        plain = Searcher(adapter)
        plain.plain_alphabeta(adapter.root(), -INF, INF, cfg.depth)
        if sss_leaves > plain.stats.nbp:
            report.failures.append(
                f"{cfg.to_line()}: ab-sss evaluated {sss_leaves} distinct leaves, "
                f"plain alpha-beta only {plain.stats.nbp}")
    return report


def _verify_minimal_tree(seed: int, count: int) -> VerifyReport:
    report = VerifyReport("minimal-tree", 0)
    for width in range(1, 5):
        for depth in range(0, 7):
            for model in (ValueModel.EDGE_DELTA, ValueModel.IID_LEAF):
                cfg = TreeConfig(width, depth, seed=seed + 31 * width + depth,
                                 value_model=model, ordering_quality=1.0)
                adapter = gen_tree(cfg)
                report.checked += 1
                searcher = Searcher(adapter)
                searcher.plain_alphabeta(adapter.root(), -INF, INF, depth)
                want = minimal_tree_leaves(width, depth)
                if searcher.stats.nbp != want:
                    report.failures.append(
                        f"{cfg.to_line()}: {searcher.stats.nbp} leaves, "
                        f"minimal tree has {want}")
    return report


def _verify_null_window(seed: int, count: int) -> VerifyReport:
    report = VerifyReport("null-window", 0)
    rnd = random.Random(seed ^ 0xAB)
    trees = sample_tree_configs(seed, max(1, count // 500), widths=(2, 4),
                                depths=(2, 5), leaf_budget=300)
    per_tree = -(-count // len(trees))
    for cfg in trees:
        adapter = gen_tree(cfg)
        truth = brute_minimax(adapter, adapter.root(), cfg.depth)
        searcher = Searcher(adapter, TranspositionTable(tt_bits_for(adapter)))
        spread = max(4, 2 * cfg.value_range)
        for _ in range(per_tree):
            if report.checked >= count:
                break
            gamma = truth + rnd.randint(-spread, spread)
            gamma = max(-INF + 1, min(INF, gamma))
            report.checked += 1
            g = searcher.mt_alphabeta(adapter.root(), gamma - 1, gamma, cfg.depth)
            if gamma - 1 < g < gamma:
                report.failures.append(
                    f"{cfg.to_line()}: null window at {gamma} returned EXACT {g}")
            elif g <= gamma - 1 and g < truth:
                report.failures.append(
                    f"{cfg.to_line()}: fail-low {g} below true value {truth}")
            elif g >= gamma and g > truth:
                report.failures.append(
                    f"{cfg.to_line()}: fail-high {g} above true value {truth}")
    return report


def _verify_mtd_exact_guess(seed: int, count: int) -> VerifyReport:
    report = VerifyReport("mtd-exact-guess", 0)
    for cfg in sample_tree_configs(seed, count):
        adapter = gen_tree(cfg)
        report.checked += 1
        truth = brute_minimax(adapter, adapter.root(), cfg.depth)
        spec = SearchSpec(adapter, cfg.depth, tt_bits_for(adapter))
        result = mtd_f(spec, guess=truth)
        if result.value != truth or result.ab_calls != 2:
            report.failures.append(
                f"{cfg.to_line()}: exact guess took {result.ab_calls} calls "
                f"for value {result.value} (oracle {truth})")
    return report


_SUITE_DEFAULTS = {
    "equivalence": (_verify_equivalence, 1000),
    "sss-order": (_verify_sss_order, 200),
    "dominance": (_verify_dominance, 200),
    "minimal-tree": (_verify_minimal_tree, 0),   # fixed grid, count unused
    "null-window": (_verify_null_window, 100_000),
    "mtd-exact-guess": (_verify_mtd_exact_guess, 100),
}


def run_verify(suite: str, seed: int = DEFAULT_VERIFY_SEED,
               count: int | None = None) -> VerifyReport:
    """Run one property suite with fixed seeds; failures come back as data."""
    if suite not in _SUITE_DEFAULTS:
        raise ValueError(f"unknown suite {suite!r}; "
                         f"expected one of {', '.join(VERIFY_SUITES)}")
    fn, default_count = _SUITE_DEFAULTS[suite]
    return fn(seed, count if count is not None else default_count)
