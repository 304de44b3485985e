"""Root-level driver loops that converge on the minimax value.

Each driver repeatedly calls the table-backed alpha-beta at the root, choosing
the next probe point gamma from the bounds proven so far:

  * ab_sss   starts at +INF and walks the upper bound down,
  * ab_dual  starts at -INF and walks the lower bound up,
  * mtd_f    starts at a heuristic guess and zigzags until the bounds meet,
  * mtd_bi   bisects a caller-supplied interval.

``aspiration_negascout`` is the conventional depth-first counterpart used as
the benchmark baseline, and ``iterative_deepening`` wraps any of them.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, replace
from typing import NamedTuple

from .core import (INF, ResultClass, SearchError, SearchSpec, Window,
                   classify_result, null_window)
from .search import Searcher, SearchStats
from .ttable import TableStats, TranspositionTable

ALGORITHM_IDS = ("ab", "ab-tt", "negascout", "asp-negascout",
                 "ab-sss", "ab-dual", "mtd-f", "mtd-bi")

# Hard cap on root calls per driver run; every driver also checks strict
# progress each pass, so this only guards against unforeseen cycling.
MAX_PASSES = 10_000


class BoundStep(NamedTuple):
    """One root call: the probe point, the returned g, and its classification."""

    gamma: int
    g: int
    result: ResultClass


@dataclass
class DriverResult:
    value: int
    ab_calls: int
    bound_history: list[BoundStep]
    stats: SearchStats
    depth: int = 0
    table_stats: TableStats | None = None

    def __post_init__(self) -> None:
        if self.ab_calls != len(self.bound_history) or self.ab_calls < 1:
            raise ValueError("ab_calls must equal len(bound_history) >= 1")
        if self.bound_history[-1].g != self.value:
            raise ValueError("last bound_history entry must carry the final value")


def _fresh_searcher(spec: SearchSpec) -> Searcher:
    return Searcher(spec.adapter, TranspositionTable(spec.tt_bits))


def _result(searcher: Searcher, history: list[BoundStep], depth: int,
            started_ns: int) -> DriverResult:
    searcher.stats.elapsed_ns += time.perf_counter_ns() - started_ns
    table_stats = replace(searcher.table.stats) if searcher.table else TableStats()
    return DriverResult(history[-1].g, len(history), history,
                        searcher.stats.snapshot(), depth, table_stats)


def _probe(searcher: Searcher, pos, gamma: int, depth: int,
           history: list[BoundStep]) -> int:
    """One null-window root call at gamma, recorded in the history."""
    searcher.stats.ab_calls += 1
    g = searcher.mt_alphabeta(pos, gamma - 1, gamma, depth)
    history.append(BoundStep(gamma, g, classify_result(g, null_window(gamma))))
    return g


def ab_sss(spec: SearchSpec, searcher: Searcher | None = None) -> DriverResult:
    """Converge from above: a strictly decreasing run of upper bounds.

    Every pass but the last fails low; the final pass fails high exactly at
    gamma, which pins the minimax value.
    """
    searcher = searcher or _fresh_searcher(spec)
    pos = spec.adapter.root()
    started = time.perf_counter_ns()
    history: list[BoundStep] = []
    g = INF
    while True:
        gamma = g
        g = _probe(searcher, pos, gamma, spec.depth, history)
        if g == gamma:
            return _result(searcher, history, spec.depth, started)
        if g > gamma or len(history) >= MAX_PASSES:
            raise SearchError(
                f"ab-sss upper bound failed to decrease: gamma={gamma}, g={g} "
                f"after {len(history)} passes")


def ab_dual(spec: SearchSpec, searcher: Searcher | None = None) -> DriverResult:
    """Converge from below: the mirror of ab_sss, over lower bounds."""
    searcher = searcher or _fresh_searcher(spec)
    pos = spec.adapter.root()
    started = time.perf_counter_ns()
    history: list[BoundStep] = []
    g = -INF
    while True:
        gamma = g
        searcher.stats.ab_calls += 1
        g = searcher.mt_alphabeta(pos, gamma, gamma + 1, spec.depth)
        history.append(BoundStep(gamma, g, classify_result(g, Window(gamma, gamma + 1))))
        if g == gamma:
            return _result(searcher, history, spec.depth, started)
        if g < gamma or len(history) >= MAX_PASSES:
            raise SearchError(
                f"ab-dual lower bound failed to increase: gamma={gamma}, g={g} "
                f"after {len(history)} passes")


def mtd_f(spec: SearchSpec, guess: int = 0,
          searcher: Searcher | None = None) -> DriverResult:
    """Zigzag toward the minimax value from a first guess.

    Maintains proven bounds [lo, hi]; each pass probes just above the current
    g when g sits on the lower bound, at g otherwise, and must strictly
    shrink the interval.
    """
    if not -INF <= guess <= INF:
        raise ValueError(f"guess {guess} outside [-INF, INF]")
    searcher = searcher or _fresh_searcher(spec)
    pos = spec.adapter.root()
    started = time.perf_counter_ns()
    history: list[BoundStep] = []
    g = guess
    lo, hi = -INF, INF
    while True:
        gamma = g + 1 if g == lo else g
        if not lo < gamma <= hi:
            raise SearchError(f"mtd-f probe {gamma} escaped bounds [{lo}, {hi}]")
        g = _probe(searcher, pos, gamma, spec.depth, history)
        if g < gamma:
            if g >= hi:
                raise SearchError(f"mtd-f upper bound did not shrink: {g} >= {hi}")
            hi = g
        else:
            if g <= lo:
                raise SearchError(f"mtd-f lower bound did not shrink: {g} <= {lo}")
            lo = g
        if lo > hi:
            raise SearchError(f"mtd-f bounds crossed: [{lo}, {hi}]")
        if lo == hi:
            return _result(searcher, history, spec.depth, started)
        if len(history) >= MAX_PASSES:
            raise SearchError(f"mtd-f failed to converge in {len(history)} passes")


def mtd_bi(spec: SearchSpec, lo: int = -INF, hi: int = INF,
           searcher: Searcher | None = None) -> DriverResult:
    """Bisect a bracketing interval down to the minimax value.

    The caller promises lo <= value <= hi.  Needs at most about
    log2(hi - lo) + 2 passes; a degenerate interval still gets one
    confirming pass.
    """
    if lo > hi:
        raise ValueError(f"empty interval: lo={lo} > hi={hi}")
    searcher = searcher or _fresh_searcher(spec)
    pos = spec.adapter.root()
    started = time.perf_counter_ns()
    history: list[BoundStep] = []
    f_lo, f_hi = lo, hi
    while not history or f_lo < f_hi:
        if f_lo == f_hi:
            gamma = f_hi
        else:
            mid = -((-f_lo - f_hi) // 2)  # ceil((f_lo + f_hi) / 2)
            gamma = max(f_lo + 1, min(f_hi, mid))
        g = _probe(searcher, pos, gamma, spec.depth, history)
        if g < gamma:
            f_hi = g
        else:
            f_lo = g
        if f_lo > f_hi:
            raise SearchError(
                f"mtd-bi bounds crossed at [{f_lo}, {f_hi}]; the starting "
                f"interval [{lo}, {hi}] did not bracket the value")
        if len(history) >= MAX_PASSES:
            raise SearchError(f"mtd-bi failed to converge in {len(history)} passes")
    return _result(searcher, history, spec.depth, started)


def aspiration_negascout(spec: SearchSpec, prev: int, delta: int,
                         searcher: Searcher | None = None) -> DriverResult:
    """NegaScout inside a narrow window around an expected score.

    A fail low re-searches (-INF, g); a fail high re-searches (g, +INF).
    History entries record the window's pivot (the expected score first, then
    the failing bound).
    """
    if delta <= 0:
        raise ValueError(f"aspiration delta must be positive, got {delta}")
    searcher = searcher or _fresh_searcher(spec)
    pos = spec.adapter.root()
    started = time.perf_counter_ns()
    history: list[BoundStep] = []
    alpha = max(prev - delta, -INF)
    beta = min(prev + delta, INF)
    if alpha >= beta:  # expected score hugs a sentinel; keep the window legal
        alpha, beta = max(-INF, beta - 1), min(INF, alpha + 1)
    pivot = prev
    lo, hi = -INF, INF
    while True:
        searcher.stats.ab_calls += 1
        g = searcher.negascout(pos, alpha, beta, spec.depth)
        cls = classify_result(g, Window(alpha, beta))
        history.append(BoundStep(pivot, g, cls))
        if cls is ResultClass.EXACT:
            return _result(searcher, history, spec.depth, started)
        if cls is ResultClass.FAIL_LOW:
            if g < lo:
                raise SearchError(f"aspiration fail-low {g} below proven bound {lo}")
            hi = min(hi, g)
            alpha, beta = -INF, g
        else:
            if g > hi:
                raise SearchError(f"aspiration fail-high {g} above proven bound {hi}")
            lo = max(lo, g)
            alpha, beta = g, INF
        if lo == hi:
            return _result(searcher, history, spec.depth, started)
        pivot = g
        if len(history) >= MAX_PASSES:
            raise SearchError(f"aspiration search failed to settle in {len(history)} passes")


def _wide_call(spec: SearchSpec, searcher: Searcher, method: str) -> DriverResult:
    """One full-window call (ab / ab-tt / negascout), shaped like a driver run."""
    pos = spec.adapter.root()
    started = time.perf_counter_ns()
    searcher.stats.ab_calls += 1
    fn = getattr(searcher, method)
    g = fn(pos, -INF, INF, spec.depth)
    history = [BoundStep(g, g, classify_result(g, Window(-INF, INF)))]
    return _result(searcher, history, spec.depth, started)


def run_driver(algorithm_id: str, spec: SearchSpec,
               searcher: Searcher | None = None,
               guess: int | None = None,
               delta: int | None = None) -> DriverResult:
    """Run one algorithm at spec.depth.  ``guess`` seeds mtd-f and centers the
    aspiration window; ``delta`` overrides the adapter's aspiration width."""
    if algorithm_id not in ALGORITHM_IDS:
        raise ValueError(f"unknown algorithm id {algorithm_id!r}; "
                         f"expected one of {', '.join(ALGORITHM_IDS)}")
    if searcher is None:
        searcher = Searcher(spec.adapter,
                            None if algorithm_id == "ab" else TranspositionTable(spec.tt_bits))
    if algorithm_id == "ab":
        return _wide_call(spec, searcher, "plain_alphabeta")
    if algorithm_id == "ab-tt":
        return _wide_call(spec, searcher, "mt_alphabeta")
    if algorithm_id == "negascout":
        return _wide_call(spec, searcher, "negascout")
    if algorithm_id == "asp-negascout":
        if guess is None:
            return _wide_call(spec, searcher, "negascout")
        return aspiration_negascout(
            spec, guess, delta or max(1, spec.adapter.aspiration_delta), searcher)
    if algorithm_id == "ab-sss":
        return ab_sss(spec, searcher)
    if algorithm_id == "ab-dual":
        return ab_dual(spec, searcher)
    if algorithm_id == "mtd-f":
        return mtd_f(spec, 0 if guess is None else guess, searcher)
    return mtd_bi(spec, -INF, INF, searcher)


def iterative_deepening(algorithm_id: str, spec: SearchSpec,
                        max_depth: int) -> list[DriverResult]:
    """Run depths 1..max_depth over one shared table.

    mtd-f's guess and the aspiration center at depth d are the depth d-1
    value.  Stats in each per-depth result are cumulative over all completed
    iterations; ab_calls and bound_history are per-iteration.
    """
    if algorithm_id not in ALGORITHM_IDS:
        raise ValueError(f"unknown algorithm id {algorithm_id!r}; "
                         f"expected one of {', '.join(ALGORITHM_IDS)}")
    if max_depth < 1:
        raise ValueError(f"max_depth must be >= 1, got {max_depth}")
    table = None if algorithm_id == "ab" else TranspositionTable(spec.tt_bits)
    searcher = Searcher(spec.adapter, table)
    results: list[DriverResult] = []
    prev_value: int | None = None
    for depth in range(1, max_depth + 1):
        if depth > 1 and table is not None:
            table.new_generation()
        step = replace(spec, depth=depth)
        result = run_driver(algorithm_id, step, searcher, guess=prev_value)
        results.append(result)
        prev_value = result.value
    return results
