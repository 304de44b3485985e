"""mtsearch: a minimax game-tree search laboratory.

Null-window alpha-beta over a transposition table is the single building
block; the drivers (ab-sss, ab-dual, mtd-f, mtd-bi) differ only in how they
pick the next probe point.  Oracles, domains and a benchmark harness make the
equivalence and performance claims checkable.
"""
from .core import (INF, BoundPair, BudgetExceededError, GameAdapter,
                   ResultClass, SearchError, SearchSpec, Value, Window,
                   classify_result, minimal_tree_leaves, null_window)
from .drivers import (ALGORITHM_IDS, BoundStep, DriverResult, ab_dual, ab_sss,
                      aspiration_negascout, iterative_deepening, mtd_bi, mtd_f,
                      run_driver)
from .harness import (BASELINE_ID, BenchRecord, RunConfig, VerifyReport,
                      emit_csv, run_bench, run_verify)
from .oracles import OracleResult, brute_minimax, stockman_sss, trace_capture
from .search import (LeafTrace, Searcher, SearchStats, mt_alphabeta, negascout,
                     plain_alphabeta)
from .ttable import TableStats, TranspositionTable, TTEntry

__version__ = "0.1.0"

__all__ = [
    "INF", "BoundPair", "BudgetExceededError", "GameAdapter", "ResultClass",
    "SearchError", "SearchSpec", "Value", "Window", "classify_result",
    "minimal_tree_leaves", "null_window",
    "ALGORITHM_IDS", "BoundStep", "DriverResult", "ab_dual", "ab_sss",
    "aspiration_negascout", "iterative_deepening", "mtd_bi", "mtd_f",
    "run_driver",
    "BASELINE_ID", "BenchRecord", "RunConfig", "VerifyReport", "emit_csv",
    "run_bench", "run_verify",
    "OracleResult", "brute_minimax", "stockman_sss", "trace_capture",
    "LeafTrace", "Searcher", "SearchStats", "mt_alphabeta", "negascout",
    "plain_alphabeta",
    "TableStats", "TranspositionTable", "TTEntry",
    "__version__",
]
