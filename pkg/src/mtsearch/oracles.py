"""Independent reference implementations, used only to check the real search.

``brute_minimax`` enumerates everything with no pruning; ``stockman_sss`` is
the original sorted-OPEN-list best-first algorithm, kept deliberately simple.
Neither shares code with the production search paths.
"""
from __future__ import annotations

import enum
import heapq
from dataclasses import dataclass

from .core import (INF, BudgetExceededError, GameAdapter, Position,
                   SearchError, SearchSpec)
from .search import LeafTrace, Searcher
from .ttable import TranspositionTable

DEFAULT_NODE_BUDGET = 10_000_000


def brute_minimax(adapter: GameAdapter, pos: Position, depth: int,
                  node_budget: int = DEFAULT_NODE_BUDGET) -> int:
    """Exact negamax value by full enumeration (mover's perspective)."""
    budget = [node_budget]

    def walk(p: Position, d: int) -> int:
        budget[0] -= 1
        if budget[0] < 0:
            raise BudgetExceededError(
                f"brute_minimax exceeded its {node_budget}-node budget")
        if adapter.is_terminal(p, d):
            return adapter.evaluate(p)
        return max(-walk(child, d - 1) for child in adapter.successors(p))

    return walk(pos, depth)


class _Status(enum.Enum):
    LIVE = "live"
    SOLVED = "solved"


@dataclass
class OracleResult:
    value: int
    leaf_trace: LeafTrace


class _OpenList:
    """Max-merit priority list; ties pop the leftmost node in preorder.

    Leftmost means lexicographic on child-index paths, matching the
    left-to-right scan of the alpha-beta side.  One item per node path.  A
    heap with lazy invalidation keeps pops cheap; ``purge`` drops every item
    underneath a subtree root.
    """

    def __init__(self) -> None:
        self._heap: list[tuple[int, tuple[int, ...]]] = []
        self._items: dict[tuple[int, ...], tuple[_Status, int]] = {}

    def insert(self, path: tuple[int, ...], status: _Status, merit: int) -> None:
        self._items[path] = (status, merit)
        heapq.heappush(self._heap, (-merit, path))

    def pop(self) -> tuple[tuple[int, ...], _Status, int]:
        while self._heap:
            neg_merit, path = heapq.heappop(self._heap)
            current = self._items.get(path)
            if current is not None and current[1] == -neg_merit:
                del self._items[path]
                return path, current[0], -neg_merit
        raise SearchError("OPEN list ran dry before the root was solved")

    def purge(self, path: tuple[int, ...]) -> None:
        """Drop all items strictly below ``path``."""
        n = len(path)
        doomed = [p for p in self._items if len(p) > n and p[:n] == path]
        for p in doomed:
            del self._items[p]


def stockman_sss(adapter: GameAdapter, pos: Position, depth: int,
                 node_budget: int = DEFAULT_NODE_BUDGET) -> OracleResult:
    """Best-first minimax by OPEN-list refinement of max solution trees.

    Works on transposition-free trees with the root as the maximizing side.
    The operator, per popped (node, status, merit) item:

      * LIVE leaf: evaluate, reinsert SOLVED at min(merit, eval).
      * LIVE max node: insert every child LIVE at the same merit (the
        alternatives compete in the list).
      * LIVE min node: insert the first child LIVE at the same merit.
      * SOLVED root: done, merit is the minimax value.
      * SOLVED child of a min node with a brother left: insert the next
        brother LIVE at the solved merit.
      * SOLVED last child of a min node: the parent is solved at that merit.
      * SOLVED child of a max node: popping it means no alternative in the
        list can beat it, so the parent is solved at its merit; every item
        under the parent is purged.
    """
    trace: LeafTrace = []
    budget = node_budget
    # Each node's children are fetched from the adapter exactly once and kept
    # by path, so items in the OPEN list resolve to positions in O(1).
    children_of: dict[tuple[int, ...], list[Position]] = {}
    positions: dict[tuple[int, ...], Position] = {(): pos}

    def expand(path: tuple[int, ...]) -> list[Position]:
        kids = children_of.get(path)
        if kids is None:
            kids = list(adapter.successors(positions[path]))
            if not kids:
                raise SearchError("non-terminal position has no successors")
            children_of[path] = kids
            for i, child in enumerate(kids):
                positions[path + (i,)] = child
        return kids

    open_list = _OpenList()
    open_list.insert((), _Status.LIVE, INF)
    while True:
        budget -= 1
        if budget < 0:
            raise BudgetExceededError(
                f"stockman_sss exceeded its {node_budget}-item budget")
        path, status, merit = open_list.pop()
        remaining = depth - len(path)
        is_max = len(path) % 2 == 0

        if status is _Status.LIVE:
            node = positions[path]
            if adapter.is_terminal(node, remaining):
                value = adapter.evaluate(node)
                if not is_max:
                    value = -value  # oracle merits live in root perspective
                trace.append(adapter.key(node))
                open_list.insert(path, _Status.SOLVED, min(merit, value))
            elif is_max:
                for i in range(len(expand(path))):
                    open_list.insert(path + (i,), _Status.LIVE, merit)
            else:
                expand(path)
                open_list.insert(path + (0,), _Status.LIVE, merit)
            continue

        # SOLVED cases
        if not path:
            return OracleResult(merit, trace)
        parent = path[:-1]
        parent_is_max = len(parent) % 2 == 0
        if parent_is_max:
            open_list.purge(parent)
            open_list.insert(parent, _Status.SOLVED, merit)
        else:
            brother = path[-1] + 1
            if brother < len(children_of[parent]):
                open_list.insert(parent + (brother,), _Status.LIVE, merit)
            else:
                open_list.insert(parent, _Status.SOLVED, merit)


def trace_capture(algorithm_id: str, spec: SearchSpec) -> LeafTrace:
    """Leaf-evaluation order of a full driver run on a fresh table.

    Fails loudly if the table evicts during the run: the order comparison is
    only meaningful when every stored bound survives.
    """
    from .drivers import run_driver  # deferred: drivers import search too

    trace: LeafTrace = []
    table = None if algorithm_id == "ab" else TranspositionTable(spec.tt_bits)
    searcher = Searcher(spec.adapter, table, trace=trace)
    run_driver(algorithm_id, spec, searcher)
    if table is not None and table.stats.overwrites:
        raise SearchError(
            f"table evicted {table.stats.overwrites} entries during capture; "
            f"raise tt_bits above {spec.tt_bits}")
    return trace
