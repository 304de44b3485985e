"""Node-expanding search: table-backed alpha-beta, plain alpha-beta, NegaScout.

All three are fail-soft negamax.  The table-backed variant consults the
transposition table before expanding a node and saves the proven bound
afterwards; plain alpha-beta keeps no memory at all and serves as the
dominance baseline.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

from .core import INF, GameAdapter, Position, SearchError, SearchSpec, Window
from .ttable import GAME_OVER_DEPTH, TranspositionTable

LeafTrace = list[int]  # keys of positions, in evaluate() call order


@dataclass
class SearchStats:
    """Work counters for one search instance.

    ``nbp`` counts leaf evaluations (bottom positions); ``total_nodes`` counts
    every node visit, including visits answered by a table cutoff.
    """

    nbp: int = 0
    total_nodes: int = 0
    tt_cutoffs: int = 0
    ab_calls: int = 0
    elapsed_ns: int = 0

    def snapshot(self) -> "SearchStats":
        return replace(self)


class Searcher:
    """One (adapter, table, stats) bundle; single-threaded.

    Drivers keep a Searcher alive across calls so every pass shares the same
    table and counters.  Passing ``trace`` records the key of each position
    evaluated, in call order.
    """

    def __init__(self, adapter: GameAdapter,
                 table: TranspositionTable | None = None,
                 stats: SearchStats | None = None,
                 trace: LeafTrace | None = None):
        self.adapter = adapter
        self.table = table
        self.stats = stats if stats is not None else SearchStats()
        self.trace = trace

    # -- leaf handling ------------------------------------------------------

    def _eval_leaf(self, pos: Position) -> int:
        value = self.adapter.evaluate(pos)
        if not -INF < value < INF:
            raise SearchError(f"adapter evaluation {value} outside (-INF, INF)")
        self.stats.nbp += 1
        if self.trace is not None:
            self.trace.append(self.adapter.key(pos))
        return value

    # -- table-backed alpha-beta --------------------------------------------

    def mt_alphabeta(self, pos: Position, alpha: int, beta: int, depth: int) -> int:
        if alpha >= beta:
            raise ValueError(f"invalid window: alpha={alpha} >= beta={beta}")
        if depth < 0:
            raise ValueError(f"negative depth {depth}")
        if self.table is None:
            raise ValueError("mt_alphabeta needs a transposition table")
        return self._mt(pos, alpha, beta, depth)

    def _mt(self, pos: Position, alpha: int, beta: int, depth: int) -> int:
        stats = self.stats
        stats.total_nodes += 1
        adapter = self.adapter
        table = self.table
        key = adapter.key(pos)

        entry = table.retrieve(key, depth)
        if entry is not None:
            hi = entry.hi
            lo = entry.lo
            if hi <= alpha or hi == lo:
                stats.tt_cutoffs += 1
                return hi
            if lo >= beta:
                stats.tt_cutoffs += 1
                return lo

        if adapter.is_terminal(pos, depth):
            g = self._eval_leaf(pos)
            # A genuine game end (depth > 0) is exact at every depth.
            table.store(key, GAME_OVER_DEPTH if depth > 0 else 0, g, g, None)
            return g

        children = adapter.successors(pos)
        if not children:
            raise SearchError("non-terminal position has no successors")
        order = self._ordering(key, entry, len(children))

        g = -INF
        a = alpha
        best = order[0]
        child_depth = depth - 1
        for i in order:
            if g >= beta:
                break
            v = -self._mt(children[i], -beta, -a, child_depth)
            if v > g:
                g = v
                best = i
            if g > a:
                a = g

        if g <= alpha:
            # Fail low: no move proved best, so none is suggested.  This also
            # keeps re-searches scanning in static order, which is what makes
            # the best-first trace equivalences exact.
            table.store(key, depth, -INF, g, None)
        elif g < beta:
            table.store(key, depth, g, g, best)
        else:
            table.store(key, depth, g, INF, best)
        return g

    def _ordering(self, key: int, entry, n: int) -> list[int] | range:
        """Child index order: the table's best move first, then static order."""
        bm = entry.best_move if entry is not None else self.table.peek_move(key)
        if bm is None or not 0 <= bm < n:
            return range(n)
        order = [bm]
        order.extend(i for i in range(n) if i != bm)
        return order

    # -- plain alpha-beta (memoryless baseline) ------------------------------

    def plain_alphabeta(self, pos: Position, alpha: int, beta: int, depth: int) -> int:
        if alpha >= beta:
            raise ValueError(f"invalid window: alpha={alpha} >= beta={beta}")
        if depth < 0:
            raise ValueError(f"negative depth {depth}")
        return self._plain(pos, alpha, beta, depth)

    def _plain(self, pos: Position, alpha: int, beta: int, depth: int) -> int:
        self.stats.total_nodes += 1
        adapter = self.adapter
        if adapter.is_terminal(pos, depth):
            return self._eval_leaf(pos)
        children = adapter.successors(pos)
        if not children:
            raise SearchError("non-terminal position has no successors")
        g = -INF
        a = alpha
        child_depth = depth - 1
        for child in children:
            if g >= beta:
                break
            v = -self._plain(child, -beta, -a, child_depth)
            if v > g:
                g = v
            if g > a:
                a = g
        return g

    # -- NegaScout ------------------------------------------------------------

    def negascout(self, pos: Position, alpha: int, beta: int, depth: int) -> int:
        if alpha >= beta:
            raise ValueError(f"invalid window: alpha={alpha} >= beta={beta}")
        if depth < 0:
            raise ValueError(f"negative depth {depth}")
        if self.table is None:
            raise ValueError("negascout needs a transposition table")
        return self._ns(pos, alpha, beta, depth)

    def _ns(self, pos: Position, alpha: int, beta: int, depth: int) -> int:
        stats = self.stats
        stats.total_nodes += 1
        adapter = self.adapter
        table = self.table
        key = adapter.key(pos)

        entry = table.retrieve(key, depth)
        if entry is not None:
            hi = entry.hi
            lo = entry.lo
            if hi <= alpha or hi == lo:
                stats.tt_cutoffs += 1
                return hi
            if lo >= beta:
                stats.tt_cutoffs += 1
                return lo

        if adapter.is_terminal(pos, depth):
            g = self._eval_leaf(pos)
            table.store(key, GAME_OVER_DEPTH if depth > 0 else 0, g, g, None)
            return g

        children = adapter.successors(pos)
        if not children:
            raise SearchError("non-terminal position has no successors")
        order = self._ordering(key, entry, len(children))

        g = -INF
        a = alpha
        best = order[0]
        child_depth = depth - 1
        first = True
        for i in order:
            if g >= beta:
                break
            child = children[i]
            if first:
                v = -self._ns(child, -beta, -a, child_depth)
                first = False
            else:
                v = -self._ns(child, -(a + 1), -a, child_depth)
                if a < v < beta:
                    # Scout window failed high inside the window: re-search.
                    v = -self._ns(child, -beta, -v, child_depth)
            if v > g:
                g = v
                best = i
            if g > a:
                a = g

        if g <= alpha:
            table.store(key, depth, -INF, g, None)  # fail low: no proven move
        elif g < beta:
            table.store(key, depth, g, g, best)
        else:
            table.store(key, depth, g, INF, best)
        return g


# -- one-shot wrappers --------------------------------------------------------

def mt_alphabeta(spec: SearchSpec, w: Window, pos: Position | None = None,
                 searcher: Searcher | None = None) -> int:
    """Single table-backed alpha-beta call; builds a fresh table unless given one."""
    if searcher is None:
        searcher = Searcher(spec.adapter, TranspositionTable(spec.tt_bits))
    if pos is None:
        pos = spec.adapter.root()
    return searcher.mt_alphabeta(pos, w.alpha, w.beta, spec.depth)


def plain_alphabeta(adapter: GameAdapter, pos: Position, w: Window, depth: int,
                    searcher: Searcher | None = None) -> int:
    """Single memoryless alpha-beta call."""
    if searcher is None:
        searcher = Searcher(adapter)
    return searcher.plain_alphabeta(pos, w.alpha, w.beta, depth)


def negascout(spec: SearchSpec, w: Window, pos: Position | None = None,
              searcher: Searcher | None = None) -> int:
    """Single NegaScout call; builds a fresh table unless given one."""
    if searcher is None:
        searcher = Searcher(spec.adapter, TranspositionTable(spec.tt_bits))
    if pos is None:
        pos = spec.adapter.root()
    return searcher.negascout(pos, w.alpha, w.beta, spec.depth)
