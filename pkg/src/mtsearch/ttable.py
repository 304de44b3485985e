"""Transposition table: per-position bound pairs, best move, depth, and age.

The table is what turns repeated null-window alpha-beta passes into a single
coherent search: bounds proven by one pass are picked up by the next.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import INF

# Depth stored for game-over leaves: their value holds at any search depth,
# so the entry must answer every retrieve.
GAME_OVER_DEPTH = 1 << 20


class TTEntry:
    """One stored position: verification key, depth, [lo, hi] bounds, best move."""

    __slots__ = ("key", "depth", "lo", "hi", "best_move", "age")

    def __init__(self, key: int, depth: int, lo: int, hi: int,
                 best_move: int | None, age: int):
        self.key = key
        self.depth = depth
        self.lo = lo
        self.hi = hi
        self.best_move = best_move
        self.age = age

    def __repr__(self) -> str:  # debugging aid
        return (f"TTEntry(key={self.key:#x}, depth={self.depth}, "
                f"lo={self.lo}, hi={self.hi}, best={self.best_move}, age={self.age})")


@dataclass
class TableStats:
    stores: int = 0
    overwrites: int = 0  # evictions: a different position's entry was replaced
    hits: int = 0
    misses: int = 0
    occupancy: int = 0


class TranspositionTable:
    """Fixed-size table indexed by the low ``bits`` bits of a 64-bit key.

    The full key is kept in each entry, so a retrieve never returns another
    position's bounds.  Replacement is depth-preferred with an age tie-break:
    deeper entries win, equal depth prefers the newer store, and entries from
    older generations are evicted first.
    """

    def __init__(self, bits: int = 21):
        if not 4 <= bits <= 28:
            raise ValueError(f"tt bits must be in [4, 28], got {bits}")
        self.bits = bits
        self.size = 1 << bits
        self.mask = self.size - 1
        self.slots: list[TTEntry | None] = [None] * self.size
        self.age = 0
        self.stats = TableStats()

    def retrieve(self, key: int, required_depth: int) -> TTEntry | None:
        """The entry for ``key`` if present and searched deep enough, else None."""
        entry = self.slots[key & self.mask]
        if entry is None or entry.key != key or entry.depth < required_depth:
            self.stats.misses += 1
            return None
        self.stats.hits += 1
        return entry

    def peek_move(self, key: int) -> int | None:
        """Best move for ``key`` regardless of stored depth (move ordering only)."""
        entry = self.slots[key & self.mask]
        if entry is None or entry.key != key:
            return None
        return entry.best_move

    def store(self, key: int, depth: int, lo: int, hi: int,
              best_move: int | None = None) -> None:
        if lo > hi:
            raise ValueError(f"refusing to store crossed bounds lo={lo} > hi={hi}")
        if depth < 0:
            raise ValueError(f"negative depth {depth}")
        stats = self.stats
        stats.stores += 1
        idx = key & self.mask
        entry = self.slots[idx]
        if entry is None:
            self.slots[idx] = TTEntry(key, depth, lo, hi, best_move, self.age)
            stats.occupancy += 1
            return
        if entry.key == key:
            if depth > entry.depth:
                # Fresh deeper bounds supersede the shallower ones entirely.
                entry.depth = depth
                entry.lo, entry.hi = lo, hi
                if best_move is not None:
                    entry.best_move = best_move
                entry.age = self.age
            elif depth == entry.depth:
                # Both old and new bounds hold for this depth: intersect.
                new_lo = entry.lo if entry.lo > lo else lo
                new_hi = entry.hi if entry.hi < hi else hi
                if new_lo > new_hi:
                    # Inconsistent older info (e.g. bounds proven against a
                    # deeper entry via the depth>= retrieve policy): the
                    # latest search wins.
                    new_lo, new_hi = lo, hi
                entry.lo, entry.hi = new_lo, new_hi
                if best_move is not None:
                    entry.best_move = best_move
                entry.age = self.age
            # A shallower result for a position we already know deeper: drop it.
            return
        # Collision between distinct positions: depth-preferred replacement.
        if entry.age < self.age or depth >= entry.depth:
            self.slots[idx] = TTEntry(key, depth, lo, hi, best_move, self.age)
            stats.overwrites += 1

    def new_generation(self) -> None:
        """Start a new search generation; old entries stay readable but evict first."""
        self.age += 1

    @property
    def occupancy(self) -> int:
        return self.stats.occupancy

    def entry_bounds(self, key: int) -> tuple[int, int] | None:
        """(lo, hi) for ``key`` if stored, ignoring depth.  Test/debug helper."""
        entry = self.slots[key & self.mask]
        if entry is None or entry.key != key:
            return None
        return entry.lo, entry.hi
