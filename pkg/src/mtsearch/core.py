"""Shared domain model: game values, windows, bound pairs, and the game interface.

Scores are plain integers throughout (null windows need adjacent integers).
All search code is negamax-oriented: ``evaluate`` returns the score from the
side to move's point of view, and a parent sees ``-child``.
"""
from __future__ import annotations

import enum
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Sequence

# Finite "infinity" sentinel. Kept far below the 64-bit range so that
# gamma - 1, gamma + 1 and negamax negation of any reachable score stay
# representable even in fixed-width storage.
INF = 1 << 30

Value = int
Position = Any  # opaque, defined by each GameAdapter


class SearchError(RuntimeError):
    """A search produced inconsistent bounds or failed to converge."""


class BudgetExceededError(RuntimeError):
    """An exhaustive oracle was asked to enumerate more nodes than allowed."""


class ResultClass(enum.Enum):
    """Trichotomy of an alpha-beta return value relative to its window."""

    EXACT = "exact"
    FAIL_LOW = "fail-low"    # g <= alpha: g is an upper bound on the true value
    FAIL_HIGH = "fail-high"  # g >= beta:  g is a lower bound on the true value


@dataclass(frozen=True)
class Window:
    """Half-open search window ``(alpha, beta)``; null when beta == alpha + 1."""

    alpha: int
    beta: int

    def __post_init__(self) -> None:
        if self.alpha >= self.beta:
            raise ValueError(f"invalid window: alpha={self.alpha} >= beta={self.beta}")

    @property
    def is_null(self) -> bool:
        return self.beta == self.alpha + 1


def null_window(gamma: int) -> Window:
    """The narrowest window that tests a score against ``gamma``."""
    return Window(gamma - 1, gamma)


@dataclass(frozen=True)
class BoundPair:
    """Proven lower/upper bounds on a node's value.

    ``lo`` is the best known lower bound (a fail-high result), ``hi`` the best
    known upper bound (a fail-low result).  -INF / +INF mean "nothing known".
    """

    lo: int = -INF
    hi: int = INF

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"crossed bounds: lo={self.lo} > hi={self.hi}")

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi


def classify_result(g: int, w: Window) -> ResultClass:
    """Classify an alpha-beta return value against the window it was searched with."""
    if g <= w.alpha:
        return ResultClass.FAIL_LOW
    if g >= w.beta:
        return ResultClass.FAIL_HIGH
    return ResultClass.EXACT


def minimal_tree_leaves(width: int, depth: int) -> int:
    """Leaf count of the minimal tree for a uniform (width, depth) game tree.

    This is the best case for full-window alpha-beta: the number of leaves it
    must evaluate when the first move at every node is a best move.
    """
    if width < 1:
        raise ValueError(f"width must be >= 1, got {width}")
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    return width ** (depth // 2) + width ** ((depth + 1) // 2) - 1


class GameAdapter(ABC):
    """Pluggable game interface used by every search algorithm.

    Implementations must be deterministic: for a fixed instance, ``successors``
    always returns children in the same (static) order, and ``key`` is a stable
    64-bit position hash.  One adapter instance serves one search thread.
    """

    max_branching: int = 0
    # Default half-width for aspiration windows; domains override with a
    # value calibrated to their score scale.
    aspiration_delta: int = 1

    @abstractmethod
    def root(self) -> Position:
        """The start position."""

    @abstractmethod
    def successors(self, pos: Position) -> Sequence[Position]:
        """Ordered successor positions of a non-terminal node."""

    @abstractmethod
    def evaluate(self, pos: Position) -> int:
        """Static score from the side to move's perspective, in (-INF, INF)."""

    @abstractmethod
    def is_terminal(self, pos: Position, remaining_depth: int) -> bool:
        """True at the depth horizon (remaining_depth == 0) or a genuine game end."""

    @abstractmethod
    def key(self, pos: Position) -> int:
        """64-bit hash of the position."""


@dataclass(frozen=True)
class SearchSpec:
    """Everything a driver needs to run: the game, the depth, the table size."""

    adapter: GameAdapter
    depth: int
    tt_bits: int = 21

    def __post_init__(self) -> None:
        if self.depth < 0:
            raise ValueError(f"depth must be >= 0, got {self.depth}")
        if not 4 <= self.tt_bits <= 28:
            raise ValueError(f"tt_bits must be in [4, 28], got {self.tt_bits}")
