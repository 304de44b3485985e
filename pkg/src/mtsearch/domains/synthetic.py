"""Seeded uniform game trees with controllable leaf values and move ordering.

Two leaf-value models:

  * ``IID_LEAF``: every leaf drawn independently, uniform on [-range, range].
  * ``EDGE_DELTA``: every edge carries a delta; a leaf's value is the
    alternating-sign sum along its path, so siblings correlate and the trees
    behave like the "strongly ordered" trees real games produce.

``ordering_quality`` p is the probability that a node lists its best child
first (remaining children shuffled); p=1 yields perfectly ordered trees whose
full-window alpha-beta leaf count equals the minimal-tree formula.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from ..core import GameAdapter
from ..util import mix64_array, unit_floats

# The generator materializes per-level arrays; keep full trees desk-sized.
DEFAULT_NODE_BUDGET = 2_000_000

_SALT_IID = 0x1D1D_73AF
_SALT_EDGE = 0xED6E_D317
_SALT_ORDER = 0x07DE_7B35
_SALT_KEY = 0x5EED_4A5B


class ValueModel(enum.Enum):
    IID_LEAF = "iid"
    EDGE_DELTA = "edge"


@dataclass(frozen=True)
class TreeConfig:
    width: int
    depth: int
    seed: int
    value_model: ValueModel = ValueModel.EDGE_DELTA
    ordering_quality: float = 1.0
    value_range: int = 100

    def __post_init__(self) -> None:
        if self.width < 1:
            raise ValueError(f"width must be >= 1, got {self.width}")
        if self.depth < 0:
            raise ValueError(f"depth must be >= 0, got {self.depth}")
        if not 0.0 <= self.ordering_quality <= 1.0:
            raise ValueError(f"ordering_quality must be in [0, 1], "
                             f"got {self.ordering_quality}")
        if self.value_range < 0:
            raise ValueError(f"value_range must be >= 0, got {self.value_range}")

    def to_line(self) -> str:
        """Canonical position-set record for this tree."""
        return (f"synthetic w={self.width} d={self.depth} seed={self.seed} "
                f"p={self.ordering_quality:g} model={self.value_model.value} "
                f"range={self.value_range}")


def _uniform_ints(words: np.ndarray, half_width: int) -> np.ndarray:
    """Mixed words -> ints uniform on [-half_width, half_width]."""
    span = np.uint64(2 * half_width + 1)
    return (words % span).astype(np.int64) - half_width


class _UniformTree(GameAdapter):
    """Shared machinery for width-uniform trees of a fixed depth.

    Positions are (level, offset) pairs; node ordinals are assigned in level
    order, and a node's key carries its ordinal in the low bits.  Ordinals are
    unique, so full keys never collide and neither do table slots while the
    table has at least as many slots as the tree has nodes.
    """

    def __init__(self, width: int, depth: int, leaf_values: np.ndarray,
                 key_salt: int):
        self.width = width
        self.depth = depth
        self.max_branching = width
        # values[k][j]: minimax value of node (k, j) from the MAX player's
        # (the root mover's) point of view.
        values = [None] * (depth + 1)
        values[depth] = leaf_values
        for k in range(depth - 1, -1, -1):
            grouped = values[k + 1].reshape(-1, width)
            values[k] = grouped.max(axis=1) if k % 2 == 0 else grouped.min(axis=1)
        self._values = values
        # Level-order ordinals and the derived keys.
        offsets = [0] * (depth + 2)
        for k in range(depth + 1):
            offsets[k + 1] = offsets[k] + width ** k
        self._offsets = offsets
        keys = []
        for k in range(depth + 1):
            ordinals = np.arange(offsets[k], offsets[k + 1], dtype=np.uint64)
            salted = mix64_array(ordinals ^ np.uint64(key_salt))
            keys.append(ordinals | (salted << np.uint64(40)))
        self._keys = keys
        self._succ_cache: dict[tuple[int, int], list[tuple[int, int]]] = {}
        std = float(np.std(leaf_values)) if leaf_values.size > 1 else 0.0
        self.aspiration_delta = max(1, round(std / 8))

    # -- GameAdapter ----------------------------------------------------------

    def root(self) -> tuple[int, int]:
        return (0, 0)

    def evaluate(self, pos: tuple[int, int]) -> int:
        k, j = pos
        v = int(self._values[k][j])
        return v if k % 2 == 0 else -v

    def is_terminal(self, pos: tuple[int, int], remaining_depth: int) -> bool:
        return remaining_depth == 0 or pos[0] == self.depth

    def key(self, pos: tuple[int, int]) -> int:
        return int(self._keys[pos[0]][pos[1]])

    def successors(self, pos: tuple[int, int]) -> list[tuple[int, int]]:
        cached = self._succ_cache.get(pos)
        if cached is None:
            cached = self._children(pos)
            self._succ_cache[pos] = cached
        return cached

    def _children(self, pos: tuple[int, int]) -> list[tuple[int, int]]:
        k, j = pos
        base = j * self.width
        level = k + 1
        return [(level, base + c) for c in range(self.width)]

    # -- helpers for tests ------------------------------------------------------

    def node_count(self) -> int:
        return self._offsets[self.depth + 1]

    def leaf_value(self, offset: int) -> int:
        """Root-perspective value of the offset-th leaf (left to right)."""
        return int(self._values[self.depth][offset])


class FixedTree(_UniformTree):
    """A uniform tree with caller-supplied leaf values, in the given order.

    ``leaves`` are root-perspective (MAX point of view) scores, left to right.
    Handy for hand-traced fixtures.
    """

    def __init__(self, width: int, leaves: list[int], key_salt: int = 0):
        if width < 1:
            raise ValueError(f"width must be >= 1, got {width}")
        n = len(leaves)
        depth = 0
        while width ** depth < n:
            depth += 1
        if width ** depth != n:
            raise ValueError(f"{n} leaves is not a power of width {width}")
        super().__init__(width, depth, np.asarray(leaves, dtype=np.int64), key_salt)


class SyntheticTree(_UniformTree):
    """A generated tree; successor order follows the per-node permutations."""

    def __init__(self, config: TreeConfig):
        w, d = config.width, config.depth
        seed = config.seed & ((1 << 64) - 1)
        n_leaves = w ** d
        leaf_ordinals = None  # filled below when needed

        if config.value_model is ValueModel.IID_LEAF:
            start = sum(w ** k for k in range(d))
            leaf_ordinals = np.arange(start, start + n_leaves, dtype=np.uint64)
            words = mix64_array(leaf_ordinals ^ np.uint64(seed ^ _SALT_IID))
            leaf_values = _uniform_ints(words, config.value_range)
        else:
            # Alternating-sign running sum of per-edge deltas, level by level.
            contrib = np.zeros(1, dtype=np.int64)
            ordinal = 1
            for k in range(1, d + 1):
                count = w ** k
                ordinals = np.arange(ordinal, ordinal + count, dtype=np.uint64)
                ordinal += count
                words = mix64_array(ordinals ^ np.uint64(seed ^ _SALT_EDGE))
                deltas = _uniform_ints(words, config.value_range)
                sign = 1 if (k - 1) % 2 == 0 else -1  # who chose this edge
                contrib = np.repeat(contrib, w) + sign * deltas
            leaf_values = contrib

        super().__init__(w, d, leaf_values, key_salt=seed ^ _SALT_KEY)
        self.config = config
        self._perms = self._build_orderings(seed, config.ordering_quality)

    def _build_orderings(self, seed: int, p: float) -> list[np.ndarray]:
        """Per-node child permutation for every interior level."""
        w, d = self.width, self.depth
        perms: list[np.ndarray] = []
        for k in range(d):
            n = w ** k
            child_ordinals = np.arange(self._offsets[k + 1], self._offsets[k + 2],
                                       dtype=np.uint64).reshape(n, w)
            # Nonzero sort keys give the shuffle; forcing a zero pins a child first.
            sort_keys = mix64_array(child_ordinals ^ np.uint64(seed ^ _SALT_ORDER)) \
                .astype(np.uint64) | np.uint64(1)
            node_ordinals = np.arange(self._offsets[k], self._offsets[k + 1],
                                      dtype=np.uint64)
            u = unit_floats(mix64_array(node_ordinals ^ np.uint64(seed ^ _SALT_ORDER)))
            grouped = self._values[k + 1].reshape(n, w)
            best = grouped.argmax(axis=1) if k % 2 == 0 else grouped.argmin(axis=1)
            pick_best = u < p
            rows = np.nonzero(pick_best)[0]
            sort_keys[rows, best[rows]] = 0
            perms.append(np.argsort(sort_keys, axis=1, kind="stable").astype(np.int32))
        return perms

    def _children(self, pos: tuple[int, int]) -> list[tuple[int, int]]:
        k, j = pos
        base = j * self.width
        level = k + 1
        return [(level, base + int(c)) for c in self._perms[k][j]]


def gen_tree(config: TreeConfig, node_budget: int = DEFAULT_NODE_BUDGET) -> SyntheticTree:
    """Materialize the tree for ``config``; same config, same tree, always."""
    if config.width ** config.depth > node_budget:
        raise ValueError(
            f"tree ({config.width}, {config.depth}) has {config.width ** config.depth} "
            f"leaves, over the {node_budget} budget")
    return SyntheticTree(config)
