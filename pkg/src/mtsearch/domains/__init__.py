"""Concrete game adapters: seeded synthetic trees and 6x6 Othello."""
from .othello import (OthelloAdapter, OthelloPosition, STANDARD_START,
                      othello_adapter, parse_board, format_board, perft, render)
from .positions import (PositionEntry, PositionFormatError, append_record,
                        default_position_path, load_position_set, parse_record,
                        save_position_set)
from .synthetic import (DEFAULT_NODE_BUDGET, FixedTree, SyntheticTree,
                        TreeConfig, ValueModel, gen_tree)

__all__ = [
    "OthelloAdapter", "OthelloPosition", "STANDARD_START", "othello_adapter",
    "parse_board", "format_board", "perft", "render",
    "PositionEntry", "PositionFormatError", "append_record",
    "default_position_path", "load_position_set", "parse_record",
    "save_position_set",
    "DEFAULT_NODE_BUDGET", "FixedTree", "SyntheticTree", "TreeConfig",
    "ValueModel", "gen_tree",
]
