"""6x6 Othello on bitboards: move generation, evaluation, Zobrist keys.

The small board keeps exhaustive oracles affordable at test depths while the
branching factor stays near 10, the regime this lab's benchmarks target.
Squares are numbered row-major, 0..35, rank 1 on top.  A position is
(black discs, white discs, side to move); black (X) moves first.
"""
from __future__ import annotations

from typing import NamedTuple

from ..core import GameAdapter
from ..util import mix64

N_SQUARES = 36
FULL = (1 << N_SQUARES) - 1
_COL_A = sum(1 << (r * 6) for r in range(6))
_COL_F = _COL_A << 5
_NOT_A = FULL & ~_COL_A
_NOT_F = FULL & ~_COL_F

# (shift, source mask) per direction; masking before the shift stops wraps
# across the board edge.
_SHIFTS = (
    (1, _NOT_F),   # east
    (-1, _NOT_A),  # west
    (6, FULL),     # south
    (-6, FULL),    # north
    (7, _NOT_F),   # south-east
    (-7, _NOT_A),  # north-west
    (5, _NOT_A),   # south-west
    (-5, _NOT_F),  # north-east
)

BLACK, WHITE = 0, 1

# Static square weights for move ordering: corners first, corner-adjacent
# squares last.
_SQUARE_WEIGHT = (
    100, -10,   8,   8, -10, 100,
    -10, -30,  -2,  -2, -30, -10,
      8,  -2,   2,   2,  -2,   8,
      8,  -2,   2,   2,  -2,   8,
    -10, -30,  -2,  -2, -30, -10,
    100, -10,   8,   8, -10, 100,
)

DISC_WEIGHT = 2   # one disc of material; also the aspiration unit
MOBILITY_WEIGHT = 1

_Z_SALT = 0x07E11066  # fixed zobrist stream salt
_ZOBRIST = [[mix64(_Z_SALT + 2 * sq + color) for color in (BLACK, WHITE)]
            for sq in range(N_SQUARES)]
_Z_SIDE = mix64(_Z_SALT + 2 * N_SQUARES)


class OthelloPosition(NamedTuple):
    black: int
    white: int
    side: int  # BLACK or WHITE to move


STANDARD_START = OthelloPosition(black=(1 << 15) | (1 << 20),
                                 white=(1 << 14) | (1 << 21),
                                 side=BLACK)


def _shift(b: int, s: int, mask: int) -> int:
    b &= mask
    return ((b << s) if s > 0 else (b >> -s)) & FULL


def legal_moves(own: int, opp: int) -> int:
    """Bitmask of squares where the mover flips at least one disc."""
    empty = FULL & ~(own | opp)
    moves = 0
    for s, mask in _SHIFTS:
        x = _shift(own, s, mask) & opp
        x |= _shift(x, s, mask) & opp
        x |= _shift(x, s, mask) & opp
        x |= _shift(x, s, mask) & opp
        moves |= _shift(x, s, mask) & empty
    return moves


def flips_for(own: int, opp: int, move_bit: int) -> int:
    """Discs flipped by playing on ``move_bit``."""
    flips = 0
    for s, mask in _SHIFTS:
        x = _shift(move_bit, s, mask)
        run = 0
        while x & opp:
            run |= x
            x = _shift(x, s, mask)
        if x & own:
            flips |= run
    return flips


def parse_board(board: str, side: str) -> OthelloPosition:
    """36 chars of '.XO' (row-major) plus a side-to-move letter."""
    if len(board) != N_SQUARES:
        raise ValueError(f"board must be {N_SQUARES} characters, got {len(board)}")
    black = white = 0
    for sq, ch in enumerate(board):
        if ch == "X":
            black |= 1 << sq
        elif ch == "O":
            white |= 1 << sq
        elif ch != ".":
            raise ValueError(f"bad square character {ch!r} at index {sq}")
    if side not in ("X", "O"):
        raise ValueError(f"side must be 'X' or 'O', got {side!r}")
    return OthelloPosition(black, white, BLACK if side == "X" else WHITE)


def format_board(pos: OthelloPosition) -> tuple[str, str]:
    chars = []
    for sq in range(N_SQUARES):
        bit = 1 << sq
        chars.append("X" if pos.black & bit else "O" if pos.white & bit else ".")
    return "".join(chars), "X" if pos.side == BLACK else "O"


def render(pos: OthelloPosition) -> str:
    """Multi-line board picture for the analyze command."""
    board, side = format_board(pos)
    rows = ["  a b c d e f"]
    for r in range(6):
        rows.append(f"{r + 1} " + " ".join(board[r * 6:(r + 1) * 6]))
    rows.append(f"{'X (black)' if side == 'X' else 'O (white)'} to move")
    return "\n".join(rows)


class OthelloAdapter(GameAdapter):
    """GameAdapter over 6x6 Othello from a fixed start position.

    Successors are legal moves in static-weight order (a lone pass when the
    mover is blocked); the game ends when neither side can move.  Evaluation
    is disc difference plus a mobility term, from the mover's perspective.
    """

    max_branching = 16

    def __init__(self, start: OthelloPosition = STANDARD_START):
        if not isinstance(start, OthelloPosition):
            start = OthelloPosition(*start)
        if start.black & start.white:
            raise ValueError("black and white bitboards overlap")
        if (start.black | start.white) & ~FULL:
            raise ValueError("bitboards have bits off the 6x6 board")
        if start.side not in (BLACK, WHITE):
            raise ValueError(f"side must be 0 (black) or 1 (white), got {start.side}")
        self.start = start
        self.aspiration_delta = DISC_WEIGHT
        self._moves_cache: dict[OthelloPosition, tuple[int, int]] = {}
        self._succ_cache: dict[OthelloPosition, list[OthelloPosition]] = {}
        self._key_cache: dict[OthelloPosition, int] = {}

    # -- game mechanics ---------------------------------------------------------

    def _mobility(self, pos: OthelloPosition) -> tuple[int, int]:
        """(mover's legal-move mask, opponent's legal-move mask)."""
        masks = self._moves_cache.get(pos)
        if masks is None:
            own, opp = ((pos.black, pos.white) if pos.side == BLACK
                        else (pos.white, pos.black))
            masks = (legal_moves(own, opp), legal_moves(opp, own))
            self._moves_cache[pos] = masks
        return masks

    def root(self) -> OthelloPosition:
        return self.start

    def is_terminal(self, pos: OthelloPosition, remaining_depth: int) -> bool:
        if remaining_depth == 0:
            return True
        return self._mobility(pos) == (0, 0)

    def successors(self, pos: OthelloPosition) -> list[OthelloPosition]:
        children = self._succ_cache.get(pos)
        if children is not None:
            return children
        own_moves, opp_moves = self._mobility(pos)
        if own_moves == 0:
            # Blocked: a single pass node (the game-over case never gets here).
            children = [] if opp_moves == 0 else \
                [OthelloPosition(pos.black, pos.white, 1 - pos.side)]
            self._succ_cache[pos] = children
            return children
        squares = []
        mask = own_moves
        while mask:
            bit = mask & -mask
            squares.append(bit.bit_length() - 1)
            mask ^= bit
        squares.sort(key=lambda sq: (-_SQUARE_WEIGHT[sq], sq))
        own, opp = ((pos.black, pos.white) if pos.side == BLACK
                    else (pos.white, pos.black))
        children = []
        for sq in squares:
            bit = 1 << sq
            flips = flips_for(own, opp, bit)
            new_own = own | bit | flips
            new_opp = opp & ~flips
            if pos.side == BLACK:
                children.append(OthelloPosition(new_own, new_opp, WHITE))
            else:
                children.append(OthelloPosition(new_opp, new_own, BLACK))
        self._succ_cache[pos] = children
        return children

    def evaluate(self, pos: OthelloPosition) -> int:
        own, opp = ((pos.black, pos.white) if pos.side == BLACK
                    else (pos.white, pos.black))
        own_moves, opp_moves = self._mobility(pos)
        discs = own.bit_count() - opp.bit_count()
        mobility = own_moves.bit_count() - opp_moves.bit_count()
        return DISC_WEIGHT * discs + MOBILITY_WEIGHT * mobility

    def key(self, pos: OthelloPosition) -> int:
        k = self._key_cache.get(pos)
        if k is None:
            k = _Z_SIDE if pos.side == WHITE else 0
            bits = pos.black
            while bits:
                bit = bits & -bits
                k ^= _ZOBRIST[bit.bit_length() - 1][BLACK]
                bits ^= bit
            bits = pos.white
            while bits:
                bit = bits & -bits
                k ^= _ZOBRIST[bit.bit_length() - 1][WHITE]
                bits ^= bit
            self._key_cache[pos] = k
        return k


def othello_adapter(start: OthelloPosition | None = None) -> OthelloAdapter:
    """Adapter from ``start`` (standard 6x6 opening when omitted)."""
    return OthelloAdapter(STANDARD_START if start is None else start)


def perft(adapter: OthelloAdapter, pos: OthelloPosition, depth: int) -> int:
    """Leaf count of the successor recursion; passes count as moves."""
    if depth == 0 or adapter.is_terminal(pos, depth):
        return 1
    return sum(perft(adapter, child, depth - 1) for child in adapter.successors(pos))
