"""Line-oriented position sets: the benchmark inputs.

One record per line.  Synthetic trees are stored as their config, Othello
positions as a 36-character board plus the side to move:

    synthetic w=3 d=8 seed=42 p=0.9 model=edge range=100
    othello .........O....XXO...XXX....O........ X

Blank lines and ``#`` comments are ignored.  ``load_position_set`` builds the
adapters eagerly so a bad record fails at load time, with its line number.
"""
from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from ..core import GameAdapter, Position
from .othello import OthelloAdapter, format_board, parse_board
from .synthetic import TreeConfig, ValueModel, gen_tree


class PositionFormatError(ValueError):
    """A position-set line that does not parse; the message carries file:line."""


@dataclass
class PositionEntry:
    domain: str      # "synthetic" or "othello6"
    label: str       # stable id used in benchmark records, e.g. "p003-othello6"
    adapter: GameAdapter
    root: Position
    line: str        # canonical record text


_SYNTH_KEYS = {"w", "d", "seed", "p", "model", "range"}


def parse_record(text: str, where: str = "<string>") -> PositionEntry:
    """Parse one record line; ``where`` names the source for error messages."""
    tokens = text.split()
    if not tokens:
        raise PositionFormatError(f"{where}: empty record")
    kind = tokens[0]
    if kind == "synthetic":
        fields: dict[str, str] = {}
        for tok in tokens[1:]:
            key, sep, value = tok.partition("=")
            if not sep or key not in _SYNTH_KEYS:
                raise PositionFormatError(f"{where}: bad synthetic field {tok!r}")
            fields[key] = value
        missing = {"w", "d", "seed"} - fields.keys()
        if missing:
            raise PositionFormatError(
                f"{where}: synthetic record missing {', '.join(sorted(missing))}")
        try:
            model = ValueModel(fields.get("model", "edge"))
            config = TreeConfig(width=int(fields["w"]), depth=int(fields["d"]),
                                seed=int(fields["seed"]),
                                value_model=model,
                                ordering_quality=float(fields.get("p", "1")),
                                value_range=int(fields.get("range", "100")))
        except ValueError as exc:
            raise PositionFormatError(f"{where}: {exc}") from None
        adapter = gen_tree(config)
        return PositionEntry("synthetic", "", adapter, adapter.root(),
                             config.to_line())
    if kind == "othello":
        if len(tokens) != 3:
            raise PositionFormatError(
                f"{where}: othello record needs a board and a side, got {text!r}")
        try:
            pos = parse_board(tokens[1], tokens[2])
            adapter = OthelloAdapter(pos)
        except ValueError as exc:
            raise PositionFormatError(f"{where}: {exc}") from None
        board, side = format_board(pos)
        return PositionEntry("othello6", "", adapter, pos, f"othello {board} {side}")
    raise PositionFormatError(f"{where}: unknown record kind {kind!r}")


def load_position_set(path: str | Path) -> list[PositionEntry]:
    """Parse and build every record in ``path``, in file order."""
    path = Path(path)
    entries: list[PositionEntry] = []
    with path.open() as fh:
        for lineno, raw in enumerate(fh, 1):
            stripped = raw.strip()
            if not stripped or stripped.startswith("#"):
                continue
            entry = parse_record(stripped, where=f"{path}:{lineno}")
            entry.label = f"p{len(entries):03d}-{entry.domain}"
            entries.append(entry)
    return entries


def save_position_set(path: str | Path, entries: list[PositionEntry]) -> None:
    """Write canonical record lines; load/save round-trips byte-identically."""
    path = Path(path)
    with path.open("w") as fh:
        for entry in entries:
            fh.write(entry.line + "\n")


def append_record(path: str | Path, line: str) -> None:
    """Validate a record line and append it to a position set."""
    parse_record(line)  # reject bad records before touching the file
    path = Path(path)
    with path.open("a") as fh:
        fh.write(line.strip() + "\n")


def default_position_path() -> Path:
    """The shipped 20-position Othello benchmark set."""
    return Path(str(resources.files("mtsearch").joinpath("data/othello20.txt")))
