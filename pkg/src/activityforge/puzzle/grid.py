"""Letter grids and placements shared by crossword and word-search.

Serialized form (inside the activity payload): cells as a list of strings,
one per row, with '#' for blocked cells and '.' for empty cells; placements
as objects. The format is bit-exact: tests and the UI parse the same JSON.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import GridError

MAX_GRID = 25

# compass deltas for word-search placements, canonical order
COMPASS = {
    "e": (0, 1),
    "se": (1, 1),
    "s": (1, 0),
    "sw": (1, -1),
    "w": (0, -1),
    "nw": (-1, -1),
    "n": (-1, 0),
    "ne": (-1, 1),
}
COMPASS_ORDER = ("e", "se", "s", "sw", "w", "nw", "n", "ne")

_XW_DELTAS = {"across": (0, 1), "down": (1, 0)}


def direction_delta(direction: str) -> tuple[int, int]:
    if direction in _XW_DELTAS:
        return _XW_DELTAS[direction]
    if direction in COMPASS:
        return COMPASS[direction]
    raise GridError(f"unknown direction {direction!r}")


@dataclass(frozen=True)
class Placement:
    word: str
    row: int
    col: int
    direction: str
    clue: str | None = None

    def cells(self) -> list[tuple[int, int]]:
        dr, dc = direction_delta(self.direction)
        return [(self.row + i * dr, self.col + i * dc) for i in range(len(self.word))]

    def to_record(self) -> dict:
        return {
            "word": self.word,
            "row": self.row,
            "col": self.col,
            "direction": self.direction,
            "clue": self.clue,
        }

    @classmethod
    def from_record(cls, rec: dict) -> "Placement":
        return cls(rec["word"], rec["row"], rec["col"], rec["direction"], rec.get("clue"))


@dataclass(frozen=True)
class Grid:
    width: int
    height: int
    cells: tuple[str, ...]  # rows; 'A'-'Z', '#' blocked, '.' empty
    placements: tuple[Placement, ...] = ()

    def __post_init__(self):
        if not (1 <= self.width <= MAX_GRID and 1 <= self.height <= MAX_GRID):
            raise GridError(f"grid {self.width}x{self.height} outside 1..{MAX_GRID}")
        if len(self.cells) != self.height or any(len(r) != self.width for r in self.cells):
            raise GridError("cell rows do not match the declared dimensions")
        for row in self.cells:
            for ch in row:
                if ch not in ".#" and not ("A" <= ch <= "Z"):
                    raise GridError(f"invalid cell character {ch!r}")

    def in_bounds(self, row: int, col: int) -> bool:
        return 0 <= row < self.height and 0 <= col < self.width

    def at(self, row: int, col: int) -> str:
        return self.cells[row][col]

    def to_record(self) -> dict:
        return {
            "width": self.width,
            "height": self.height,
            "cells": list(self.cells),
            "placements": [p.to_record() for p in self.placements],
        }

    @classmethod
    def from_record(cls, rec: dict) -> "Grid":
        return cls(
            rec["width"],
            rec["height"],
            tuple(rec["cells"]),
            tuple(Placement.from_record(p) for p in rec.get("placements", [])),
        )


def number_placements(grid: Grid) -> list[tuple[int, Placement]]:
    """Standard crossword numbering: start cells scanned row-major, one number
    per distinct start cell (an across and a down word may share one)."""
    starts = sorted({(p.row, p.col) for p in grid.placements})
    numbers = {cell: i + 1 for i, cell in enumerate(starts)}
    ordered = sorted(grid.placements, key=lambda p: (p.row, p.col, p.direction))
    return [(numbers[(p.row, p.col)], p) for p in ordered]
