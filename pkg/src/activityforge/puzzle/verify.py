"""Independent grid verifier.

Written from the validity rules, not from the builders, so it can act as an
oracle in tests and as the gate for teacher edits. Returns an empty list
iff the grid is valid for its kind; each violation names the broken rule
and the cell or placement involved.

Crossword rules:
  BOUNDS            every placement stays inside the grid
  DIRECTION         crossword placements are across/down only
  MIN_LENGTH        placed words have at least 2 letters
  LETTER_MISMATCH   cells spell the placement's word
  CROSSING          a cell shared by two placements is a perpendicular cross
  ADJACENCY         neighboring letter cells always share a placement
  ACCIDENTAL_RUN    every maximal run of 2+ letters is exactly one placed word
  STRAY_CELL        every letter cell belongs to some placement
  CONNECTIVITY      the placement crossing-graph is one component

Word-search rules: BOUNDS, DIRECTION (8 compass points), FILL (no empty or
blocked cells) and KEY_MISMATCH (scanning each answer-key placement
reproduces its word).
"""

from __future__ import annotations

from dataclasses import dataclass

from .grid import COMPASS, Grid

_XW_DIRECTIONS = ("across", "down")


@dataclass(frozen=True)
class Violation:
    rule: str
    message: str
    row: int | None = None
    col: int | None = None
    word: str | None = None

    def to_record(self) -> dict:
        return {
            "rule": self.rule,
            "message": self.message,
            "row": self.row,
            "col": self.col,
            "word": self.word,
        }


def _is_letter(ch: str) -> bool:
    return "A" <= ch <= "Z"


def _placement_cells_checked(grid, placement, allowed_directions, out, check_letters=True):
    """BOUNDS/DIRECTION (and optionally LETTER_MISMATCH) for one placement;
    returns its cells (empty when the placement is unusable)."""
    if placement.direction not in allowed_directions:
        out.append(
            Violation("DIRECTION", f"direction {placement.direction!r} not allowed here",
                      placement.row, placement.col, placement.word)
        )
        return []
    cells = placement.cells()
    for (r, c), ch in zip(cells, placement.word.upper()):
        if not grid.in_bounds(r, c):
            out.append(Violation("BOUNDS", "placement leaves the grid", r, c, placement.word))
            return []
        if check_letters and grid.at(r, c) != ch:
            out.append(
                Violation("LETTER_MISMATCH",
                          f"cell ({r},{c}) has {grid.at(r, c)!r}, word needs {ch!r}",
                          r, c, placement.word)
            )
    return cells


def _maximal_runs(grid, horizontal: bool):
    """(row, col, text) for every maximal straight run of 2+ letters."""
    runs = []
    outer = grid.height if horizontal else grid.width
    inner = grid.width if horizontal else grid.height
    for o in range(outer):
        i = 0
        while i < inner:
            r, c = (o, i) if horizontal else (i, o)
            if not _is_letter(grid.at(r, c)):
                i += 1
                continue
            j = i
            text = []
            while j < inner:
                rr, cc = (o, j) if horizontal else (j, o)
                if not _is_letter(grid.at(rr, cc)):
                    break
                text.append(grid.at(rr, cc))
                j += 1
            if j - i >= 2:
                start = (o, i) if horizontal else (i, o)
                runs.append((start[0], start[1], "".join(text)))
            i = j
    return runs


def _verify_crossword(grid: Grid) -> list[Violation]:
    out: list[Violation] = []
    cell_owners: dict[tuple[int, int], list] = {}
    for p in grid.placements:
        if len(p.word) < 2:
            out.append(Violation("MIN_LENGTH", "placed words need 2+ letters",
                                 p.row, p.col, p.word))
        for cell in _placement_cells_checked(grid, p, _XW_DIRECTIONS, out):
            cell_owners.setdefault(cell, []).append(p)

    for (r, c), owners in cell_owners.items():
        if len(owners) > 2 or (len(owners) == 2 and owners[0].direction == owners[1].direction):
            out.append(Violation("CROSSING",
                                 "cell shared by placements that do not cross perpendicularly",
                                 r, c))

    # neighboring letters must belong to one common word in that axis
    for r in range(grid.height):
        for c in range(grid.width):
            if not _is_letter(grid.at(r, c)):
                continue
            if c + 1 < grid.width and _is_letter(grid.at(r, c + 1)):
                a = {id(p) for p in cell_owners.get((r, c), []) if p.direction == "across"}
                b = {id(p) for p in cell_owners.get((r, c + 1), []) if p.direction == "across"}
                if not (a & b):
                    out.append(Violation("ADJACENCY",
                                         "horizontally touching letters without a shared across word",
                                         r, c))
            if r + 1 < grid.height and _is_letter(grid.at(r + 1, c)):
                a = {id(p) for p in cell_owners.get((r, c), []) if p.direction == "down"}
                b = {id(p) for p in cell_owners.get((r + 1, c), []) if p.direction == "down"}
                if not (a & b):
                    out.append(Violation("ADJACENCY",
                                         "vertically touching letters without a shared down word",
                                         r, c))

    across = {(p.row, p.col): p.word.upper() for p in grid.placements if p.direction == "across"}
    down = {(p.row, p.col): p.word.upper() for p in grid.placements if p.direction == "down"}
    for row, col, text in _maximal_runs(grid, horizontal=True):
        if across.get((row, col)) != text:
            out.append(Violation("ACCIDENTAL_RUN",
                                 f"horizontal run {text!r} is not a placed word", row, col))
    for row, col, text in _maximal_runs(grid, horizontal=False):
        if down.get((row, col)) != text:
            out.append(Violation("ACCIDENTAL_RUN",
                                 f"vertical run {text!r} is not a placed word", row, col))

    for r in range(grid.height):
        for c in range(grid.width):
            if _is_letter(grid.at(r, c)) and (r, c) not in cell_owners:
                out.append(Violation("STRAY_CELL", "letter cell outside every placement", r, c))

    if grid.placements:
        index = {id(p): i for i, p in enumerate(grid.placements)}
        parent = list(range(len(grid.placements)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for owners in cell_owners.values():
            for other in owners[1:]:
                a, b = find(index[id(owners[0])]), find(index[id(other)])
                if a != b:
                    parent[a] = b
        roots = {find(i) for i in range(len(grid.placements))}
        if len(roots) > 1:
            out.append(Violation("CONNECTIVITY",
                                 f"placements form {len(roots)} disconnected groups"))
    return out


def _verify_wordsearch(grid: Grid) -> list[Violation]:
    out: list[Violation] = []
    for r in range(grid.height):
        for c in range(grid.width):
            if not _is_letter(grid.at(r, c)):
                out.append(Violation("FILL", "word-search cells must all be letters", r, c))
    for p in grid.placements:
        cells = _placement_cells_checked(grid, p, tuple(COMPASS), out, check_letters=False)
        if cells:
            scanned = "".join(grid.at(r, c) for r, c in cells)
            if scanned != p.word.upper():
                out.append(Violation("KEY_MISMATCH",
                                     f"answer key scans to {scanned!r}, expected {p.word.upper()!r}",
                                     p.row, p.col, p.word))
    return out


def verify_grid(grid: Grid, kind: str) -> list[Violation]:
    if kind == "crossword":
        return _verify_crossword(grid)
    if kind == "wordsearch":
        return _verify_wordsearch(grid)
    raise ValueError(f"unknown grid kind {kind!r}")
