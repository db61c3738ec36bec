"""Word-search grid construction with an answer key.

Output is a total function of (words, size, directions, seed). Words may
accidentally occur more than once after the letterfill; the answer key is
canonical and the player UI accepts any true occurrence.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import GridError, PlacementBudgetError
from ..words import normalize_word
from . import kernel
from .grid import COMPASS, COMPASS_ORDER, MAX_GRID, Grid, Placement

DEFAULT_DIRECTIONS = ("e", "s", "se")
DEFAULT_ATTEMPTS = 20


@dataclass(frozen=True)
class WordsearchResult:
    grid: Grid
    answer_key: tuple[Placement, ...]


def build_wordsearch(
    words,
    size: int,
    directions=DEFAULT_DIRECTIONS,
    seed: int = 0,
    attempts: int = DEFAULT_ATTEMPTS,
) -> WordsearchResult:
    if not (2 <= size <= MAX_GRID):
        raise GridError(f"size must be within 2..{MAX_GRID}")
    if not words:
        raise GridError("word search needs at least one word")
    dirs = [d for d in COMPASS_ORDER if d in set(directions)]
    if len(dirs) != len(set(directions)):
        unknown = set(directions) - set(COMPASS)
        raise GridError(f"unknown directions {sorted(unknown)}")
    if not dirs:
        raise GridError("need at least one direction")

    normed: list[str] = []
    for word in words:
        norm = normalize_word(word)
        if norm is None or len(norm) < 2:
            raise GridError(f"word {word!r} fails normalization (need 2+ letters A-Z)")
        if len(norm) > size:
            raise GridError(f"word {norm!r} (length {len(norm)}) cannot fit in a {size}x{size} grid")
        if norm in normed:
            raise GridError(f"duplicate word {norm!r}")
        normed.append(norm)

    ordered = sorted(normed, key=lambda w: (-len(w), w))
    layout = kernel.wordsearch_layout(
        [w.upper() for w in ordered], size, [COMPASS[d] for d in dirs], seed, attempts
    )
    if layout is None:
        raise PlacementBudgetError(
            f"could not place {len(ordered)} word(s) in a {size}x{size} grid "
            f"after {attempts} attempts"
        )
    rows, raw_placements, _ = layout
    key = tuple(
        Placement(ordered[wi], r, c, dirs[di]) for wi, r, c, di in raw_placements
    )
    return WordsearchResult(Grid(size, size, tuple(rows), key), key)
