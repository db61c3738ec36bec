"""Crossword construction from <word, clue> pairs.

Words are placed longest first; when fewer than min_words fit and a
vocabulary with top-up tags is available, extra database entries are drawn
deterministically by seed and the layout is retried with the larger pool.
Unplaceable words are always reported back, never dropped.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import GridError
from ..rng import Rng, derive_seed
from ..vocab.models import query_by_tags
from ..words import normalize_word
from . import kernel
from .grid import MAX_GRID, Grid, Placement

DEFAULT_BUDGET = 50_000
DEFAULT_MIN_WORDS = 8

_TOPUP_ROUNDS = 8


@dataclass(frozen=True)
class CrosswordSpec:
    entries: tuple[tuple[str, str], ...]  # (word, clue)
    max_grid: int = MAX_GRID
    seed: int = 0
    min_words: int = DEFAULT_MIN_WORDS
    topup_tags: frozenset[str] | None = None


@dataclass(frozen=True)
class CrosswordResult:
    grid: Grid
    unplaced: tuple[str, ...]
    topup_words: tuple[str, ...]
    expansions: int


def _normalize_entries(entries) -> dict[str, str]:
    clues: dict[str, str] = {}
    for word, clue in entries:
        norm = normalize_word(word)
        if norm is None or not (2 <= len(norm) <= 24):
            raise GridError(f"word {word!r} fails normalization (need 2-24 letters A-Z)")
        if norm in clues:
            raise GridError(f"duplicate word {norm!r}")
        clues[norm] = clue
    return clues


def _layout_order(words) -> list[str]:
    return sorted(words, key=lambda w: (-len(w), w))


def _topup_pool(vocab, tags, exclude: set[str]) -> list[tuple[str, str]]:
    pool = []
    for entry in query_by_tags(vocab, tags, mode="any"):
        if entry.word in exclude or not (2 <= len(entry.word) <= 24):
            continue
        if not entry.definitions:
            continue
        pool.append((entry.word, entry.definitions[0]))
    return pool


def build_crossword(spec: CrosswordSpec, vocab=None, budget: int = DEFAULT_BUDGET) -> CrosswordResult:
    """Lay out the spec's words; top up from `vocab` when required and possible."""
    if not spec.entries:
        raise GridError("crossword needs at least one entry")
    if not (2 <= spec.max_grid <= MAX_GRID):
        raise GridError(f"max_grid must be within 2..{MAX_GRID}")
    clues = _normalize_entries(spec.entries)

    topup_words: list[str] = []
    pool_iter = None
    if vocab is not None and spec.topup_tags:
        pool = _topup_pool(vocab, spec.topup_tags, set(clues))
        order = Rng(derive_seed(spec.seed, 1))
        order.shuffle(pool)
        pool_iter = iter(pool)

    while True:
        ordered = _layout_order(clues)
        placements, unplaced_idx, expansions = kernel.crossword_layout(
            [w.upper() for w in ordered], spec.max_grid, budget, spec.seed
        )
        placed_count = len(placements)
        if placed_count >= spec.min_words or pool_iter is None:
            break
        # paper-style top-up: complete the puzzle with database words
        needed = spec.min_words - placed_count
        added = 0
        for word, definition in pool_iter:
            clues[word] = definition
            topup_words.append(word)
            added += 1
            if added >= needed:
                break
        if added == 0:
            break
        if len(topup_words) > _TOPUP_ROUNDS * spec.min_words:
            break

    if not placements:
        raise GridError("no word placeable within the search budget")

    min_width = max(p[2] + (len(ordered[p[0]]) if p[3] == 0 else 1) for p in placements)
    min_height = max(p[1] + (len(ordered[p[0]]) if p[3] == 1 else 1) for p in placements)
    rows = [["."] * min_width for _ in range(min_height)]
    grid_placements = []
    for word_idx, row, col, direction in placements:
        word = ordered[word_idx]
        for i, ch in enumerate(word.upper()):
            if direction == 0:
                rows[row][col + i] = ch
            else:
                rows[row + i][col] = ch
        grid_placements.append(
            Placement(word, row, col, "across" if direction == 0 else "down", clues[word])
        )
    grid = Grid(
        min_width,
        min_height,
        tuple("".join(r) for r in rows),
        tuple(sorted(grid_placements, key=lambda p: (p.row, p.col, p.direction))),
    )
    unplaced = tuple(sorted(ordered[i] for i in unplaced_idx))
    return CrosswordResult(grid, unplaced, tuple(topup_words), expansions)
