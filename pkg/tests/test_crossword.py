import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from activityforge.errors import GridError
from activityforge.puzzle import CrosswordSpec, build_crossword, verify_grid
from activityforge.vocab import load_vocabulary

from conftest import make_vocab_lines


def spec_of(words, **kw):
    return CrosswordSpec(entries=tuple((w, f"clue for word {i}") for i, w in enumerate(words)), **kw)


def test_single_word_layout():
    result = build_crossword(spec_of(["cat"], min_words=1, seed=0))
    grid = result.grid
    assert result.unplaced == ()
    assert {grid.width, grid.height} == {1, 3}
    assert len(grid.placements) == 1
    assert verify_grid(grid, "crossword") == []


def intersecting_layout_exists(a, b):
    """Oracle: brute force over every relative placement of two words."""
    a, b = a.upper(), b.upper()
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            if ca == cb:
                return True
    return False


def test_two_words_cross_on_shared_letter():
    # oracle confirms an intersecting layout exists for cat/car
    assert intersecting_layout_exists("cat", "car")
    result = build_crossword(spec_of(["cat", "car"], min_words=2, seed=1))
    grid = result.grid
    assert result.unplaced == ()
    assert len(grid.placements) == 2
    assert verify_grid(grid, "crossword") == []
    directions = {p.direction for p in grid.placements}
    assert directions == {"across", "down"}
    # they share exactly one cell
    cells = [set(p.cells()) for p in grid.placements]
    assert len(cells[0] & cells[1]) == 1


def test_disjoint_words_report_unplaced():
    # oracle: no shared letter, no intersecting placement exists
    assert not intersecting_layout_exists("dog", "cat")
    result = build_crossword(spec_of(["dog", "cat"], min_words=2, seed=0))
    assert len(result.grid.placements) == 1
    assert len(result.unplaced) == 1
    placed_word = result.grid.placements[0].word
    assert {placed_word} | set(result.unplaced) == {"dog", "cat"}
    assert verify_grid(result.grid, "crossword") == []


def test_unplaced_words_never_dropped():
    words = ["cat", "car", "art", "xyz"]  # xyz shares no letter with the rest
    result = build_crossword(spec_of(words, min_words=1, seed=3))
    placed = {p.word for p in result.grid.placements}
    assert placed | set(result.unplaced) == set(words)
    assert "xyz" in result.unplaced


def test_word_normalization_errors():
    with pytest.raises(GridError, match="normalization"):
        build_crossword(spec_of(["a"]))
    with pytest.raises(GridError, match="normalization"):
        build_crossword(spec_of(["two words"]))
    with pytest.raises(GridError, match="duplicate"):
        build_crossword(spec_of(["cat", "CAT"]))
    with pytest.raises(GridError):
        build_crossword(CrosswordSpec(entries=()))


def test_clues_attached_to_placements():
    result = build_crossword(spec_of(["cat", "car"], min_words=2, seed=1))
    for p in result.grid.placements:
        assert p.clue.startswith("clue for word")


def test_determinism():
    words = ["grape", "apple", "peach", "lemon", "melon", "plum"]
    a = build_crossword(spec_of(words, seed=42, min_words=3))
    b = build_crossword(spec_of(words, seed=42, min_words=3))
    assert a == b


def test_max_grid_respected():
    words = ["windowpane", "pomegranate", "grasshopper", "thunderstorm"]
    result = build_crossword(spec_of(words, max_grid=12, seed=5, min_words=1))
    assert result.grid.width <= 12 and result.grid.height <= 12


def test_topup_from_vocabulary():
    vocab = load_vocabulary(make_vocab_lines([
        ("cat", ["animals"], "a purring pet"),
        ("rat", ["animals"], "a long-tailed rodent"),
        ("tar", ["animals"], "sticky black stuff"),
        ("art", ["animals"], "paintings and drawings"),
        ("toad", ["animals"], "a warty hopper"),
    ]))
    spec = CrosswordSpec(
        entries=(("car", "you drive it"),),
        min_words=3,
        seed=9,
        topup_tags=frozenset({"animals"}),
    )
    result = build_crossword(spec, vocab)
    assert len(result.grid.placements) >= 3
    assert len(result.topup_words) >= 2
    assert verify_grid(result.grid, "crossword") == []
    # the original word is still there
    assert "car" in {p.word for p in result.grid.placements}
    # top-up words carry their first definition as clue
    by_word = {p.word: p.clue for p in result.grid.placements}
    for word in result.topup_words:
        if word in by_word and word != "car":
            assert by_word[word] == vocab.get(word).definitions[0]


def test_no_topup_without_tags():
    vocab = load_vocabulary(make_vocab_lines([("cat", ["animals"], "a purring pet")]))
    spec = CrosswordSpec(entries=(("car", "you drive it"),), min_words=3, seed=9)
    result = build_crossword(spec, vocab)
    assert result.topup_words == ()


_WORD_POOL = [
    "grape", "apple", "peach", "lemon", "melon", "mango", "plum", "pear",
    "cherry", "banana", "orange", "papaya", "tomato", "carrot", "onion",
    "potato", "radish", "celery", "garlic", "ginger",
]


@given(
    st.lists(st.sampled_from(_WORD_POOL), min_size=3, max_size=12, unique=True),
    st.integers(min_value=0, max_value=2**32),
)
@settings(max_examples=40, deadline=None)
def test_random_sets_always_verify(words, seed):
    result = build_crossword(spec_of(words, seed=seed, min_words=1))
    assert verify_grid(result.grid, "crossword") == []
    placed = {p.word for p in result.grid.placements}
    assert placed | set(result.unplaced) == set(words)
    assert placed.isdisjoint(result.unplaced)
