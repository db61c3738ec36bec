"""The compiled and pure kernels must return bit-identical results.

These tests drive both backends over seeded random inputs; they skip when
the extension was not built (pure-only installs are supported)."""

import pytest

from activityforge.puzzle import kernel
from activityforge.puzzle._purekernel import _Rng as PureRng
from activityforge.rng import Rng

backends = kernel.available_backends()
needs_compiled = pytest.mark.skipif(
    "compiled" not in backends, reason="compiled kernel not built"
)

_POOL_XW = [
    "GRAPE", "APPLE", "PEACH", "LEMON", "MELON", "MANGO", "PLUM", "PEAR",
    "CHERRY", "BANANA", "ORANGE", "TOMATO", "CARROT", "ONION", "POTATO",
    "RADISH", "CELERY", "GARLIC",
]
_POOL_WS = ["CAT", "DOG", "OWL", "FOX", "HEN", "BAT", "HORSE", "SHEEP", "GOAT", "MOUSE"]
_DIRSETS = [
    [(0, 1)],
    [(0, 1), (1, 0)],
    [(0, 1), (1, 0), (1, 1)],
    [(0, 1), (1, 1), (1, 0), (1, -1), (0, -1), (-1, -1), (-1, 0), (-1, 1)],
]


def _word_sample(seed, pool, k_max):
    rng = Rng(seed)
    idxs = list(range(len(pool)))
    rng.shuffle(idxs)
    count = 1 + rng.below(k_max)
    return sorted((pool[i] for i in idxs[:count]), key=lambda w: (-len(w), w))


def test_backend_reported():
    assert kernel.BACKEND in backends


def test_embedded_rng_matches_package_rng():
    ours = Rng(12345)
    theirs = PureRng(12345)
    assert [ours.next_u64() for _ in range(50)] == [theirs.next_u64() for _ in range(50)]


@needs_compiled
@pytest.mark.parametrize("case", range(60))
def test_crossword_layout_parity(case):
    words = _word_sample(case * 17 + 1, _POOL_XW, 11)
    args = (words, 25, 50_000, case)
    assert backends["pure"].crossword_layout(*args) == backends["compiled"].crossword_layout(*args)


@needs_compiled
@pytest.mark.parametrize("case", range(60))
def test_wordsearch_layout_parity(case):
    words = _word_sample(case * 23 + 5, _POOL_WS, 7)
    rng = Rng(case)
    size = 8 + rng.below(8)
    dirs = _DIRSETS[case % len(_DIRSETS)]
    a = backends["pure"].wordsearch_layout(words, size, dirs, case)
    b = backends["compiled"].wordsearch_layout(words, size, dirs, case)
    assert a == b


@needs_compiled
def test_tight_budget_parity():
    words = sorted(_POOL_XW[:12], key=lambda w: (-len(w), w))
    for budget in (25, 100, 1000):
        a = backends["pure"].crossword_layout(words, 12, budget, 3)
        b = backends["compiled"].crossword_layout(words, 12, budget, 3)
        assert a == b


@needs_compiled
def test_small_grid_parity():
    words = ["ANT", "TEA", "EAT", "NET"]
    for seed in range(20):
        a = backends["pure"].crossword_layout(words, 5, 50_000, seed)
        b = backends["compiled"].crossword_layout(words, 5, 50_000, seed)
        assert a == b
