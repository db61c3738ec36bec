"""Story-ordering exercise: rank sentences, pick the most salient, shuffle.

Scoring formula (this package's definition, documented for reproducibility):
a token scores its document-wide occurrence count when it is alphabetic and
not a stopword, else 0; a sentence's score is the sum of its token scores
divided by (word-token count + 1). Frequencies are document-global, so
reordering whole sentences never changes any sentence's score.

The shuffle is Fisher-Yates with the request seed; when it lands on the
identity permutation the seed is bumped by one and the shuffle repeated,
so the exercise is never shown pre-solved.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, replace

from .errors import StoryError
from .rng import Rng
from .textseg import split_sentences, word_tokens
from .words import STOPWORDS

MIN_SENTENCES = 3


@dataclass(frozen=True)
class ScoredSentence:
    index: int
    text: str
    score: float
    selected: bool = False


@dataclass(frozen=True)
class StoryExercise:
    sentences: tuple[str, ...]    # selected sentences, original order
    shown_order: tuple[int, ...]  # display slot -> index into `sentences`
    seed: int


def score_sentences(text: str, stopwords=STOPWORDS) -> list[ScoredSentence]:
    sentences = split_sentences(text)
    if not sentences:
        raise StoryError("text has no sentences")
    all_tokens = [t.casefold() for t in word_tokens(text)]
    freq = Counter(t for t in all_tokens if t.isalpha())
    scored = []
    for i, sentence in enumerate(sentences):
        tokens = [t.casefold() for t in word_tokens(sentence)]
        gain = sum(freq[t] for t in tokens if t.isalpha() and t not in stopwords)
        scored.append(ScoredSentence(i, sentence, gain / (len(tokens) + 1)))
    return scored


def rank_and_select(text: str, n_sentences: int, stopwords=STOPWORDS):
    """(scored sentences with `selected` set, selected indices ascending)."""
    scored = score_sentences(text, stopwords)
    ranked = sorted(scored, key=lambda s: (-s.score, s.index))
    chosen = sorted(s.index for s in ranked[:n_sentences])
    chosen_set = set(chosen)
    return [replace(s, selected=s.index in chosen_set) for s in scored], chosen


def build_story_exercise(text: str, n_sentences: int, seed: int, stopwords=STOPWORDS) -> StoryExercise:
    if n_sentences < MIN_SENTENCES:
        raise StoryError(f"need at least {MIN_SENTENCES} sentences, requested {n_sentences}")
    scored = score_sentences(text, stopwords)
    if len(scored) < n_sentences:
        raise StoryError(
            f"text has {len(scored)} sentence(s), exercise needs {n_sentences}"
        )
    _, chosen = rank_and_select(text, n_sentences, stopwords)
    sentences = tuple(scored[i].text for i in chosen)

    order = list(range(n_sentences))
    bump = 0
    while True:
        order = list(range(n_sentences))
        Rng(seed + bump).shuffle(order)
        if order != sorted(order):
            break
        bump += 1  # n >= 3 guarantees a non-identity shuffle eventually
    return StoryExercise(sentences, tuple(order), seed)


@dataclass(frozen=True)
class StoryGrade:
    correct: bool
    first_error_position: int | None


def check_story_answer(exercise: StoryExercise, proposed) -> StoryGrade:
    """Grade a player's ordering.

    proposed[k] names the shown-position whose card the player put at slot k;
    the answer is correct when that recovers the original sentence order
    (i.e. proposed is the inverse of shown_order).
    """
    n = len(exercise.shown_order)
    order = list(proposed)
    if sorted(order) != list(range(n)):
        raise StoryError(f"proposed order is not a permutation of 0..{n - 1}")
    applied = [exercise.shown_order[p] for p in order]
    for k, v in enumerate(applied):
        if v != k:
            return StoryGrade(False, k)
    return StoryGrade(True, None)
