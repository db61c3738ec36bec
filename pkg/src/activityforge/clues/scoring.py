"""Second extraction stage: clue-quality scoring and threshold filtering.

The default scorer is a deterministic heuristic standing behind the
ClueScorer interface, so a learned model can be plugged in later without
touching extraction. Scores are bounded to [0, 1] and pure.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Protocol, runtime_checkable

from ..errors import ExtractionError
from ..textseg import word_tokens
from ..words import PRONOUNS, STOPWORDS

DEFAULT_WEIGHTS = {
    "length": 0.30,        # clue length in tokens inside [3, 12]
    "no_pronoun": 0.20,    # clue carries no pronoun
    "noun_word": 0.20,     # definiendum looks like a noun
    "article_start": 0.15, # clue begins with an article or "to"
    "content_word": 0.15,  # clue has at least one non-stopword token
}

DEFAULT_THRESHOLD = 0.5

_GOOD_LEN_LO = 3
_GOOD_LEN_HI = 12
_CLUE_STARTERS = ("a", "an", "the", "to")


@runtime_checkable
class ClueScorer(Protocol):
    def score(self, candidate, sentence: str) -> float: ...


def _length_feature(n_tokens: int) -> float:
    """1.0 inside [3, 12]; linear falloff to 0 at 0 tokens and at 24 tokens."""
    if _GOOD_LEN_LO <= n_tokens <= _GOOD_LEN_HI:
        return 1.0
    if n_tokens < _GOOD_LEN_LO:
        return n_tokens / _GOOD_LEN_LO
    return max(0.0, (2 * _GOOD_LEN_HI - n_tokens) / _GOOD_LEN_HI)


def _noun_like(word: str) -> bool:
    if len(word) < 2 or word in STOPWORDS:
        return False
    if word.endswith("ly"):
        return False
    if len(word) > 4 and (word.endswith("ing") or word.endswith("ed")):
        return False
    return True


@dataclass(frozen=True)
class HeuristicScorer:
    """Weighted sum of five bounded features; weights must sum to <= 1."""

    weights: dict = field(default_factory=lambda: dict(DEFAULT_WEIGHTS))

    def score(self, candidate, sentence: str) -> float:
        tokens = [t.casefold() for t in word_tokens(candidate.clue)]
        features = {
            "length": _length_feature(len(tokens)),
            "no_pronoun": 0.0 if any(t in PRONOUNS for t in tokens) else 1.0,
            "noun_word": 1.0 if _noun_like(candidate.word) else 0.0,
            "article_start": 1.0 if tokens and tokens[0] in _CLUE_STARTERS else 0.0,
            "content_word": 1.0 if any(t not in STOPWORDS for t in tokens) else 0.0,
        }
        total = sum(self.weights.get(name, 0.0) * value for name, value in features.items())
        return min(1.0, max(0.0, total))


def score_and_filter(candidates, scorer: ClueScorer | None = None, threshold: float = DEFAULT_THRESHOLD):
    """Attach scores and the accepted flag; keeps every candidate so a review
    UI can show the rejected ones greyed out."""
    if not 0.0 <= threshold <= 1.0:
        raise ExtractionError(f"threshold {threshold} outside [0, 1]")
    if scorer is None:
        scorer = HeuristicScorer()
    out = []
    for cand in candidates:
        s = float(scorer.score(cand, cand.clue))
        s = min(1.0, max(0.0, s))
        out.append(replace(cand, score=s, accepted=s >= threshold))
    return out
