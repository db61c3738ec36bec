"""First extraction stage: apply the pattern catalog sentence by sentence.

Produces unscored ClueCandidates; the second stage (scoring.py) attaches
quality scores and the accepted flag.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import ExtractionError
from ..textseg import contains_token, sentence_spans, word_tokens
from ..words import FUNCTION_WORDS, normalize_word
from .patterns import PatternCatalog, default_catalog

_TRAIL_PUNCT = re.compile(r"[\s.,;:!?]+$")
_WS = re.compile(r"\s+")


@dataclass(frozen=True)
class ClueCandidate:
    word: str
    clue: str
    pattern_id: str
    source_span: tuple[int, int]  # sentence span in the input text
    score: float | None = None
    accepted: bool = False


def _clean_clue(raw: str) -> str:
    return _WS.sub(" ", _TRAIL_PUNCT.sub("", raw)).strip()


def _blank_word(clue: str, word: str) -> str:
    # blank the definiendum rather than dropping the rest of the definition
    pattern = re.compile(rf"\b{re.escape(word)}\b", re.IGNORECASE)
    return pattern.sub("___", clue)


def _candidate_from_match(match, pattern, span) -> ClueCandidate | None:
    word = normalize_word(match.group("word"))
    if word is None or len(word) < 2 or word in FUNCTION_WORDS:
        return None
    clue = _clean_clue(match.group("clue"))
    if pattern.clue_prefix:
        tokens = word_tokens(clue)
        if not tokens or tokens[0].casefold() not in pattern.clue_prefix:
            return None
    if contains_token(clue, word):
        clue = _blank_word(clue, word)
    if not word_tokens(clue):
        return None
    return ClueCandidate(word, clue, pattern.pattern_id, (span.start, span.end))


def extract_candidates(text: str, catalog: PatternCatalog | None = None) -> list[ClueCandidate]:
    """Apply every catalog pattern to every sentence of `text`.

    Per sentence each pattern contributes at most its first match, so one
    sentence can still yield several candidates through different patterns.
    Candidates come back ordered by sentence start, then catalog precedence.
    """
    if not text or not text.strip():
        raise ExtractionError("input text is empty")
    if catalog is None:
        catalog = default_catalog()
    candidates: list[ClueCandidate] = []
    for span in sentence_spans(text):
        sentence = span.slice(text)
        for pattern in catalog.patterns:
            match = pattern.regex.search(sentence)
            if match is None:
                continue
            candidate = _candidate_from_match(match, pattern, span)
            if candidate is not None:
                candidates.append(candidate)
    return candidates
