"""Shared sentence segmentation and tokenization.

One segmenter is used by clue extraction, the story game and Q&A generation
so that spans and sentence indices agree across modules.

Segmentation rule: a sentence ends at '.', '!' or '?' (plus any immediately
following closing quotes or brackets) when the terminator is followed by
whitespace and an uppercase letter, a digit or an opening quote, or by the
end of the text. A '.' does not end a sentence when the word before it is a
known abbreviation, a single letter (initials) or another '.' (ellipsis).
Sentence spans never include leading or trailing whitespace.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

ABBREVIATIONS = frozenset(
    "mr mrs ms dr prof sr jr st vs etc fig no inc ltd co eg ie al".split()
)

_CLOSERS = "\"')]”’"
_OPENERS = "\"'([“‘"

# words (with internal apostrophes/hyphens), numbers, or single other glyphs
_TOKEN_RE = re.compile(r"[A-Za-z]+(?:['’-][A-Za-z]+)*|\d+|[^\sA-Za-z\d]")

_WORD_RE = re.compile(r"[A-Za-z]+(?:['’-][A-Za-z]+)*$")


@dataclass(frozen=True)
class Span:
    start: int
    end: int  # exclusive

    def slice(self, text: str) -> str:
        return text[self.start : self.end]


@dataclass(frozen=True)
class Token:
    text: str
    start: int
    end: int

    @property
    def is_word(self) -> bool:
        return bool(_WORD_RE.match(self.text))

    @property
    def is_alpha(self) -> bool:
        return self.text.replace("'", "").replace("’", "").replace("-", "").isalpha()


def _word_before(text: str, pos: int) -> str:
    """Letters immediately preceding text[pos], lowercased."""
    i = pos
    while i > 0 and text[i - 1].isalpha():
        i -= 1
    return text[i:pos].lower()


def _is_boundary(text: str, term: int) -> int | None:
    """If the terminator at `term` ends a sentence, return the end offset
    (past trailing closers), else None."""
    ch = text[term]
    if ch == ".":
        prev = _word_before(text, term)
        if prev in ABBREVIATIONS or len(prev) == 1:
            return None
        # ellipsis: only the last dot may close
        if term + 1 < len(text) and text[term + 1] == ".":
            return None
    end = term + 1
    while end < len(text) and text[end] in _CLOSERS:
        end += 1
    if end >= len(text):
        return end
    if not text[end].isspace():
        return None
    j = end
    while j < len(text) and text[j].isspace():
        j += 1
    if j >= len(text):
        return end
    nxt = text[j]
    if nxt in _OPENERS:
        j += 1
        if j >= len(text):
            return end
        nxt = text[j]
    if nxt.isupper() or nxt.isdigit():
        return end
    return None


def sentence_spans(text: str) -> list[Span]:
    """Spans of the sentences of `text`, in order."""
    spans: list[Span] = []
    start = 0
    i = 0
    n = len(text)
    while i < n:
        if text[i] in ".!?":
            end = _is_boundary(text, i)
            if end is not None:
                while start < end and text[start].isspace():
                    start += 1
                if start < end:
                    spans.append(Span(start, end))
                start = end
                i = end
                continue
        i += 1
    # trailing material without a terminator
    end = n
    while end > start and text[end - 1].isspace():
        end -= 1
    while start < end and text[start].isspace():
        start += 1
    if start < end:
        spans.append(Span(start, end))
    return spans


def split_sentences(text: str) -> list[str]:
    return [s.slice(text) for s in sentence_spans(text)]


def tokenize(text: str, base: int = 0) -> list[Token]:
    """Tokens with character offsets; `base` shifts offsets (for sentence slices)."""
    return [
        Token(m.group(0), base + m.start(), base + m.end())
        for m in _TOKEN_RE.finditer(text)
    ]


def word_tokens(text: str) -> list[str]:
    """Just the word-level tokens (letters/digits), punctuation dropped."""
    return [t.text for t in tokenize(text) if t.is_word]


def contains_token(haystack: str, word: str) -> bool:
    """True if `word` occurs in `haystack` as a standalone token (case-folded)."""
    w = word.casefold()
    return any(t.text.casefold() == w for t in tokenize(haystack))


def contains_token_sequence(haystack: str, phrase: str) -> bool:
    """True if the word tokens of `phrase` occur contiguously in `haystack`
    (case-folded, punctuation ignored)."""
    target = [w.casefold() for w in word_tokens(phrase)]
    if not target:
        return False
    hay = [w.casefold() for w in word_tokens(haystack)]
    k = len(target)
    return any(hay[i : i + k] == target for i in range(len(hay) - k + 1))
