"""Heuristic pronoun pre-resolution.

A third-person subject pronoun (he/she/it/they) at the start of a sentence
is replaced by the most recent noun phrase of matching number found in the
previous two sentences; noun phrases are capitalized token runs or
article/possessive + noun sequences, the head being the last token, and
plurality is judged by a trailing 's'. Anything unresolvable stays in
place and is reported. Substitutions log enough to reconstruct the
original text byte-exactly by applying them in reverse.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..textseg import sentence_spans, tokenize
from ..words import STOPWORDS
from .lexicon import NP_STARTERS, verb_lemmas

PRONOUN_NUMBER = {"he": "sg", "she": "sg", "it": "sg", "they": "pl"}

_WINDOW_SENTENCES = 2
_MAX_NP_BODY = 3


@dataclass(frozen=True)
class Substitution:
    start: int  # span in the resolved text
    end: int
    original: str  # the pronoun as it appeared
    replacement: str


@dataclass(frozen=True)
class ResolvedText:
    text: str
    substitutions: tuple[Substitution, ...]
    unresolved: tuple[tuple[int, int], ...]  # pronoun spans left unchanged


def _noun_phrases(tokens):
    """(start_char, end_char, head_text) for each shallow NP, left to right."""
    verbs = verb_lemmas()
    phrases = []
    used = [False] * len(tokens)
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        if tok.text.casefold() in NP_STARTERS:
            j = i + 1
            body = []
            while j < len(tokens) and len(body) < _MAX_NP_BODY:
                low = tokens[j].text.casefold()
                if (
                    not tokens[j].is_alpha
                    or low in STOPWORDS
                    or low in verbs
                    or low.endswith("ly")
                    or (len(low) > 4 and low.endswith("ed"))  # regular past tense
                ):
                    break
                body.append(tokens[j])
                j += 1
            if body:
                phrases.append((tok.start, body[-1].end, body[-1].text))
                for k in range(i, j):
                    used[k] = True
                i = j
                continue
        i += 1
    # capitalized runs outside article phrases (proper names)
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        if (
            not used[i]
            and tok.is_alpha
            and tok.text[0].isupper()
            and tok.text.casefold() not in STOPWORDS
        ):
            j = i
            while (
                j + 1 < len(tokens)
                and not used[j + 1]
                and tokens[j + 1].is_alpha
                and tokens[j + 1].text[0].isupper()
                and tokens[j + 1].text.casefold() not in STOPWORDS
            ):
                j += 1
            phrases.append((tok.start, tokens[j].end, tokens[j].text))
            i = j + 1
            continue
        i += 1
    phrases.sort()
    return phrases


def _plural(head: str) -> bool:
    h = head.casefold()
    return h.endswith("s") and not h.endswith("ss")


def _match_case(replacement: str, pronoun: str) -> str:
    if not replacement:
        return replacement
    if pronoun[0].isupper():
        return replacement[0].upper() + replacement[1:]
    return replacement[0].lower() + replacement[1:]


def resolve_pronouns(text: str) -> ResolvedText:
    if not text or not text.strip():
        return ResolvedText(text, (), ())
    spans = sentence_spans(text)
    events = []  # (start, end, original, replacement|None)
    for si, span in enumerate(spans):
        tokens = tokenize(span.slice(text), base=span.start)
        if not tokens:
            continue
        first = tokens[0]
        number = PRONOUN_NUMBER.get(first.text.casefold())
        if number is None:
            continue
        window_tokens = []
        for prev in spans[max(0, si - _WINDOW_SENTENCES) : si]:
            window_tokens.extend(tokenize(prev.slice(text), base=prev.start))
        candidates = [
            np for np in _noun_phrases(window_tokens) if _plural(np[2]) == (number == "pl")
        ]
        if not candidates:
            events.append((first.start, first.end, first.text, None))
            continue
        np_start, np_end, _ = candidates[-1]  # most recent
        replacement = _match_case(text[np_start:np_end], first.text)
        events.append((first.start, first.end, first.text, replacement))

    parts = []
    substitutions = []
    unresolved = []
    pos = 0
    delta = 0
    for start, end, original, replacement in events:
        if replacement is None:
            unresolved.append((start + delta, end + delta))
            continue
        parts.append(text[pos:start])
        parts.append(replacement)
        new_start = start + delta
        substitutions.append(Substitution(new_start, new_start + len(replacement), original, replacement))
        delta += len(replacement) - (end - start)
        pos = end
    parts.append(text[pos:])
    return ResolvedText("".join(parts), tuple(substitutions), tuple(unresolved))


def undo_substitutions(resolved: ResolvedText) -> str:
    """Reverse every substitution; returns the original text byte-exactly."""
    text = resolved.text
    for sub in reversed(resolved.substitutions):
        text = text[: sub.start] + sub.original + text[sub.end :]
    return text
