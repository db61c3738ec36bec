"""Shallow semantic-role candidate selection.

One documented token-pattern grammar drives both answer-candidate selection
and question generation: noun phrases are article/possessive + noun runs,
the verb is the first token found in the closed past-tense table, the agent
is the NP directly before the verb and the patient the NP directly after
it. Locations are NPs after a locative preposition (the preposition stays
outside the span); times are temporal cue phrases (preposition included,
matching the "in 1990" shape). On span conflicts the precedence is
agent > patient > location > time.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..textseg import Token, sentence_spans, tokenize
from ..words import STOPWORDS
from .lexicon import NP_STARTERS, cues, is_temporal_noun, is_year, verb_lemmas

ROLE_PRECEDENCE = ("agent", "patient", "location", "time")

_MAX_NP_BODY = 3

# directional particles and pro-adverbs that look like objects but are not
_PARTICLES = frozenset(
    "away back off out up down here there home again around along".split()
)


@dataclass(frozen=True)
class RoleCandidate:
    span: tuple[int, int]  # character span into the resolved text
    role: str
    sentence_index: int


@dataclass(frozen=True)
class SentenceParse:
    sentence_index: int
    span: tuple[int, int]
    verb: Token | None = None
    verb_lemma: str | None = None
    agent: tuple[int, int] | None = None
    agent_name_like: bool = False
    patient: tuple[int, int] | None = None
    location: tuple[int, int] | None = None
    time: tuple[int, int] | None = None

    def role_span(self, role: str):
        return getattr(self, role)


def _np_before(tokens, verb_idx):
    """NP ending right before the verb: (span, name_like) or (None, False)."""
    j = verb_idx - 1
    body = []
    while j >= 0 and len(body) < _MAX_NP_BODY:
        tok = tokens[j]
        if not tok.is_alpha or tok.text.casefold() in STOPWORDS:
            break
        body.append(tok)
        j -= 1
    if not body:
        return None, False
    start = body[-1].start
    starter = None
    if j >= 0 and tokens[j].text.casefold() in NP_STARTERS:
        starter = tokens[j]
        start = starter.start
    name_like = starter is None and all(t.text[0].isupper() for t in body)
    return (start, body[0].end), name_like


def _np_after(tokens, idx, stop_words=frozenset()):
    """NP starting at tokens[idx]: optional starter + alpha run."""
    j = idx
    starter = None
    if j < len(tokens) and tokens[j].text.casefold() in NP_STARTERS:
        starter = tokens[j]
        j += 1
    body = []
    while j < len(tokens) and len(body) < _MAX_NP_BODY:
        tok = tokens[j]
        low = tok.text.casefold()
        if (
            not tok.is_alpha
            or low in STOPWORDS
            or low in stop_words
            or low in _PARTICLES
            or low.endswith("ly")
        ):
            break
        body.append(tok)
        j += 1
    if not body:
        return None
    start = starter.start if starter is not None else body[0].start
    return (start, body[-1].end)


def _time_phrase(tokens, idx, cue_table):
    tok = tokens[idx]
    low = tok.text.casefold()
    if low in cue_table["standalone_temporal"]:
        return (tok.start, tok.end)
    if low in cue_table["temporal_prepositions"] and idx + 1 < len(tokens):
        j = idx + 1
        if tokens[j].text.casefold() in NP_STARTERS and j + 1 < len(tokens):
            j += 1
        nxt = tokens[j]
        if is_year(nxt.text) or is_temporal_noun(nxt.text, cue_table):
            return (tok.start, nxt.end)
    return None


def parse_sentence(tokens, sentence_index: int, span) -> SentenceParse:
    lemmas = verb_lemmas()
    cue_table = cues()
    parse = SentenceParse(sentence_index, span)

    verb = None
    verb_idx = None
    for i, tok in enumerate(tokens):
        if tok.is_word and tok.text.casefold() in lemmas:
            verb, verb_idx = tok, i
            break

    agent = None
    name_like = False
    patient = None
    if verb is not None:
        agent, name_like = _np_before(tokens, verb_idx)
        patient = _np_after(tokens, verb_idx + 1, cue_table["locative_prepositions"])

    location = None
    for i, tok in enumerate(tokens):
        if tok.text.casefold() not in cue_table["locative_prepositions"]:
            continue
        if _time_phrase(tokens, i, cue_table) is not None:
            continue  # temporal phrase, the time detector owns it
        np = _np_after(tokens, i + 1)
        if np is not None:
            location = np
            break

    time_span = None
    for i in range(len(tokens)):
        time_span = _time_phrase(tokens, i, cue_table)
        if time_span is not None:
            break

    # precedence on overlaps: agent > patient > location > time
    kept: list[tuple[int, int]] = []

    def _keep(span_):
        if span_ is None:
            return None
        if any(span_[0] < e and s < span_[1] for s, e in kept):
            return None
        kept.append(span_)
        return span_

    agent = _keep(agent)
    patient = _keep(patient)
    location = _keep(location)
    time_span = _keep(time_span)

    return SentenceParse(
        sentence_index,
        span,
        verb,
        lemmas.get(verb.text.casefold()) if verb is not None else None,
        agent,
        name_like if agent is not None else False,
        patient,
        location,
        time_span,
    )


def parse_text(resolved_text: str) -> list[SentenceParse]:
    parses = []
    for si, span in enumerate(sentence_spans(resolved_text)):
        tokens = tokenize(span.slice(resolved_text), base=span.start)
        parses.append(parse_sentence(tokens, si, (span.start, span.end)))
    return parses


def select_answer_candidates(resolved) -> list[RoleCandidate]:
    """Role-labelled answer spans per sentence, non-overlapping by precedence."""
    out = []
    for parse in parse_text(resolved.text):
        for role in ROLE_PRECEDENCE:
            span = parse.role_span(role)
            if span is not None:
                out.append(RoleCandidate(span, role, parse.sentence_index))
    out.sort(key=lambda c: (c.sentence_index, c.span[0]))
    return out
