"""Template question generation, post-processing and grading.

Templates by role (candidates whose template cannot apply are skipped, with
the reason logged, rather than guessed at):

    agent     Who/What <predicate from the verb on>?   (Who for name-like)
    patient   What did <agent> <verb lemma>?           (needs an agent)
    location  Where did <agent> <verb lemma> [patient]?
    time      When did <agent> <verb lemma> [patient]?

Answers are always the exact resolved-text substring at the candidate span.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, replace

from ..errors import QaError
from ..words import ARTICLES
from .resolve import ResolvedText, resolve_pronouns
from .roles import RoleCandidate, parse_text, select_answer_candidates
from ..textseg import contains_token_sequence

logger = logging.getLogger(__name__)

_WS = re.compile(r"\s+")
_TERMINAL = re.compile(r"[\s.!?]+$")


@dataclass(frozen=True)
class QAItem:
    question: str
    answer: str
    answer_span: tuple[int, int] | None
    source_sentence_index: int
    role: str

    def to_record(self) -> dict:
        return {
            "question": self.question,
            "answer": self.answer,
            "answer_span": list(self.answer_span) if self.answer_span else None,
            "source_sentence_index": self.source_sentence_index,
            "role": self.role,
        }

    @classmethod
    def from_record(cls, rec: dict) -> "QAItem":
        span = rec.get("answer_span")
        return cls(
            rec["question"],
            rec["answer"],
            tuple(span) if span else None,
            rec.get("source_sentence_index", 0),
            rec.get("role", "agent"),
        )


def _agent_surface(text: str, parse) -> str:
    surface = text[parse.agent[0] : parse.agent[1]]
    if parse.agent_name_like or not surface:
        return surface
    return surface[0].lower() + surface[1:]


def _predicate(text: str, parse) -> str:
    raw = text[parse.verb.start : parse.span[1]]
    return _TERMINAL.sub("", raw)


def generate_questions(resolved: ResolvedText, candidates, skipped=None) -> list[QAItem]:
    """One QAItem per applicable candidate. `skipped`, when given, collects
    (role, sentence_index, reason) for diagnostics."""
    parses = {p.sentence_index: p for p in parse_text(resolved.text)}
    items = []
    for cand in candidates:
        parse = parses.get(cand.sentence_index)
        reason = None
        question = None
        if parse is None or parse.verb is None:
            reason = "no recognized verb"
        elif cand.role == "agent":
            qword = "Who" if parse.agent_name_like else "What"
            question = f"{qword} {_predicate(resolved.text, parse)}?"
        elif parse.agent is None:
            reason = f"{cand.role} without an agent"
        else:
            agent = _agent_surface(resolved.text, parse)
            tail = ""
            if cand.role in ("location", "time") and parse.patient is not None:
                tail = " " + resolved.text[parse.patient[0] : parse.patient[1]]
            if cand.role == "patient":
                question = f"What did {agent} {parse.verb_lemma}?"
            elif cand.role == "location":
                question = f"Where did {agent} {parse.verb_lemma}{tail}?"
            elif cand.role == "time":
                question = f"When did {agent} {parse.verb_lemma}{tail}?"
            else:
                reason = f"unknown role {cand.role!r}"
        if question is None:
            logger.info("skipping %s candidate in sentence %d: %s",
                        cand.role, cand.sentence_index, reason)
            if skipped is not None:
                skipped.append((cand.role, cand.sentence_index, reason))
            continue
        items.append(
            QAItem(
                question,
                resolved.text[cand.span[0] : cand.span[1]],
                cand.span,
                cand.sentence_index,
                cand.role,
            )
        )
    return items


def postprocess(items) -> list[QAItem]:
    """Format, dedupe and drop answer-leaking questions. Idempotent."""
    out = []
    seen = set()
    for item in items:
        q = _WS.sub(" ", item.question).strip()
        q = q.rstrip("?. !").rstrip()
        if not q:
            continue
        q = q[0].upper() + q[1:] + "?"
        if q in seen:
            continue
        if contains_token_sequence(q, item.answer):
            logger.info("dropping question containing its own answer: %r", q)
            continue
        seen.add(q)
        out.append(replace(item, question=q))
    return out


def normalize_answer(text: str) -> str:
    """Casefold, trim, collapse whitespace, strip one leading article and
    terminal punctuation."""
    t = _WS.sub(" ", text).strip().casefold()
    t = t.rstrip(".!?,;: ").strip()
    for article in ARTICLES:
        if t.startswith(article + " "):
            t = t[len(article) + 1 :]
            break
    return t.strip()


@dataclass(frozen=True)
class QaGrade:
    correct: bool


def check_qa_answer(item: QAItem, student_answer: str) -> QaGrade:
    return QaGrade(normalize_answer(student_answer) == normalize_answer(item.answer))


@dataclass(frozen=True)
class QaExercise:
    items: tuple[QAItem, ...]
    resolved: ResolvedText
    skipped: tuple[tuple, ...]  # (role, sentence_index, reason)


def build_qa_exercise(text: str) -> QaExercise:
    """Full pipeline: pronoun resolution, candidate selection, templates,
    post-processing."""
    if not text or not text.strip():
        raise QaError("input text is empty")
    resolved = resolve_pronouns(text)
    candidates = select_answer_candidates(resolved)
    skipped: list = []
    items = generate_questions(resolved, candidates, skipped)
    return QaExercise(tuple(postprocess(items)), resolved, tuple(skipped))
