from .resolve import ResolvedText, Substitution, resolve_pronouns, undo_substitutions
from .roles import RoleCandidate, select_answer_candidates
from .questions import (
    QAItem,
    QaExercise,
    build_qa_exercise,
    check_qa_answer,
    generate_questions,
    normalize_answer,
    postprocess,
)

__all__ = [
    "QAItem",
    "QaExercise",
    "ResolvedText",
    "RoleCandidate",
    "Substitution",
    "build_qa_exercise",
    "check_qa_answer",
    "generate_questions",
    "normalize_answer",
    "postprocess",
    "resolve_pronouns",
    "select_answer_candidates",
    "undo_substitutions",
]
