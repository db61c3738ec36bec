"""Exception hierarchy shared across the package."""


class ForgeError(Exception):
    """Base class for all domain errors."""


class VocabularyError(ForgeError):
    """Invalid vocabulary data (malformed line, duplicate word, leaking definition)."""


class ExpansionError(ForgeError):
    """Category expansion cannot run (unknown category, missing embeddings)."""


class ReviewError(ForgeError):
    """Invalid review action (double review, accept without definition)."""


class ExtractionError(ForgeError):
    """Clue extraction preconditions violated (empty text, bad catalog)."""


class GridError(ForgeError):
    """Puzzle construction failure (unplaceable words, invalid grid input)."""


class PlacementBudgetError(GridError):
    """Word-search or crossword search budget exhausted before success."""


class StoryError(ForgeError):
    """Story exercise preconditions violated (too few sentences, bad permutation)."""


class QaError(ForgeError):
    """Q&A pipeline preconditions violated."""


class ActivityError(ForgeError):
    """Generic activity-service error."""


class NotFoundError(ActivityError):
    """Unknown activity or vocabulary item."""


class LifecycleError(ActivityError):
    """Operation not allowed in the activity's current state."""


class AuthError(ActivityError):
    """Missing or insufficient credentials."""


class EditRejected(ActivityError):
    """A patch was rejected because the edited activity fails verification."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__(f"edit rejected: {len(self.violations)} violation(s)")


class InsufficientVocabularyError(ActivityError):
    """Not enough matching vocabulary entries to generate the requested activity."""


class GenerationTimeout(ActivityError):
    """Per-request generation budget exceeded; carries the pipeline stage name."""

    def __init__(self, stage: str, budget_s: float):
        self.stage = stage
        self.budget_s = budget_s
        super().__init__(f"generation exceeded {budget_s:.1f}s budget during stage '{stage}'")
