from .patterns import Pattern, PatternCatalog, default_catalog, load_catalog
from .extract import ClueCandidate, extract_candidates
from .scoring import ClueScorer, HeuristicScorer, score_and_filter

__all__ = [
    "ClueCandidate",
    "ClueScorer",
    "HeuristicScorer",
    "Pattern",
    "PatternCatalog",
    "default_catalog",
    "extract_candidates",
    "load_catalog",
    "score_and_filter",
]
