from .models import DIFFICULTY_BANDS, VocabEntry, Vocabulary, query_by_tags
from .io import (
    EmbeddingTable,
    FrequencyTable,
    load_embeddings,
    load_frequencies,
    load_vocabulary,
    vocabulary_to_jsonl,
)
from .expansion import (
    ExpansionCandidate,
    ExpansionParams,
    category_centroid,
    expand_category,
    review_candidate,
)

__all__ = [
    "DIFFICULTY_BANDS",
    "EmbeddingTable",
    "ExpansionCandidate",
    "ExpansionParams",
    "FrequencyTable",
    "VocabEntry",
    "Vocabulary",
    "category_centroid",
    "expand_category",
    "load_embeddings",
    "load_frequencies",
    "load_vocabulary",
    "query_by_tags",
    "review_candidate",
    "vocabulary_to_jsonl",
]
