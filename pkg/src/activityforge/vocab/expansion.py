"""Semi-automatic category expansion over word embeddings.

Candidate score = min(cosine to the member centroid, cosine to the category
name's own vector). The second term penalizes words that sit near individual
members but far from the category sense, which is what keeps e.g. "tennis"
out of an "animals" expansion when some member is ambiguous.

Everything here proposes; a human accepts or rejects (review_candidate).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace

import numpy as np

from ..errors import ExpansionError, ReviewError
from .models import VocabEntry, Vocabulary

logger = logging.getLogger(__name__)

# rank thresholds mapping corpus frequency to a difficulty band for accepted words
BASIC_MAX_RANK = 2000
INTERMEDIATE_MAX_RANK = 10000


@dataclass(frozen=True)
class ExpansionParams:
    k_neighbors: int = 25
    freq_band: tuple[int, int] = (1, 20000)


@dataclass(frozen=True)
class ExpansionCandidate:
    word: str
    category: str
    similarity: float
    frequency_rank: int | None
    status: str = "proposed"  # proposed | accepted | rejected


def cosine(a: np.ndarray, b: np.ndarray) -> float:
    """Cosine similarity; 0.0 when either vector has zero norm."""
    na = float(np.linalg.norm(a))
    nb = float(np.linalg.norm(b))
    if na == 0.0 or nb == 0.0:
        return 0.0
    return float(np.dot(a, b) / (na * nb))


def category_centroid(category_words, emb) -> tuple[np.ndarray, list[str]]:
    """Component-wise mean of the embedded category words.

    Words missing from the table are skipped; they come back in the second
    element so callers can surface them.
    """
    found = []
    skipped = []
    for w in category_words:
        vec = emb.get(w)
        if vec is None:
            skipped.append(w)
        else:
            found.append(vec)
    if not found:
        raise ExpansionError("no category word has an embedding")
    if skipped:
        logger.info("centroid: skipped %d unembedded word(s): %s", len(skipped), skipped)
    return np.mean(np.stack(found), axis=0), skipped


def expand_category(category, vocab, emb, freq, params=ExpansionParams()):
    """Top-k expansion candidates for a category tag.

    Eligible words are single alphabetic lowercase tokens from the embedding
    table that are not already vocabulary entries, were not previously
    rejected for this category, and whose frequency rank falls inside
    params.freq_band (words missing from the frequency table are excluded:
    without a rank there is no difficulty evidence).
    """
    if len(emb) == 0:
        raise ExpansionError("embedding table is empty")
    cat = category.strip().casefold()
    members = [e.word for e in vocab.all_entries() if cat in e.tags]
    if not members:
        raise ExpansionError(f"unknown category {category!r}: no entry carries that tag")
    centroid, _ = category_centroid(members, emb)
    name_vec = emb.get(cat)
    if name_vec is None:
        raise ExpansionError(f"category name {cat!r} has no embedding")
    lo, hi = params.freq_band
    if lo < 1 or hi < lo:
        raise ExpansionError(f"invalid frequency band [{lo}, {hi}]")

    scored = []
    for word in emb.words():
        if not word.isalpha() or word != word.casefold():
            continue
        if word in vocab or (word, cat) in vocab.rejected:
            continue
        rank = freq.rank(word)
        if rank is None or not (lo <= rank <= hi):
            continue
        vec = emb.get(word)
        sim = min(cosine(vec, centroid), cosine(vec, name_vec))
        scored.append(ExpansionCandidate(word, cat, sim, rank))
    scored.sort(key=lambda c: (-c.similarity, c.word))
    return scored[: params.k_neighbors]


def _difficulty_for_rank(rank: int | None) -> str:
    if rank is not None and rank <= BASIC_MAX_RANK:
        return "basic"
    if rank is not None and rank <= INTERMEDIATE_MAX_RANK:
        return "intermediate"
    return "advanced" if rank is not None else "intermediate"


def review_candidate(vocab, candidate, decision, definitions=None):
    """Apply a manual curation decision.

    accept: requires at least one definition; the word joins the vocabulary
    tagged with the candidate's category, difficulty derived from its
    frequency rank. reject: the (word, category) pair is remembered so it is
    never proposed again for that category.

    Returns (new_vocabulary, updated_candidate).
    """
    if candidate.status != "proposed":
        raise ReviewError(f"candidate {candidate.word!r} already reviewed ({candidate.status})")
    if decision == "accept":
        if not definitions:
            raise ReviewError("accepting a candidate requires at least one definition")
        entry = VocabEntry.create(
            candidate.word,
            {candidate.category},
            definitions,
            _difficulty_for_rank(candidate.frequency_rank),
        )
        return vocab.with_entry(entry), replace(candidate, status="accepted")
    if decision == "reject":
        new_vocab = vocab.with_rejection(candidate.word, candidate.category)
        return new_vocab, replace(candidate, status="rejected")
    raise ReviewError(f"unknown decision {decision!r}")
