"""File formats for vocabulary, embeddings and term frequencies.

Vocabulary: JSONL, one entry per line:
    {"word": "...", "tags": ["..."], "definitions": ["..."],
     "difficulty": "basic", "image_asset": null}

Embeddings: text, first line "<count> <dimension>", then one line per word:
    word v1 v2 ... vD

Frequencies: TSV "word<TAB>count" sorted by count descending;
rank = 1-based line number.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass

import numpy as np

from ..errors import VocabularyError
from .models import VocabEntry, Vocabulary


def _iter_lines(source):
    if hasattr(source, "read"):
        yield from source
    elif isinstance(source, (str, os.PathLike)):
        with open(source, encoding="utf-8") as fh:
            yield from fh
    else:  # iterable of lines
        yield from source


def load_vocabulary(source) -> Vocabulary:
    """Parse and validate a JSONL vocabulary. Errors name the offending line;
    duplicate words name both lines."""
    entries: dict[str, VocabEntry] = {}
    first_line: dict[str, int] = {}
    for lineno, raw in enumerate(_iter_lines(source), start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            rec = json.loads(line)
        except json.JSONDecodeError as exc:
            raise VocabularyError(f"line {lineno}: malformed JSON ({exc.msg})") from exc
        if not isinstance(rec, dict):
            raise VocabularyError(f"line {lineno}: expected an object")
        try:
            entry = VocabEntry.create(
                rec.get("word", ""),
                rec.get("tags", []),
                rec.get("definitions", []),
                rec.get("difficulty", ""),
                rec.get("image_asset"),
            )
        except VocabularyError as exc:
            raise VocabularyError(f"line {lineno}: {exc}") from exc
        if entry.word in entries:
            raise VocabularyError(
                f"duplicate word {entry.word!r} on lines {first_line[entry.word]} and {lineno}"
            )
        entries[entry.word] = entry
        first_line[entry.word] = lineno
    return Vocabulary(entries)


def vocabulary_to_jsonl(vocab: Vocabulary) -> str:
    lines = [json.dumps(e.to_record(), ensure_ascii=False) for e in vocab.all_entries()]
    return "\n".join(lines) + ("\n" if lines else "")


@dataclass(frozen=True)
class EmbeddingTable:
    dimension: int
    vectors: dict[str, np.ndarray]

    def __contains__(self, word: str) -> bool:
        return word in self.vectors

    def __len__(self) -> int:
        return len(self.vectors)

    def get(self, word: str):
        return self.vectors.get(word)

    def words(self) -> list[str]:
        return sorted(self.vectors)


def load_embeddings(source) -> EmbeddingTable:
    lines = _iter_lines(source)
    try:
        header = next(lines)
    except StopIteration:
        raise VocabularyError("embedding file is empty") from None
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise VocabularyError("embedding header must be '<count> <dimension>'")
    count, dim = int(parts[0]), int(parts[1])
    if dim <= 0:
        raise VocabularyError("embedding dimension must be positive")
    vectors: dict[str, np.ndarray] = {}
    for lineno, raw in enumerate(lines, start=2):
        if not raw.strip():
            continue
        fields = raw.split()
        if len(fields) != dim + 1:
            raise VocabularyError(
                f"line {lineno}: expected word + {dim} components, got {len(fields) - 1}"
            )
        word = fields[0]
        vec = np.array([float(x) for x in fields[1:]], dtype=np.float64)
        if not np.all(np.isfinite(vec)):
            raise VocabularyError(f"line {lineno}: non-finite component for {word!r}")
        vectors[word] = vec
    if len(vectors) != count:
        raise VocabularyError(
            f"embedding header promises {count} words, file has {len(vectors)}"
        )
    return EmbeddingTable(dim, vectors)


@dataclass(frozen=True)
class FrequencyTable:
    counts: dict[str, int]
    ranks: dict[str, int]  # 1-based, by descending count (file order)
    total: int

    def rank(self, word: str) -> int | None:
        return self.ranks.get(word)


def load_frequencies(source) -> FrequencyTable:
    counts: dict[str, int] = {}
    ranks: dict[str, int] = {}
    prev = math.inf
    rank = 0
    for lineno, raw in enumerate(_iter_lines(source), start=1):
        line = raw.rstrip("\n")
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise VocabularyError(f"line {lineno}: expected 'word<TAB>count'")
        word, count_s = parts[0].strip(), parts[1].strip()
        try:
            count = int(count_s)
        except ValueError:
            raise VocabularyError(f"line {lineno}: count {count_s!r} is not an integer") from None
        if count < 0:
            raise VocabularyError(f"line {lineno}: negative count")
        if count > prev:
            raise VocabularyError(f"line {lineno}: counts must be sorted descending")
        if word in counts:
            raise VocabularyError(f"line {lineno}: duplicate word {word!r}")
        prev = count
        rank += 1
        counts[word] = count
        ranks[word] = rank
    return FrequencyTable(counts, ranks, sum(counts.values()))
