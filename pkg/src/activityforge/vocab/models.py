"""Curated vocabulary entries and the immutable vocabulary snapshot.

A Vocabulary is frozen after load; review operations return a new snapshot
(copy-on-write), so request handlers can read it concurrently while the
service layer serializes mutations.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import VocabularyError
from ..textseg import contains_token
from ..words import normalize_word

DIFFICULTY_BANDS = ("basic", "intermediate", "advanced")

MAX_WORD_LEN = 24
MAX_DEFINITION_LEN = 240


@dataclass(frozen=True)
class VocabEntry:
    word: str
    tags: frozenset[str]
    definitions: tuple[str, ...]
    difficulty: str
    image_asset: str | None = None

    @classmethod
    def create(cls, word, tags, definitions, difficulty, image_asset=None) -> "VocabEntry":
        norm = normalize_word(word)
        if norm is None or not (1 <= len(norm) <= MAX_WORD_LEN):
            raise VocabularyError(
                f"word {word!r} must normalize to 1-{MAX_WORD_LEN} ASCII letters "
                "(no spaces, hyphens or digits)"
            )
        clean_tags = frozenset(t.strip().casefold() for t in tags)
        if not clean_tags or any(not t for t in clean_tags):
            raise VocabularyError(f"entry {norm!r} needs at least one non-empty tag")
        defs = tuple(str(d) for d in definitions)
        if not defs:
            raise VocabularyError(f"entry {norm!r} needs at least one definition")
        for d in defs:
            if not (1 <= len(d) <= MAX_DEFINITION_LEN):
                raise VocabularyError(
                    f"entry {norm!r}: definition length must be 1-{MAX_DEFINITION_LEN} chars"
                )
            if contains_token(d, norm):
                raise VocabularyError(
                    f"entry {norm!r}: definition {d!r} leaks the answer word"
                )
        if difficulty not in DIFFICULTY_BANDS:
            raise VocabularyError(
                f"entry {norm!r}: difficulty must be one of {DIFFICULTY_BANDS}"
            )
        return cls(norm, clean_tags, defs, difficulty, image_asset)

    def to_record(self) -> dict:
        return {
            "word": self.word,
            "tags": sorted(self.tags),
            "definitions": list(self.definitions),
            "difficulty": self.difficulty,
            "image_asset": self.image_asset,
        }


@dataclass(frozen=True)
class Vocabulary:
    """Immutable snapshot: entries keyed by normalized word, plus the set of
    (word, category) pairs rejected during expansion review."""

    entries: dict[str, VocabEntry] = field(default_factory=dict)
    rejected: frozenset[tuple[str, str]] = frozenset()

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, word: str) -> bool:
        norm = normalize_word(word)
        return norm in self.entries if norm else False

    def get(self, word: str) -> VocabEntry | None:
        norm = normalize_word(word)
        return self.entries.get(norm) if norm else None

    def all_entries(self) -> list[VocabEntry]:
        return [self.entries[w] for w in sorted(self.entries)]

    def tags(self) -> set[str]:
        out: set[str] = set()
        for e in self.entries.values():
            out |= e.tags
        return out

    def with_entry(self, entry: VocabEntry) -> "Vocabulary":
        if entry.word in self.entries:
            raise VocabularyError(f"duplicate word {entry.word!r}")
        new = dict(self.entries)
        new[entry.word] = entry
        return Vocabulary(new, self.rejected)

    def with_rejection(self, word: str, category: str) -> "Vocabulary":
        return Vocabulary(self.entries, self.rejected | {(word, category)})


def query_by_tags(vocab, tags, mode="any", difficulty=None):
    """Entries matching the tag predicate and optional difficulty filter,
    in lexicographic word order.

    mode 'any': entry carries at least one of the tags; 'all': every tag.
    """
    if not tags:
        raise VocabularyError("query needs at least one tag")
    wanted = {t.strip().casefold() for t in tags}
    if mode not in ("any", "all"):
        raise VocabularyError(f"unknown query mode {mode!r}")
    out = []
    for entry in vocab.all_entries():
        if mode == "any":
            hit = bool(entry.tags & wanted)
        else:
            hit = wanted <= entry.tags
        if hit and (difficulty is None or entry.difficulty == difficulty):
            out.append(entry)
    return out
