"""Pattern catalog for definition extraction, with a small template syntax.

A template is a space-separated list of elements matched against one
sentence:

    {word}        the definiendum: exactly one word token
    {clue}        the definiens: one or more tokens (shortest match when
                  more elements follow, rest of the sentence when last)
    is            a literal token, case-insensitive
    is|are        alternation of literals
    a|an|the?     trailing '?' makes the element optional
    , ( )         punctuation literals (alternations like ,|. allowed)

Each pattern may also set "clue_prefix": the clue's first word must be one
of the given tokens (used to keep copulas and appositives dictionary-like).

Catalog order is precedence; catalogs load from JSON files with the shape
[{"pattern_id": ..., "description": ..., "template": ..., "clue_prefix": [...]}].
The default catalog ships as package data.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from ..errors import ExtractionError

_WORD_CAPTURE = r"(?P<word>[A-Za-z][A-Za-z'-]*)"


def _is_punct_element(element: str) -> bool:
    return all(not part.isalnum() and len(part) == 1 for part in element.split("|"))


def _compile_template(template: str) -> re.Pattern:
    elements = template.split()
    if elements.count("{word}") != 1 or elements.count("{clue}") != 1:
        raise ExtractionError(
            f"template {template!r} needs exactly one {{word}} and one {{clue}}"
        )
    parts: list[str] = []
    for i, raw in enumerate(elements):
        optional = raw.endswith("?") and raw not in ("{word}", "{clue}")
        element = raw[:-1] if optional else raw
        last = i == len(elements) - 1
        if element == "{word}":
            frag = _WORD_CAPTURE
        elif element == "{clue}":
            frag = r"(?P<clue>.+)" if last else r"(?P<clue>.+?)"
        elif _is_punct_element(element):
            alts = "|".join(re.escape(p) for p in element.split("|"))
            frag = f"(?:{alts})"
        else:
            alts = "|".join(re.escape(p) for p in element.split("|"))
            frag = rf"(?:{alts})\b"
        if last:
            joiner = ""
        elif _is_punct_element(element) or _is_punct_element(elements[i + 1].rstrip("?")):
            joiner = r"\s*"  # punctuation binds tightly: "(a", "strings,"
        else:
            joiner = r"\s+"
        if optional:
            parts.append(f"(?:{frag}{joiner})?")
        else:
            parts.append(frag + joiner)
    return re.compile("".join(parts), re.IGNORECASE)


@dataclass(frozen=True)
class Pattern:
    pattern_id: str
    description: str
    template: str
    clue_prefix: tuple[str, ...] = ()

    @property
    def regex(self) -> re.Pattern:
        return _compile_template(self.template)


@dataclass(frozen=True)
class PatternCatalog:
    patterns: tuple[Pattern, ...]

    def __post_init__(self):
        ids = [p.pattern_id for p in self.patterns]
        if len(ids) != len(set(ids)):
            raise ExtractionError("pattern_ids must be unique")

    def without(self, pattern_id: str) -> "PatternCatalog":
        return PatternCatalog(
            tuple(p for p in self.patterns if p.pattern_id != pattern_id)
        )


def _catalog_from_records(records) -> PatternCatalog:
    patterns = []
    for rec in records:
        pattern = Pattern(
            pattern_id=rec["pattern_id"],
            description=rec.get("description", ""),
            template=rec["template"],
            clue_prefix=tuple(t.casefold() for t in rec.get("clue_prefix", [])),
        )
        _compile_template(pattern.template)  # validate eagerly
        patterns.append(pattern)
    return PatternCatalog(tuple(patterns))


def load_catalog(path) -> PatternCatalog:
    with open(path, encoding="utf-8") as fh:
        return _catalog_from_records(json.load(fh))


@lru_cache(maxsize=1)
def default_catalog() -> PatternCatalog:
    data = resources.files("activityforge").joinpath("data/patterns.json").read_text("utf-8")
    return _catalog_from_records(json.loads(data))
