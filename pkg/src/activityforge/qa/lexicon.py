"""Word lists backing the Q&A heuristics.

The defaults ship as package data; the verb-lemma table and cue lists are
plain JSON so deployments can extend them via config paths.
"""

from __future__ import annotations

import json
import re
from functools import lru_cache
from importlib import resources

_YEAR_RE = re.compile(r"^\d{4}$")

NP_STARTERS = frozenset(
    "a an the my your his her its our their".split()
)


def _package_json(name: str):
    data = resources.files("activityforge").joinpath(f"data/{name}").read_text("utf-8")
    return json.loads(data)


@lru_cache(maxsize=None)
def verb_lemmas(path=None) -> dict[str, str]:
    """Past-tense form -> lemma. Copulas are deliberately absent: 'X was Y'
    sentences belong to the definition extractor, not to Q&A."""
    if path is None:
        return dict(_package_json("verb_lemmas.json"))
    with open(path, encoding="utf-8") as fh:
        return {k.casefold(): v.casefold() for k, v in json.load(fh).items()}


@lru_cache(maxsize=None)
def cues(path=None) -> dict[str, frozenset]:
    if path is None:
        raw = _package_json("qa_cues.json")
    else:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    return {key: frozenset(v.casefold() for v in values) for key, values in raw.items()}


def is_year(token: str) -> bool:
    return bool(_YEAR_RE.match(token))


def is_temporal_noun(token: str, cue_table=None) -> bool:
    table = cue_table if cue_table is not None else cues()
    return token.casefold() in table["temporal_nouns"] or is_year(token)
