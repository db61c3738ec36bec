"""Service configuration: a single TOML or JSON file.

Only paths and knobs live here; no user accounts and no personal data.
Teacher access is a bearer-token -> role map provisioned out of band.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass, field, replace
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from ..errors import ForgeError


@dataclass(frozen=True)
class ServiceConfig:
    store_dir: Path = Path("forge-data/activities")
    asset_dir: Path | None = None    # image assets, served at /assets
    webapp_dir: Path | None = None   # built frontend, served at /app
    tokens: dict = field(default_factory=dict)  # token -> role ("teacher")

    vocabulary_path: Path | None = None
    embeddings_path: Path | None = None
    frequencies_path: Path | None = None
    stopwords_path: Path | None = None
    patterns_path: Path | None = None
    verb_lemmas_path: Path | None = None
    qa_cues_path: Path | None = None

    clue_threshold: float = 0.5
    crossword_budget: int = 50_000
    generation_budget_s: float = 10.0
    min_words: int = 8
    max_grid: int = 25
    wordsearch_size: int = 12
    wordsearch_directions: tuple = ("e", "s", "se")
    expansion_k: int = 25
    expansion_band: tuple = (1, 20_000)

    def role_for(self, token: str | None) -> str | None:
        if token is None:
            return None
        return self.tokens.get(token)


_PATH_KEYS = (
    "store_dir",
    "asset_dir",
    "webapp_dir",
    "vocabulary_path",
    "embeddings_path",
    "frequencies_path",
    "stopwords_path",
    "patterns_path",
    "verb_lemmas_path",
    "qa_cues_path",
)
_TUPLE_KEYS = ("wordsearch_directions", "expansion_band")


def load_config(path) -> ServiceConfig:
    p = Path(path)
    raw = p.read_bytes()
    if p.suffix == ".toml":
        data = tomllib.loads(raw.decode("utf-8"))
    elif p.suffix == ".json":
        data = json.loads(raw)
    else:
        raise ForgeError(f"config must be .toml or .json, got {p.name!r}")

    known = {f for f in ServiceConfig.__dataclass_fields__}
    unknown = set(data) - known
    if unknown:
        raise ForgeError(f"unknown config keys: {sorted(unknown)}")
    cfg = ServiceConfig()
    updates = {}
    for key, value in data.items():
        if key in _PATH_KEYS and value is not None:
            # relative paths resolve against the config file's directory
            value = (p.parent / value).resolve() if not Path(value).is_absolute() else Path(value)
        if key in _TUPLE_KEYS:
            value = tuple(value)
        updates[key] = value
    return replace(cfg, **updates)
