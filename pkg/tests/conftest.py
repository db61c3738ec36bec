import json
from pathlib import Path

import pytest

from activityforge.service.activities import ActivityService
from activityforge.service.config import ServiceConfig
from activityforge.vocab import load_vocabulary

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def fixture_vocab():
    return load_vocabulary(FIXTURES / "vocab_100.jsonl")


@pytest.fixture(scope="session")
def story_texts():
    return {
        p.stem: p.read_text(encoding="utf-8")
        for p in sorted((FIXTURES / "stories").glob("*.txt"))
    }


def make_vocab_lines(entries):
    """entries: iterable of (word, tags, definition[, image_asset]) tuples."""
    lines = []
    for entry in entries:
        word, tags, definition = entry[0], entry[1], entry[2]
        image = entry[3] if len(entry) > 3 else None
        lines.append(json.dumps({
            "word": word,
            "tags": list(tags),
            "definitions": [definition],
            "difficulty": "basic",
            "image_asset": image,
        }))
    return lines


@pytest.fixture()
def service(tmp_path, fixture_vocab) -> ActivityService:
    config = ServiceConfig(
        store_dir=tmp_path / "activities",
        tokens={"t-teach": "teacher"},
    )
    return ActivityService(config, vocabulary=fixture_vocab)
