"""Content-addressed activity persistence: one JSON document per activity
plus an index file. No external database, suiting low-connectivity
deployments; writes are atomic (tmp + rename) and serialized by one lock,
reads need no locking because published documents never change.
"""

from __future__ import annotations

import json
import os
import threading
from pathlib import Path

from ..errors import LifecycleError, NotFoundError

_INDEX = "index.json"


class ActivityStore:
    def __init__(self, root):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self._lock = threading.Lock()

    def _path(self, activity_id: str) -> Path:
        if not activity_id.replace("-", "").isalnum():
            raise NotFoundError(f"invalid activity id {activity_id!r}")
        return self.root / f"{activity_id}.json"

    def _write(self, path: Path, record: dict) -> None:
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(record, ensure_ascii=False, sort_keys=True, indent=1),
                       encoding="utf-8")
        os.replace(tmp, path)

    def _update_index(self, record: dict) -> None:
        index_path = self.root / _INDEX
        index = {}
        if index_path.exists():
            index = json.loads(index_path.read_text(encoding="utf-8"))
        index[record["id"]] = {
            "kind": record["kind"],
            "state": record["state"],
            "origin": record["origin"],
            "created_at": record["created_at"],
        }
        self._write(index_path, index)

    def exists(self, activity_id: str) -> bool:
        return self._path(activity_id).exists()

    def create(self, record: dict) -> bool:
        """Persist a new activity. Returns False (and writes nothing) when the
        id already exists: identical requests are idempotent by construction."""
        with self._lock:
            path = self._path(record["id"])
            if path.exists():
                return False
            self._write(path, record)
            self._update_index(record)
            return True

    def update(self, record: dict) -> None:
        """Replace a draft document. Published documents are immutable; the
        only allowed transition for them is none at all."""
        with self._lock:
            path = self._path(record["id"])
            if not path.exists():
                raise NotFoundError(f"activity {record['id']!r} not found")
            current = json.loads(path.read_text(encoding="utf-8"))
            if current["state"] == "published":
                raise LifecycleError(f"activity {record['id']!r} is published and immutable")
            self._write(path, record)
            self._update_index(record)

    def load(self, activity_id: str) -> dict:
        path = self._path(activity_id)
        if not path.exists():
            raise NotFoundError(f"activity {activity_id!r} not found")
        return json.loads(path.read_text(encoding="utf-8"))

    def list(self, state: str | None = None, kind: str | None = None) -> list[dict]:
        index_path = self.root / _INDEX
        if not index_path.exists():
            return []
        index = json.loads(index_path.read_text(encoding="utf-8"))
        out = []
        for activity_id, meta in sorted(index.items()):
            if state and meta["state"] != state:
                continue
            if kind and meta["kind"] != kind:
                continue
            out.append({"id": activity_id, **meta})
        return out
