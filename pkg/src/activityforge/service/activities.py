"""Activity lifecycle: creation, review edits, publication, play, grading.

Rules enforced here:
  * text-origin activities are born draft and only an explicit publish
    makes them playable; vocabulary-origin activities publish immediately
  * published payloads are immutable
  * the persisted record holds exactly the closed field set (no names,
    accounts or any personal identifier)
  * (request, seed) fully determines the payload, so activity ids are
    content hashes of the creation request and creation is idempotent
  * student payloads carry no answer-key material
"""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass, replace
from datetime import datetime, timezone

from ..clues import default_catalog, extract_candidates, HeuristicScorer, load_catalog, score_and_filter
from ..errors import (
    ActivityError,
    EditRejected,
    GenerationTimeout,
    InsufficientVocabularyError,
    LifecycleError,
    StoryError,
)
from ..puzzle import CrosswordSpec, Grid, build_crossword, build_wordsearch, number_placements, verify_grid
from ..puzzle.grid import direction_delta
from ..qa import QAItem, build_qa_exercise, check_qa_answer
from ..rng import Rng, derive_seed
from ..story import StoryExercise, check_story_answer, rank_and_select, build_story_exercise
from ..textseg import contains_token_sequence, split_sentences
from ..vocab import (
    ExpansionParams,
    expand_category,
    load_vocabulary,
    query_by_tags,
    review_candidate,
    vocabulary_to_jsonl,
    Vocabulary,
)
from ..vocab.io import load_embeddings, load_frequencies
from ..words import STOPWORDS, load_wordlist
from .config import ServiceConfig
from .store import ActivityStore

KINDS = ("crossword", "wordsearch", "storygame", "qa", "imagechoice")
VOCAB_KINDS = ("crossword", "wordsearch", "imagechoice")
TEXT_KINDS = ("crossword", "wordsearch", "storygame", "qa")

RECORD_FIELDS = frozenset(
    {"id", "kind", "payload", "state", "origin", "created_at", "seed", "source_text_hash"}
)


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _content_id(descriptor: dict) -> str:
    return hashlib.sha256(canonical_json(descriptor).encode("utf-8")).hexdigest()[:16]


@dataclass(frozen=True)
class Activity:
    id: str
    kind: str
    payload: dict
    state: str
    origin: str
    created_at: str
    seed: int
    source_text_hash: str | None = None

    def to_record(self) -> dict:
        return {
            "id": self.id,
            "kind": self.kind,
            "payload": self.payload,
            "state": self.state,
            "origin": self.origin,
            "created_at": self.created_at,
            "seed": self.seed,
            "source_text_hash": self.source_text_hash,
        }

    @classmethod
    def from_record(cls, rec: dict) -> "Activity":
        return cls(
            rec["id"], rec["kind"], rec["payload"], rec["state"], rec["origin"],
            rec["created_at"], rec["seed"], rec.get("source_text_hash"),
        )


class _Deadline:
    """Per-request generation budget with stage attribution."""

    def __init__(self, budget_s: float):
        self.budget_s = budget_s
        self.t0 = time.monotonic()

    def check(self, stage: str) -> None:
        if time.monotonic() - self.t0 > self.budget_s:
            raise GenerationTimeout(stage, self.budget_s)


class ActivityService:
    def __init__(self, config: ServiceConfig, vocabulary: Vocabulary | None = None):
        self.config = config
        self.store = ActivityStore(config.store_dir)
        if vocabulary is not None:
            self.vocab = vocabulary
        elif config.vocabulary_path is not None:
            self.vocab = load_vocabulary(config.vocabulary_path)
        else:
            self.vocab = Vocabulary()
        # rejected (word, category) pairs survive restarts via a sidecar file
        self._rejections_path = (
            config.vocabulary_path.with_suffix(".rejected.json")
            if config.vocabulary_path is not None
            else None
        )
        if self._rejections_path is not None and self._rejections_path.exists():
            pairs = json.loads(self._rejections_path.read_text(encoding="utf-8"))
            for word, category in pairs:
                self.vocab = self.vocab.with_rejection(word, category)
        self.catalog = (
            load_catalog(config.patterns_path) if config.patterns_path else default_catalog()
        )
        self.stopwords = (
            load_wordlist(config.stopwords_path) if config.stopwords_path else STOPWORDS
        )
        self.scorer = HeuristicScorer()
        self._embeddings = None
        self._frequencies = None
        self._proposals: dict[tuple[str, str], object] = {}  # (category, word) -> candidate

    # ---------------- vocabulary helpers ----------------

    @property
    def embeddings(self):
        if self._embeddings is None:
            if self.config.embeddings_path is None:
                raise ActivityError("no embeddings configured")
            self._embeddings = load_embeddings(self.config.embeddings_path)
        return self._embeddings

    @property
    def frequencies(self):
        if self._frequencies is None:
            if self.config.frequencies_path is None:
                raise ActivityError("no frequency table configured")
            self._frequencies = load_frequencies(self.config.frequencies_path)
        return self._frequencies

    def query_vocabulary(self, tags, mode="any", difficulty=None):
        return query_by_tags(self.vocab, tags, mode, difficulty)

    def expand_vocabulary(self, category: str, params: dict | None = None):
        params = params or {}
        ep = ExpansionParams(
            k_neighbors=int(params.get("k_neighbors", self.config.expansion_k)),
            freq_band=tuple(params.get("freq_band", self.config.expansion_band)),
        )
        candidates = expand_category(category, self.vocab, self.embeddings, self.frequencies, ep)
        for cand in candidates:
            self._proposals[(cand.category, cand.word)] = cand
        return candidates

    def review_vocabulary(self, word: str, decision: str, definitions=None, category=None):
        keys = [k for k in self._proposals if k[1] == word and (category is None or k[0] == category)]
        if not keys:
            raise ActivityError(f"no open proposal for word {word!r}; run expand first")
        candidate = self._proposals.pop(keys[0])
        self.vocab, reviewed = review_candidate(self.vocab, candidate, decision, definitions)
        if self.config.vocabulary_path is not None:
            self.config.vocabulary_path.write_text(
                vocabulary_to_jsonl(self.vocab), encoding="utf-8"
            )
        if self._rejections_path is not None:
            self._rejections_path.write_text(
                json.dumps(sorted(list(p) for p in self.vocab.rejected)), encoding="utf-8"
            )
        return reviewed

    # ---------------- creation ----------------

    def create_from_vocabulary(self, kind: str, tags, params: dict | None, seed: int) -> Activity:
        if kind not in VOCAB_KINDS:
            raise ActivityError(f"kind {kind!r} cannot be generated from the vocabulary")
        params = params or {}
        deadline = _Deadline(self.config.generation_budget_s)
        builder = {
            "crossword": self._crossword_from_vocab,
            "wordsearch": self._wordsearch_from_vocab,
            "imagechoice": self._imagechoice_from_vocab,
        }[kind]
        payload = builder(sorted(set(tags)), params, seed, deadline)
        descriptor = {
            "kind": kind, "origin": "vocabulary", "tags": sorted(set(tags)),
            "params": params, "seed": seed,
        }
        activity = Activity(
            id=_content_id(descriptor),
            kind=kind,
            payload=payload,
            state="published",  # curated source: immediately available to children
            origin="vocabulary",
            created_at=datetime.now(timezone.utc).isoformat(),
            seed=seed,
        )
        return self._persist_new(activity)

    def create_from_text(self, kind: str, text: str, params: dict | None, seed: int) -> Activity:
        if kind not in TEXT_KINDS:
            raise ActivityError(f"kind {kind!r} cannot be generated from a text")
        if not text or not text.strip():
            raise ActivityError("input text is empty")
        params = params or {}
        deadline = _Deadline(self.config.generation_budget_s)
        builder = {
            "crossword": self._crossword_from_text,
            "wordsearch": self._wordsearch_from_text,
            "storygame": self._storygame_from_text,
            "qa": self._qa_from_text,
        }[kind]
        payload = builder(text, params, seed, deadline)
        text_hash = hashlib.sha256(text.encode("utf-8")).hexdigest()
        descriptor = {
            "kind": kind, "origin": "text", "text_hash": text_hash,
            "params": params, "seed": seed,
        }
        activity = Activity(
            id=_content_id(descriptor),
            kind=kind,
            payload=payload,
            state="draft",  # teacher must review and publish
            origin="text",
            created_at=datetime.now(timezone.utc).isoformat(),
            seed=seed,
            source_text_hash=text_hash,
        )
        return self._persist_new(activity)

    def _persist_new(self, activity: Activity) -> Activity:
        created = self.store.create(activity.to_record())
        if not created:
            return Activity.from_record(self.store.load(activity.id))
        return activity

    # ---------------- per-kind builders ----------------

    def _pick(self, pool: list, count: int, seed: int, stream: int) -> list:
        items = list(pool)
        Rng(derive_seed(seed, stream)).shuffle(items)
        return items[:count]

    def _crossword_from_vocab(self, tags, params, seed, deadline) -> dict:
        min_words = int(params.get("min_words", self.config.min_words))
        entries_pool = [
            e for e in query_by_tags(self.vocab, tags, "any", params.get("difficulty"))
            if 2 <= len(e.word) <= 24
        ]
        if len(entries_pool) < min_words:
            raise InsufficientVocabularyError(
                f"{len(entries_pool)} matching entry(ies), crossword needs {min_words}"
            )
        word_count = int(params.get("word_count", max(min_words, 10)))
        chosen = self._pick(entries_pool, word_count, seed, 2)
        spec = CrosswordSpec(
            entries=tuple((e.word, e.definitions[0]) for e in chosen),
            max_grid=int(params.get("max_grid", self.config.max_grid)),
            seed=seed,
            min_words=min_words,
            topup_tags=frozenset(tags),
        )
        deadline.check("crossword-layout")
        result = build_crossword(spec, self.vocab, budget=self.config.crossword_budget)
        deadline.check("crossword-layout")
        return {
            "grid": result.grid.to_record(),
            "unplaced": list(result.unplaced),
            "diagnostics": {
                "topup_words": list(result.topup_words),
                "expansions": result.expansions,
            },
        }

    def _wordsearch_from_vocab(self, tags, params, seed, deadline) -> dict:
        size = int(params.get("size", self.config.wordsearch_size))
        pool = [
            e.word for e in query_by_tags(self.vocab, tags, "any", params.get("difficulty"))
            if 2 <= len(e.word) <= size
        ]
        if not pool:
            raise InsufficientVocabularyError("no matching entry fits the grid")
        word_count = int(params.get("word_count", 8))
        words = self._pick(pool, word_count, seed, 3)
        deadline.check("wordsearch-layout")
        result = build_wordsearch(
            words, size, tuple(params.get("directions", self.config.wordsearch_directions)), seed
        )
        deadline.check("wordsearch-layout")
        return {
            "grid": result.grid.to_record(),
            "words": sorted(p.word for p in result.answer_key),
            "diagnostics": {},
        }

    def _imagechoice_from_vocab(self, tags, params, seed, deadline) -> dict:
        pool = [
            e for e in query_by_tags(self.vocab, tags, "any", params.get("difficulty"))
            if e.image_asset
        ]
        if len(pool) < 4:
            raise InsufficientVocabularyError(
                f"imagechoice needs 4+ entries with image assets, found {len(pool)}"
            )
        n_items = min(int(params.get("n_items", 10)), len(pool))
        rng = Rng(derive_seed(seed, 4))
        prompts = list(pool)
        rng.shuffle(prompts)
        items = []
        for entry in prompts[:n_items]:
            others = [e.image_asset for e in pool if e.word != entry.word]
            rng.shuffle(others)
            options = [entry.image_asset] + others[:3]
            rng.shuffle(options)
            items.append({
                "prompt_word": entry.word,
                "options": options,
                "correct_index": options.index(entry.image_asset),
            })
        return {"items": items, "diagnostics": {}}

    def _accepted_pairs(self, text, params, deadline):
        deadline.check("clue-extraction")
        threshold = float(params.get("threshold", self.config.clue_threshold))
        scored = score_and_filter(extract_candidates(text, self.catalog), self.scorer, threshold)
        deadline.check("clue-scoring")
        pairs = {}
        for cand in scored:
            if cand.accepted and cand.word not in pairs:
                pairs[cand.word] = cand.clue
        return pairs, scored

    def _crossword_from_text(self, text, params, seed, deadline) -> dict:
        pairs, scored = self._accepted_pairs(text, params, deadline)
        if not pairs:
            raise ActivityError("no clue candidates survived extraction and scoring")
        topup_tags = params.get("topup_tags")
        spec = CrosswordSpec(
            entries=tuple(sorted(pairs.items())),
            max_grid=int(params.get("max_grid", self.config.max_grid)),
            seed=seed,
            min_words=int(params.get("min_words", self.config.min_words)),
            topup_tags=frozenset(topup_tags) if topup_tags else None,
        )
        deadline.check("crossword-layout")
        result = build_crossword(
            spec, self.vocab if topup_tags else None, budget=self.config.crossword_budget
        )
        deadline.check("crossword-layout")
        return {
            "grid": result.grid.to_record(),
            "unplaced": list(result.unplaced),
            "candidates": [_candidate_record(c) for c in scored],
            "diagnostics": {
                "topup_words": list(result.topup_words),
                "expansions": result.expansions,
                "rejected_candidates": sum(1 for c in scored if not c.accepted),
            },
        }

    def _wordsearch_from_text(self, text, params, seed, deadline) -> dict:
        pairs, scored = self._accepted_pairs(text, params, deadline)
        size = int(params.get("size", self.config.wordsearch_size))
        words = sorted(w for w in pairs if 2 <= len(w) <= size)
        if not words:
            raise ActivityError("no extracted word fits the grid")
        word_count = int(params.get("word_count", 8))
        words = self._pick(words, word_count, seed, 5)
        deadline.check("wordsearch-layout")
        result = build_wordsearch(
            words, size, tuple(params.get("directions", self.config.wordsearch_directions)), seed
        )
        return {
            "grid": result.grid.to_record(),
            "words": sorted(p.word for p in result.answer_key),
            "candidates": [_candidate_record(c) for c in scored],
            "diagnostics": {
                "rejected_candidates": sum(1 for c in scored if not c.accepted),
            },
        }

    def _storygame_from_text(self, text, params, seed, deadline) -> dict:
        deadline.check("story-ranking")
        sentence_total = len(split_sentences(text))
        n = int(params.get("n_sentences", min(6, sentence_total)))
        exercise = build_story_exercise(text, n, seed, self.stopwords)
        scored, _ = rank_and_select(text, n, self.stopwords)
        return {
            "sentences": list(exercise.sentences),
            "shown_order": list(exercise.shown_order),
            "diagnostics": {
                "scores": [
                    {"index": s.index, "score": round(s.score, 6), "selected": s.selected}
                    for s in scored
                ],
            },
        }

    def _qa_from_text(self, text, params, seed, deadline) -> dict:
        deadline.check("qa-pipeline")
        exercise = build_qa_exercise(text)
        if not exercise.items:
            raise ActivityError("no question could be generated from the text")
        return {
            "items": [item.to_record() for item in exercise.items],
            "resolved_text": exercise.resolved.text,
            "diagnostics": {
                "substitutions": [
                    {"start": s.start, "end": s.end, "original": s.original, "replacement": s.replacement}
                    for s in exercise.resolved.substitutions
                ],
                "unresolved_pronouns": len(exercise.resolved.unresolved),
                "skipped_candidates": [list(s) for s in exercise.skipped],
            },
        }

    # ---------------- lifecycle ----------------

    def get(self, activity_id: str) -> Activity:
        return Activity.from_record(self.store.load(activity_id))

    def list(self, state=None, kind=None):
        return self.store.list(state, kind)

    def publish(self, activity_id: str) -> Activity:
        activity = self.get(activity_id)
        if activity.state == "published":
            raise LifecycleError(f"activity {activity_id!r} is already published")
        published = replace(activity, state="published")
        self.store.update(published.to_record())
        return published

    def apply_edit(self, activity_id: str, edits: dict) -> Activity:
        activity = self.get(activity_id)
        if activity.state != "draft":
            raise LifecycleError("only draft activities can be edited")
        patched_payload = apply_payload_edits(activity.kind, activity.payload, edits)
        violations = verify_payload(activity.kind, patched_payload, self.vocab)
        if violations:
            raise EditRejected(violations)
        patched = replace(activity, payload=patched_payload)
        self.store.update(patched.to_record())
        return patched

    def playable(self, activity_id: str) -> dict:
        activity = self.get(activity_id)
        if activity.state != "published":
            raise LifecycleError(f"activity {activity_id!r} is not published")
        return strip_payload(activity.kind, activity.payload, activity.id)

    def submit_answer(self, activity_id: str, answer: dict) -> dict:
        activity = self.get(activity_id)
        if activity.state != "published":
            raise LifecycleError(f"activity {activity_id!r} is not published")
        return grade_answer(activity.kind, activity.payload, answer)


def _candidate_record(cand) -> dict:
    return {
        "word": cand.word,
        "clue": cand.clue,
        "pattern_id": cand.pattern_id,
        "source_span": list(cand.source_span),
        "score": cand.score,
        "accepted": cand.accepted,
    }


# ---------------- edits ----------------


def apply_payload_edits(kind: str, payload: dict, edits: dict) -> dict:
    """Apply a kind-specific EditPatch to a copied payload (atomicity is the
    caller's: reject means the stored activity is untouched)."""
    new = json.loads(json.dumps(payload))
    if kind in ("crossword", "wordsearch"):
        grid = new["grid"]
        for clue_edit in edits.get("clues", []):
            idx = int(clue_edit["placement"])
            if not 0 <= idx < len(grid["placements"]):
                raise ActivityError(f"no placement {idx}")
            grid["placements"][idx]["clue"] = str(clue_edit["clue"])
        for cell_edit in edits.get("cells", []):
            r, c = int(cell_edit["row"]), int(cell_edit["col"])
            letter = str(cell_edit["letter"]).upper()
            if len(letter) != 1:
                raise ActivityError("cell override must be a single character")
            rows = grid["cells"]
            if not (0 <= r < len(rows) and 0 <= c < len(rows[r])):
                raise ActivityError(f"cell ({r},{c}) outside the grid")
            rows[r] = rows[r][:c] + letter + rows[r][c + 1 :]
    elif kind == "storygame":
        for sent_edit in edits.get("sentences", []):
            idx = int(sent_edit["index"])
            if not 0 <= idx < len(new["sentences"]):
                raise ActivityError(f"no sentence {idx}")
            new["sentences"][idx] = str(sent_edit["text"])
    elif kind == "qa":
        for item_edit in edits.get("items", []):
            idx = int(item_edit["index"])
            if not 0 <= idx < len(new["items"]):
                raise ActivityError(f"no item {idx}")
            item = new["items"][idx]
            if "question" in item_edit:
                item["question"] = str(item_edit["question"])
            if "answer" in item_edit:
                item["answer"] = str(item_edit["answer"])
                item["answer_span"] = None  # teacher-authored, no longer extractive
        for idx in sorted(edits.get("remove", []), reverse=True):
            if not 0 <= int(idx) < len(new["items"]):
                raise ActivityError(f"no item {idx}")
            del new["items"][int(idx)]
    elif kind == "imagechoice":
        for item_edit in edits.get("items", []):
            idx = int(item_edit["index"])
            if not 0 <= idx < len(new["items"]):
                raise ActivityError(f"no item {idx}")
            item = new["items"][idx]
            if "correct_index" in item_edit:
                item["correct_index"] = int(item_edit["correct_index"])
            if "options" in item_edit:
                item["options"] = [str(o) for o in item_edit["options"]]
        for idx in sorted(edits.get("remove", []), reverse=True):
            del new["items"][int(idx)]
    else:
        raise ActivityError(f"unknown kind {kind!r}")
    return new


# ---------------- verification ----------------


def verify_payload(kind: str, payload: dict, vocab: Vocabulary | None = None) -> list[dict]:
    """Kind-specific validity rules, re-run after every edit."""
    violations: list[dict] = []
    if kind in ("crossword", "wordsearch"):
        try:
            grid = Grid.from_record(payload["grid"])
        except Exception as exc:
            return [{"rule": "GRID", "message": str(exc)}]
        violations = [v.to_record() for v in verify_grid(grid, kind)]
    elif kind == "storygame":
        sentences = payload.get("sentences", [])
        order = payload.get("shown_order", [])
        if len(sentences) < 3:
            violations.append({"rule": "MIN_SENTENCES", "message": "need at least 3 sentences"})
        if sorted(order) != list(range(len(sentences))):
            violations.append({"rule": "ORDER", "message": "shown_order is not a permutation"})
        elif order == sorted(order):
            violations.append({"rule": "ORDER", "message": "shown_order equals the identity"})
        if any(not str(s).strip() for s in sentences):
            violations.append({"rule": "EMPTY_SENTENCE", "message": "sentences must be non-empty"})
    elif kind == "qa":
        resolved_text = payload.get("resolved_text", "")
        if not payload.get("items"):
            violations.append({"rule": "EMPTY", "message": "no QA items left"})
        for i, rec in enumerate(payload.get("items", [])):
            question, answer = rec.get("question", ""), rec.get("answer", "")
            if not question.strip().endswith("?"):
                violations.append({"rule": "QUESTION_MARK",
                                   "message": f"item {i}: question must end in '?'"})
            if not answer.strip():
                violations.append({"rule": "EMPTY_ANSWER", "message": f"item {i}: empty answer"})
            elif contains_token_sequence(question, answer):
                violations.append({"rule": "ANSWER_LEAK",
                                   "message": f"item {i}: question contains its answer"})
            span = rec.get("answer_span")
            if span and resolved_text[span[0] : span[1]] != answer:
                violations.append({"rule": "SPAN_MISMATCH",
                                   "message": f"item {i}: answer_span does not match the text"})
    elif kind == "imagechoice":
        for i, item in enumerate(payload.get("items", [])):
            options = item.get("options", [])
            if len(options) != 4 or len(set(options)) != 4:
                violations.append({"rule": "OPTIONS",
                                   "message": f"item {i}: need 4 distinct options"})
            ci = item.get("correct_index", -1)
            if not (isinstance(ci, int) and 0 <= ci < len(options)):
                violations.append({"rule": "CORRECT_INDEX",
                                   "message": f"item {i}: correct_index out of range"})
            elif vocab is not None:
                entry = vocab.get(item.get("prompt_word", ""))
                if entry is not None and entry.image_asset != options[ci]:
                    violations.append({"rule": "WRONG_ASSET",
                                       "message": f"item {i}: correct option is not the word's asset"})
    else:
        violations.append({"rule": "KIND", "message": f"unknown kind {kind!r}"})
    return violations


# ---------------- stripping ----------------


def strip_payload(kind: str, payload: dict, activity_id: str) -> dict:
    """Student-facing view with every answer key removed. Idempotent: an
    already-stripped payload passes through unchanged."""
    if payload.get("playable"):
        return payload
    out: dict = {"playable": True, "id": activity_id, "kind": kind}
    if kind == "crossword":
        grid = Grid.from_record(payload["grid"])
        # letters become fillable cells ('.'), everything else is background ('#')
        masked = ["".join("." if "A" <= ch <= "Z" else "#" for ch in row) for row in grid.cells]
        out["grid"] = {"width": grid.width, "height": grid.height, "cells": masked}
        out["clues"] = [
            {
                "number": num,
                "row": p.row,
                "col": p.col,
                "direction": p.direction,
                "length": len(p.word),
                "clue": p.clue,
            }
            for num, p in number_placements(grid)
        ]
    elif kind == "wordsearch":
        grid = payload["grid"]
        out["grid"] = {"width": grid["width"], "height": grid["height"], "cells": list(grid["cells"])}
        out["words"] = sorted(p["word"] for p in grid["placements"])
    elif kind == "storygame":
        sentences = payload["sentences"]
        out["sentences"] = [sentences[i] for i in payload["shown_order"]]
    elif kind == "qa":
        out["questions"] = [
            {"index": i, "question": rec["question"]}
            for i, rec in enumerate(payload["items"])
        ]
    elif kind == "imagechoice":
        out["items"] = [
            {"index": i, "prompt_word": item["prompt_word"], "options": list(item["options"])}
            for i, item in enumerate(payload["items"])
        ]
    else:
        raise ActivityError(f"unknown kind {kind!r}")
    return out


# ---------------- grading ----------------


def grade_answer(kind: str, payload: dict, answer: dict) -> dict:
    """Stateless grading against the stored answer key; nothing about the
    student is recorded."""
    if not isinstance(answer, dict):
        raise ActivityError("answer must be an object")
    if kind == "crossword":
        return _grade_crossword(payload, answer)
    if kind == "wordsearch":
        return _grade_wordsearch(payload, answer)
    if kind == "storygame":
        return _grade_storygame(payload, answer)
    if kind == "qa":
        return _grade_qa(payload, answer)
    if kind == "imagechoice":
        return _grade_imagechoice(payload, answer)
    raise ActivityError(f"unknown kind {kind!r}")


def _grade_crossword(payload, answer) -> dict:
    proposed = answer.get("cells")
    grid = Grid.from_record(payload["grid"])
    if (
        not isinstance(proposed, list)
        or len(proposed) != grid.height
        or any(not isinstance(r, str) or len(r) != grid.width for r in proposed)
    ):
        raise ActivityError("answer.cells must be the full grid, one string per row")
    mismatches = []
    for r in range(grid.height):
        for c in range(grid.width):
            truth = grid.at(r, c)
            if "A" <= truth <= "Z" and proposed[r][c].upper() != truth:
                mismatches.append([r, c])
    return {"correct": not mismatches, "incorrect_cells": mismatches}


def _grade_wordsearch(payload, answer) -> dict:
    found = answer.get("found")
    if not isinstance(found, list):
        raise ActivityError("answer.found must be a list of placements")
    grid = Grid.from_record(payload["grid"])
    targets = {p.word for p in grid.placements}
    valid: set[str] = set()
    invalid = []
    for rec in found:
        try:
            word = str(rec["word"]).casefold()
            dr, dc = direction_delta(rec["direction"])
            r, c = int(rec["row"]), int(rec["col"])
        except Exception:
            raise ActivityError(f"malformed found-word record: {rec!r}") from None
        cells = [(r + i * dr, c + i * dc) for i in range(len(word))]
        if word in targets and all(grid.in_bounds(rr, cc) for rr, cc in cells) and \
                "".join(grid.at(rr, cc) for rr, cc in cells) == word.upper():
            valid.add(word)  # any true occurrence counts, not just the answer key's
        else:
            invalid.append(rec)
    missing = sorted(targets - valid)
    return {"correct": not missing and not invalid, "missing": missing,
            "invalid": [str(r) for r in invalid]}


def _grade_storygame(payload, answer) -> dict:
    proposed = answer.get("order")
    if not isinstance(proposed, list) or not all(isinstance(i, int) for i in proposed):
        raise ActivityError("answer.order must be a list of integers")
    exercise = StoryExercise(
        tuple(payload["sentences"]), tuple(payload["shown_order"]), 0
    )
    grade = check_story_answer(exercise, proposed)
    return {"correct": grade.correct, "first_error_position": grade.first_error_position}


def _grade_qa(payload, answer) -> dict:
    answers = answer.get("answers")
    items = [QAItem.from_record(rec) for rec in payload["items"]]
    if not isinstance(answers, list) or len(answers) != len(items):
        raise ActivityError(f"answer.answers must list {len(items)} string(s)")
    results = [check_qa_answer(item, str(a)).correct for item, a in zip(items, answers)]
    return {"correct": all(results), "results": results}


def _grade_imagechoice(payload, answer) -> dict:
    choices = answer.get("choices")
    items = payload["items"]
    if not isinstance(choices, list) or len(choices) != len(items):
        raise ActivityError(f"answer.choices must list {len(items)} index(es)")
    results = []
    for item, choice in zip(items, choices):
        if not isinstance(choice, int):
            raise ActivityError("choices must be integers")
        results.append(choice == item["correct_index"])
    return {"correct": all(results), "results": results}
