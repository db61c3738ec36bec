import json

import pytest
from fastapi.testclient import TestClient

from activityforge.errors import (
    ActivityError,
    EditRejected,
    InsufficientVocabularyError,
    LifecycleError,
    NotFoundError,
)
from activityforge.service.activities import (
    RECORD_FIELDS,
    ActivityService,
    canonical_json,
    strip_payload,
    verify_payload,
)
from activityforge.service.app import create_app
from activityforge.service.config import ServiceConfig
from activityforge.vocab import load_vocabulary

from conftest import make_vocab_lines

STORY = (
    "One hot day a fox walked through an orchard. The fox saw a bunch of ripe grapes. "
    "The fox jumped as high as he could. The grapes stayed far above his nose. "
    "At last the fox walked away. The fox said the grapes were sour anyway."
)


# ---------------- creation and lifecycle ----------------


def test_vocabulary_activity_publishes_immediately(service):
    activity = service.create_from_vocabulary("wordsearch", ["animals"], {"word_count": 5}, 3)
    assert activity.state == "published"
    assert activity.origin == "vocabulary"
    assert service.playable(activity.id)["kind"] == "wordsearch"


def test_text_activity_starts_draft(service):
    activity = service.create_from_text("storygame", STORY, {"n_sentences": 4}, 5)
    assert activity.state == "draft"
    with pytest.raises(LifecycleError):
        service.playable(activity.id)
    with pytest.raises(LifecycleError):
        service.submit_answer(activity.id, {"order": [0, 1, 2, 3]})
    service.publish(activity.id)
    assert service.playable(activity.id)["playable"] is True


def test_double_publish_rejected(service):
    activity = service.create_from_text("qa", STORY, {}, 1)
    service.publish(activity.id)
    with pytest.raises(LifecycleError):
        service.publish(activity.id)


def test_published_payload_immutable(service):
    activity = service.create_from_text("storygame", STORY, {"n_sentences": 4}, 5)
    service.publish(activity.id)
    with pytest.raises(LifecycleError):
        service.apply_edit(activity.id, {"sentences": [{"index": 0, "text": "Changed."}]})


def test_unknown_activity_not_found(service):
    with pytest.raises(NotFoundError):
        service.get("feedfeedfeedfeed")


def test_insufficient_vocabulary(service, tmp_path):
    with pytest.raises(InsufficientVocabularyError):
        service.create_from_vocabulary("crossword", ["jobs"], {"min_words": 50}, 0)
    sparse = ActivityService(
        ServiceConfig(store_dir=tmp_path / "sparse-store"),
        vocabulary=load_vocabulary(make_vocab_lines([
            ("cat", ["pets"], "a purring pet", "img-cat"),
            ("dog", ["pets"], "a loyal pet", "img-dog"),
            ("owl", ["pets"], "a wise bird", None),
        ])),
    )
    with pytest.raises(InsufficientVocabularyError):
        sparse.create_from_vocabulary("imagechoice", ["pets"], {}, 0)


def test_same_request_same_payload_bytes(service, tmp_path, fixture_vocab):
    a = service.create_from_vocabulary("crossword", ["animals"], {"min_words": 5}, 77)
    other = ActivityService(
        ServiceConfig(store_dir=tmp_path / "other-store"), vocabulary=fixture_vocab
    )
    b = other.create_from_vocabulary("crossword", ["animals"], {"min_words": 5}, 77)
    assert a.id == b.id
    assert canonical_json(a.payload) == canonical_json(b.payload)


def test_create_is_idempotent(service):
    a = service.create_from_text("qa", STORY, {}, 9)
    b = service.create_from_text("qa", STORY, {}, 9)
    assert a.id == b.id
    assert canonical_json(a.payload) == canonical_json(b.payload)


def test_persisted_record_schema_is_closed(service):
    activity = service.create_from_text("qa", STORY, {}, 2)
    record = service.store.load(activity.id)
    assert set(record.keys()) == set(RECORD_FIELDS)


def test_generation_timeout_names_stage(tmp_path, fixture_vocab):
    from activityforge.errors import GenerationTimeout

    config = ServiceConfig(store_dir=tmp_path / "slow-store", generation_budget_s=-1.0)
    slow = ActivityService(config, vocabulary=fixture_vocab)
    with pytest.raises(GenerationTimeout) as exc_info:
        slow.create_from_text("storygame", STORY, {"n_sentences": 4}, 0)
    assert exc_info.value.stage == "story-ranking"


# ---------------- stripping ----------------


@pytest.fixture()
def published_all_kinds(service):
    activities = {}
    activities["crossword"] = service.create_from_vocabulary(
        "crossword", ["animals"], {"min_words": 4, "word_count": 6}, 11
    )
    activities["wordsearch"] = service.create_from_vocabulary(
        "wordsearch", ["food"], {"word_count": 5}, 12
    )
    activities["imagechoice"] = service.create_from_vocabulary(
        "imagechoice", ["animals"], {"n_items": 4}, 13
    )
    for kind, text_params in (("storygame", {"n_sentences": 4}), ("qa", {})):
        act = service.create_from_text(kind, STORY, text_params, 14)
        service.publish(act.id)
        activities[kind] = service.get(act.id)
    return activities


FORBIDDEN_KEYS = {
    "crossword": {"placements", "word", "answer", "unplaced"},
    "wordsearch": {"placements", "answer_key", "row", "col", "direction"},
    "storygame": {"shown_order", "answer", "diagnostics"},
    "qa": {"answer", "answer_span", "resolved_text", "items"},
    "imagechoice": {"correct_index"},
}


def _all_keys(obj):
    keys = set()
    if isinstance(obj, dict):
        for k, v in obj.items():
            keys.add(k)
            keys |= _all_keys(v)
    elif isinstance(obj, list):
        for v in obj:
            keys |= _all_keys(v)
    return keys


def test_stripped_payloads_have_no_key_fields(service, published_all_kinds):
    for kind, activity in published_all_kinds.items():
        stripped = service.playable(activity.id)
        leaked = _all_keys(stripped) & FORBIDDEN_KEYS[kind]
        assert not leaked, f"{kind} leaks {leaked}"


def test_strip_is_idempotent(service, published_all_kinds):
    for activity in published_all_kinds.values():
        stripped = service.playable(activity.id)
        assert strip_payload(activity.kind, stripped, activity.id) == stripped


def test_crossword_strip_masks_letters(service, published_all_kinds):
    stripped = service.playable(published_all_kinds["crossword"].id)
    for row in stripped["grid"]["cells"]:
        assert set(row) <= {".", "#"}
    assert stripped["clues"]
    for clue in stripped["clues"]:
        assert set(clue) == {"number", "row", "col", "direction", "length", "clue"}


def test_storygame_strip_presents_shuffled_order(service):
    activity = service.create_from_text("storygame", STORY, {"n_sentences": 4}, 21)
    service.publish(activity.id)
    stripped = service.playable(activity.id)
    payload = service.get(activity.id).payload
    expected = [payload["sentences"][i] for i in payload["shown_order"]]
    assert stripped["sentences"] == expected


# ---------------- grading round trips ----------------


def test_crossword_key_answer_grades_correct(service, published_all_kinds):
    activity = published_all_kinds["crossword"]
    truth = activity.payload["grid"]["cells"]
    assert service.submit_answer(activity.id, {"cells": truth})["correct"] is True
    wrong = [row.replace(row.strip(".")[0], "Q", 1) if row.strip(".") else row for row in truth]
    result = service.submit_answer(activity.id, {"cells": wrong})
    assert result["correct"] is False and result["incorrect_cells"]


def test_wordsearch_key_answer_grades_correct(service, published_all_kinds):
    activity = published_all_kinds["wordsearch"]
    found = [
        {"word": p["word"], "row": p["row"], "col": p["col"], "direction": p["direction"]}
        for p in activity.payload["grid"]["placements"]
    ]
    assert service.submit_answer(activity.id, {"found": found})["correct"] is True
    partial = service.submit_answer(activity.id, {"found": found[:-1]})
    assert partial["correct"] is False and partial["missing"]


def test_storygame_answer_shapes(service):
    activity = service.create_from_text("storygame", STORY, {"n_sentences": 4}, 31)
    service.publish(activity.id)
    order = service.get(activity.id).payload["shown_order"]
    inverse = [order.index(k) for k in range(len(order))]
    assert service.submit_answer(activity.id, {"order": inverse})["correct"] is True
    from activityforge.errors import StoryError

    with pytest.raises(StoryError):
        service.submit_answer(activity.id, {"order": [0, 0, 1, 2]})


def test_qa_answer_normalization_round_trip(service, published_all_kinds):
    activity = published_all_kinds["qa"]
    answers = [rec["answer"].upper() + "  " for rec in activity.payload["items"]]
    assert service.submit_answer(activity.id, {"answers": answers})["correct"] is True
    wrong = ["definitely not it"] * len(answers)
    assert service.submit_answer(activity.id, {"answers": wrong})["correct"] is False


def test_imagechoice_grading(service, published_all_kinds):
    activity = published_all_kinds["imagechoice"]
    right = [item["correct_index"] for item in activity.payload["items"]]
    assert service.submit_answer(activity.id, {"choices": right})["correct"] is True
    wrong = [(i + 1) % 4 for i in right]
    assert service.submit_answer(activity.id, {"choices": wrong})["correct"] is False


def test_malformed_answers_rejected(service, published_all_kinds):
    with pytest.raises(ActivityError):
        service.submit_answer(published_all_kinds["crossword"].id, {"cells": ["x"]})
    with pytest.raises(ActivityError):
        service.submit_answer(published_all_kinds["qa"].id, {"answers": ["one"]})
    with pytest.raises(ActivityError):
        service.submit_answer(published_all_kinds["imagechoice"].id, {"choices": "nope"})


# ---------------- edits ----------------


def test_clue_edit_applies(service):
    activity = service.create_from_text(
        "crossword", "A fox is a wild animal. A dog is a loyal friend. "
        "An owl is a wise bird. A cat is a soft pet.",
        {"min_words": 1}, 41,
    )
    edited = service.apply_edit(
        activity.id, {"clues": [{"placement": 0, "clue": "rewritten clue"}]}
    )
    assert edited.payload["grid"]["placements"][0]["clue"] == "rewritten clue"
    assert edited.state == "draft"


def test_grid_breaking_edit_rejected_atomically(service):
    activity = service.create_from_text(
        "crossword", "A fox is a wild animal. A dog is a loyal friend. "
        "An owl is a wise bird. A cat is a soft pet.",
        {"min_words": 1}, 42,
    )
    placements = activity.payload["grid"]["placements"]
    target = placements[0]
    with pytest.raises(EditRejected) as exc_info:
        service.apply_edit(
            activity.id,
            {"cells": [{"row": target["row"], "col": target["col"], "letter": "Q"}]},
        )
    assert any(v["rule"] in ("LETTER_MISMATCH", "ACCIDENTAL_RUN") for v in exc_info.value.violations)
    # unchanged on disk
    assert service.get(activity.id).payload == activity.payload


def test_story_sentence_edit(service):
    activity = service.create_from_text("storygame", STORY, {"n_sentences": 4}, 43)
    edited = service.apply_edit(
        activity.id, {"sentences": [{"index": 0, "text": "A fresh first sentence."}]}
    )
    assert edited.payload["sentences"][0] == "A fresh first sentence."


def test_qa_answer_edit_clears_span(service):
    activity = service.create_from_text("qa", STORY, {}, 44)
    edited = service.apply_edit(
        activity.id, {"items": [{"index": 0, "answer": "the hungry fox"}]}
    )
    item = edited.payload["items"][0]
    assert item["answer"] == "the hungry fox"
    assert item["answer_span"] is None


def test_qa_leaking_question_edit_rejected(service):
    activity = service.create_from_text("qa", STORY, {}, 45)
    answer = activity.payload["items"][0]["answer"]
    with pytest.raises(EditRejected):
        service.apply_edit(
            activity.id,
            {"items": [{"index": 0, "question": f"Is it {answer}?"}]},
        )


# ---------------- HTTP API ----------------


@pytest.fixture()
def client(tmp_path, fixture_vocab):
    config = ServiceConfig(store_dir=tmp_path / "http-store", tokens={"tok-1": "teacher"})
    service = ActivityService(config, vocabulary=fixture_vocab)
    app = create_app(config, service)
    return TestClient(app)


TEACHER = {"Authorization": "Bearer tok-1"}


def test_http_from_vocabulary_anonymous(client):
    resp = client.post(
        "/activities/from-vocabulary",
        json={"kind": "wordsearch", "tags": ["animals"], "params": {"word_count": 4}, "seed": 1},
    )
    assert resp.status_code == 201
    body = resp.json()
    assert body["state"] == "published"
    playable = client.get(f"/activities/{body['id']}/playable")
    assert playable.status_code == 200


def test_http_from_text_requires_teacher(client):
    payload = {"kind": "qa", "text": STORY, "params": {}, "seed": 2}
    assert client.post("/activities/from-text", json=payload).status_code == 401
    bad = client.post("/activities/from-text", json=payload,
                      headers={"Authorization": "Bearer wrong"})
    assert bad.status_code == 401
    ok = client.post("/activities/from-text", json=payload, headers=TEACHER)
    assert ok.status_code == 201
    assert ok.json()["state"] == "draft"


def test_http_draft_not_playable(client):
    created = client.post("/activities/from-text",
                          json={"kind": "storygame", "text": STORY,
                                "params": {"n_sentences": 4}, "seed": 3},
                          headers=TEACHER).json()
    resp = client.get(f"/activities/{created['id']}/playable")
    assert resp.status_code == 409
    publish = client.post(f"/activities/{created['id']}/publish", headers=TEACHER)
    assert publish.status_code == 200
    assert client.get(f"/activities/{created['id']}/playable").status_code == 200


def test_http_patch_flow(client):
    created = client.post("/activities/from-text",
                          json={"kind": "storygame", "text": STORY,
                                "params": {"n_sentences": 4}, "seed": 4},
                          headers=TEACHER).json()
    patch = client.patch(f"/activities/{created['id']}",
                         json={"edits": {"sentences": [{"index": 1, "text": "Better words."}]}},
                         headers=TEACHER)
    assert patch.status_code == 200
    assert patch.json()["payload"]["sentences"][1] == "Better words."
    # breaking edit -> 422 with violations
    bad = client.patch(f"/activities/{created['id']}",
                       json={"edits": {"sentences": [{"index": 0, "text": "  "}]}},
                       headers=TEACHER)
    assert bad.status_code == 422
    assert bad.json()["violations"]


def test_http_answers_and_listing(client):
    created = client.post("/activities/from-vocabulary",
                          json={"kind": "imagechoice", "tags": ["animals"],
                                "params": {"n_items": 4}, "seed": 5}).json()
    listing = client.get("/activities", params={"kind": "imagechoice"}).json()
    assert any(a["id"] == created["id"] for a in listing["activities"])
    # answer with all zeros; grading shape is stable regardless of correctness
    graded = client.post(f"/activities/{created['id']}/answers",
                         json={"answer": {"choices": [0, 0, 0, 0]}})
    assert graded.status_code == 200
    assert set(graded.json()) == {"correct", "results"}


def test_http_not_found(client):
    assert client.get("/activities/deadbeefdeadbeef/playable").status_code == 404


def test_http_vocabulary_requires_teacher(client):
    assert client.get("/vocabulary", params={"tags": "animals"}).status_code == 401
    resp = client.get("/vocabulary", params={"tags": "animals"}, headers=TEACHER)
    assert resp.status_code == 200
    assert len(resp.json()["entries"]) == 30


def test_http_generation_error_is_422(client):
    resp = client.post("/activities/from-vocabulary",
                       json={"kind": "crossword", "tags": ["nosuchtag"],
                             "params": {}, "seed": 0})
    assert resp.status_code == 422


def test_static_mounts(tmp_path, fixture_vocab):
    assets = tmp_path / "assets"
    assets.mkdir()
    (assets / "img-cat.png").write_bytes(b"not really a png")
    webapp = tmp_path / "webapp"
    webapp.mkdir()
    (webapp / "index.html").write_text("<html><body>forge</body></html>")
    config = ServiceConfig(store_dir=tmp_path / "s", asset_dir=assets, webapp_dir=webapp)
    static_client = TestClient(create_app(config, ActivityService(config, fixture_vocab)))
    assert static_client.get("/assets/img-cat.png").status_code == 200
    page = static_client.get("/app/")
    assert page.status_code == 200 and "forge" in page.text


# ---------------- payload verifier unit checks ----------------


def test_verify_payload_storygame_rules():
    ok = {"sentences": ["a", "b", "c"], "shown_order": [2, 0, 1]}
    assert verify_payload("storygame", ok) == []
    assert verify_payload("storygame", {"sentences": ["a", "b"], "shown_order": [1, 0]})
    identity = {"sentences": ["a", "b", "c"], "shown_order": [0, 1, 2]}
    assert any(v["rule"] == "ORDER" for v in verify_payload("storygame", identity))


def test_verify_payload_qa_rules():
    good = {"resolved_text": "The fox ran.",
            "items": [{"question": "What ran?", "answer": "The fox",
                       "answer_span": [0, 7]}]}
    assert verify_payload("qa", good) == []
    bad_span = {"resolved_text": "The fox ran.",
                "items": [{"question": "What ran?", "answer": "The fox",
                           "answer_span": [1, 7]}]}
    assert any(v["rule"] == "SPAN_MISMATCH" for v in verify_payload("qa", bad_span))
