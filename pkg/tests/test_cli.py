import json

from click.testing import CliRunner

from activityforge.cli import main

VOCAB = "\n".join(
    json.dumps({
        "word": w,
        "tags": ["animals"],
        "definitions": [d],
        "difficulty": "basic",
        "image_asset": None,
    })
    for w, d in [
        ("cat", "a purring pet"), ("rat", "a long-tailed rodent"),
        ("tar", "sticky black stuff"), ("art", "paintings and drawings"),
        ("toad", "a warty hopper"), ("otter", "a playful swimmer"),
    ]
)


def write_config(tmp_path, fmt="toml"):
    vocab_path = tmp_path / "vocab.jsonl"
    vocab_path.write_text(VOCAB + "\n", encoding="utf-8")
    if fmt == "toml":
        config = tmp_path / "forge.toml"
        config.write_text(
            f'store_dir = "store"\nvocabulary_path = "vocab.jsonl"\nmin_words = 3\n',
            encoding="utf-8",
        )
    else:
        config = tmp_path / "forge.json"
        config.write_text(
            json.dumps({"store_dir": "store", "vocabulary_path": "vocab.jsonl", "min_words": 3}),
            encoding="utf-8",
        )
    return config


def test_generate_and_verify_round_trip(tmp_path):
    config = write_config(tmp_path)
    out = tmp_path / "activity.json"
    runner = CliRunner()
    result = runner.invoke(main, [
        "generate", "--kind", "crossword", "--tags", "animals",
        "--seed", "7", "--params", '{"min_words": 3}',
        "--out", str(out), "--config", str(config),
    ])
    assert result.exit_code == 0, result.output
    record = json.loads(out.read_text())
    assert record["kind"] == "crossword" and record["state"] == "published"

    verify = runner.invoke(main, ["verify", str(out)])
    assert verify.exit_code == 0, verify.output
    assert "ok" in verify.output


def test_generate_from_text_stdout(tmp_path):
    config = write_config(tmp_path, fmt="json")
    story = tmp_path / "story.txt"
    story.write_text(
        "The ant worked hard. The bird sang songs. The fox slept all day. "
        "The bear ate honey.", encoding="utf-8",
    )
    runner = CliRunner()
    result = runner.invoke(main, [
        "generate", "--kind", "storygame", "--text-file", str(story),
        "--seed", "3", "--params", '{"n_sentences": 3}', "--config", str(config),
    ])
    assert result.exit_code == 0, result.output
    record = json.loads(result.output)
    assert record["state"] == "draft"
    assert len(record["payload"]["sentences"]) == 3


def test_generate_requires_exactly_one_source(tmp_path):
    runner = CliRunner()
    result = runner.invoke(main, ["generate", "--kind", "qa"])
    assert result.exit_code != 0
    assert "exactly one" in result.output


def test_verify_detects_mutation(tmp_path):
    config = write_config(tmp_path)
    out = tmp_path / "activity.json"
    runner = CliRunner()
    runner.invoke(main, [
        "generate", "--kind", "crossword", "--tags", "animals",
        "--seed", "7", "--params", '{"min_words": 3}',
        "--out", str(out), "--config", str(config),
    ])
    record = json.loads(out.read_text())
    rows = record["payload"]["grid"]["cells"]
    target = record["payload"]["grid"]["placements"][0]
    r, c = target["row"], target["col"]
    rows[r] = rows[r][:c] + ("Q" if rows[r][c] != "Q" else "Z") + rows[r][c + 1 :]
    out.write_text(json.dumps(record), encoding="utf-8")
    result = runner.invoke(main, ["verify", str(out)])
    assert result.exit_code == 1
    assert "MISMATCH" in result.output or "RUN" in result.output


def test_vocab_expand_and_review(tmp_path):
    vocab_path = tmp_path / "vocab.jsonl"
    vocab_path.write_text(
        "\n".join([
            json.dumps({"word": "cat", "tags": ["animal"], "definitions": ["a purring pet"],
                        "difficulty": "basic", "image_asset": None}),
            json.dumps({"word": "dog", "tags": ["animal"], "definitions": ["a loyal pet"],
                        "difficulty": "basic", "image_asset": None}),
        ]) + "\n", encoding="utf-8",
    )
    import shutil
    from pathlib import Path

    fixtures = Path(__file__).parent / "fixtures"
    shutil.copy(fixtures / "toy_embeddings.txt", tmp_path / "emb.txt")
    shutil.copy(fixtures / "toy_frequencies.tsv", tmp_path / "freq.tsv")
    config = tmp_path / "forge.json"
    config.write_text(json.dumps({
        "store_dir": "store",
        "vocabulary_path": "vocab.jsonl",
        "embeddings_path": "emb.txt",
        "frequencies_path": "freq.tsv",
    }), encoding="utf-8")

    runner = CliRunner()
    result = runner.invoke(main, ["vocab", "expand", "--category", "animal",
                                  "--config", str(config)])
    assert result.exit_code == 0, result.output
    assert "fox" in result.output

    result = runner.invoke(main, [
        "vocab", "review", "--word", "fox", "--category", "animal",
        "--decision", "accept", "--definition", "a wild relative of the dog",
        "--config", str(config),
    ])
    assert result.exit_code == 0, result.output
    assert "accepted" in result.output
    assert "fox" in vocab_path.read_text()

    # rejected words stay rejected across CLI invocations
    result = runner.invoke(main, [
        "vocab", "review", "--word", "rabbit", "--category", "animal",
        "--decision", "reject", "--config", str(config),
    ])
    assert result.exit_code == 0, result.output
    result = runner.invoke(main, ["vocab", "expand", "--category", "animal",
                                  "--config", str(config)])
    assert "rabbit" not in result.output
