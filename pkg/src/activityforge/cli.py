"""The `forge` command line.

    forge generate --kind crossword --tags animals --seed 7 --out act.json
    forge generate --kind qa --text-file story.txt --seed 1 --out act.json
    forge verify act.json
    forge serve --config forge.toml
    forge vocab expand --category animals --config forge.toml
    forge vocab review --word fox --decision accept --definition "..."
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .errors import ForgeError
from .service.activities import ActivityService, verify_payload
from .service.config import ServiceConfig, load_config


def _service(config_path: str | None) -> ActivityService:
    config = load_config(config_path) if config_path else ServiceConfig()
    return ActivityService(config)


@click.group()
def main():
    """Generate, verify and serve English-teaching activities."""


@main.command()
@click.option("--kind", required=True,
              type=click.Choice(["crossword", "wordsearch", "storygame", "qa", "imagechoice"]))
@click.option("--tags", default=None, help="comma-separated vocabulary tags")
@click.option("--text-file", type=click.Path(exists=True, path_type=Path), default=None)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--params", "params_json", default="{}", help="kind-specific params as JSON")
@click.option("--out", type=click.Path(path_type=Path), default=None,
              help="write the activity JSON here (default: stdout)")
@click.option("--config", "config_path", type=click.Path(exists=True), default=None)
def generate(kind, tags, text_file, seed, params_json, out, config_path):
    """Generate one activity from the vocabulary (--tags) or a text file."""
    if (tags is None) == (text_file is None):
        raise click.UsageError("pass exactly one of --tags or --text-file")
    try:
        params = json.loads(params_json)
        svc = _service(config_path)
        if tags is not None:
            tag_list = [t for t in (s.strip() for s in tags.split(",")) if t]
            activity = svc.create_from_vocabulary(kind, tag_list, params, seed)
        else:
            text = text_file.read_text(encoding="utf-8")
            activity = svc.create_from_text(kind, text, params, seed)
    except ForgeError as exc:
        raise click.ClickException(str(exc)) from exc
    doc = json.dumps(activity.to_record(), ensure_ascii=False, indent=2)
    if out is None:
        click.echo(doc)
    else:
        out.write_text(doc + "\n", encoding="utf-8")
        click.echo(f"{activity.kind} activity {activity.id} ({activity.state}) -> {out}")


@main.command()
@click.argument("activity_file", type=click.Path(exists=True, path_type=Path))
def verify(activity_file):
    """Re-check an activity JSON against its kind's validity rules."""
    record = json.loads(activity_file.read_text(encoding="utf-8"))
    violations = verify_payload(record["kind"], record["payload"])
    if violations:
        for v in violations:
            click.echo(f"{v['rule']}: {v['message']}")
        sys.exit(1)
    click.echo("ok")


@main.command()
@click.option("--config", "config_path", type=click.Path(exists=True), required=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(config_path, host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service.app import create_app

    uvicorn.run(create_app(load_config(config_path)), host=host, port=port, log_level="info")


@main.group()
def vocab():
    """Vocabulary expansion and curation."""


@vocab.command()
@click.option("--category", required=True)
@click.option("--k", "k_neighbors", type=int, default=None)
@click.option("--config", "config_path", type=click.Path(exists=True), required=True)
def expand(category, k_neighbors, config_path):
    """Propose expansion candidates for a category."""
    svc = _service(config_path)
    params = {} if k_neighbors is None else {"k_neighbors": k_neighbors}
    try:
        candidates = svc.expand_vocabulary(category, params)
    except ForgeError as exc:
        raise click.ClickException(str(exc)) from exc
    for c in candidates:
        rank = c.frequency_rank if c.frequency_rank is not None else "-"
        click.echo(f"{c.word}\t{c.similarity:.4f}\trank={rank}")


@vocab.command()
@click.option("--word", required=True)
@click.option("--category", required=True, help="category the word was proposed for")
@click.option("--decision", required=True, type=click.Choice(["accept", "reject"]))
@click.option("--definition", "definitions", multiple=True)
@click.option("--config", "config_path", type=click.Path(exists=True), required=True)
def review(word, category, decision, definitions, config_path):
    """Accept or reject an expansion candidate.

    Re-runs the (deterministic) expansion for the category to find the
    proposal, applies the decision and persists the updated vocabulary."""
    svc = _service(config_path)
    try:
        svc.expand_vocabulary(category)
        reviewed = svc.review_vocabulary(word, decision, list(definitions) or None, category)
    except ForgeError as exc:
        raise click.ClickException(str(exc)) from exc
    click.echo(f"{reviewed.word}: {reviewed.status}")


if __name__ == "__main__":
    main()
