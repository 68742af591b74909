"""Command line interface.

``build-index`` and ``train`` are offline builders writing deterministic
artifacts; ``query``, ``categorize``, ``vote`` and ``stats`` are thin
clients of the HTTP API, served either by a remote instance (--server)
or by the same app mounted in-process over the local index. ``serve``
runs the HTTP service for real.
"""

from __future__ import annotations

from pathlib import Path

import click

from .client import ServiceClient, ServiceError
from .config import ServiceConfig
from .corpus import load_training_labels
from .engine import DEFAULT_MODEL_FILE, Engine, build_index
from .graph import DEFAULT_ALPHA
from .names import DEFAULT_MATCH_THRESHOLD
from .service import create_app

DEFAULT_INDEX_DIR = "index"


def _client(
    server: str | None,
    index_dir: str,
    model: str | None = None,
    require_model: bool = False,
) -> ServiceClient:
    if server:
        return ServiceClient(base_url=server)
    engine = Engine.from_index(index_dir, model_path=model)
    if require_model and engine.model is None:
        raise click.ClickException(
            f"no model at {Path(index_dir) / DEFAULT_MODEL_FILE}; run 'expertnet train' first"
        )
    return ServiceClient(app=create_app(engine))


@click.group()
def main():
    """Expert search over a fused coauthorship/friendship network."""


@main.command("build-index")
@click.argument("corpus_dir", type=click.Path(exists=True, file_okay=False))
@click.argument("out_dir", default=DEFAULT_INDEX_DIR)
@click.option("--alpha", default=DEFAULT_ALPHA, show_default=True,
              help="weight a friendship edge adds")
@click.option("--match-threshold", default=DEFAULT_MATCH_THRESHOLD, show_default=True,
              help="max normalized edit distance for an author->profile link")
@click.option("--lenient", is_flag=True, help="skip malformed corpus lines instead of failing")
def build_index_cmd(corpus_dir, out_dir, alpha, match_threshold, lenient):
    """Resolve persons, build the social graph, write the index dir."""
    stats = build_index(
        corpus_dir, out_dir, alpha=alpha, match_threshold=match_threshold, strict=not lenient
    )
    click.echo(f"index written to {out_dir}")
    click.echo(stats.render())


@main.command()
@click.option("--index", "index_dir", default=DEFAULT_INDEX_DIR, show_default=True)
@click.option("--labels", default=None, type=click.Path(exists=True, dir_okay=False),
              help="training labels file; defaults to the corpus labels, or bootstrap labels")
@click.option("--out", "out_path", default=None,
              help=f"model output path [default: <index>/{DEFAULT_MODEL_FILE}]")
@click.option("--min-leaf", default=2, show_default=True)
@click.option("--max-depth", default=6, show_default=True)
def train(index_dir, labels, out_path, min_leaf, max_depth):
    """Fit the expertise decision tree and write the model file."""
    engine = Engine.from_index(index_dir)
    if labels:
        engine.corpus.labels = load_training_labels(labels)
    model = engine.train(min_leaf=min_leaf, max_depth=max_depth)
    out = Path(out_path) if out_path else Path(index_dir) / DEFAULT_MODEL_FILE
    out.write_text(model.to_text(), encoding="utf-8")
    click.echo(f"model written to {out} (depth {model.depth()}, "
               f"{model.training_size()} training rows)")


@main.command()
@click.option("--category", required=True, help="category id to search")
@click.option("--status", default=None, help="comma-separated status filter")
@click.option("-k", "k", default=20, show_default=True, help="max results")
@click.option("--index", "index_dir", default=DEFAULT_INDEX_DIR, show_default=True)
@click.option("--model", default=None, help="model file override")
@click.option("--server", default=None, help="query a running service instead of the local index")
def query(category, status, k, index_dir, model, server):
    """Ranked experts for a category: rank, person id, name, status, score."""
    try:
        results = _client(server, index_dir, model, require_model=True).experts(
            category, status, k
        )
    except ServiceError as exc:
        raise click.ClickException(str(exc)) from None
    for row in results:
        click.echo(
            f"{row['rank']}\t{row['person_id']}\t{row['name']}\t"
            f"{row['status']}\t{row['score']:.9g}"
        )


@main.command()
@click.argument("text")
@click.option("--index", "index_dir", default=DEFAULT_INDEX_DIR, show_default=True)
@click.option("--server", default=None)
@click.option("--lucky", is_flag=True, help="print only the best category")
def categorize(text, index_dir, server, lucky):
    """Suggest categories for free text."""
    try:
        suggestions = _client(server, index_dir).categorize(text)
    except ServiceError as exc:
        raise click.ClickException(str(exc)) from None
    if lucky:
        suggestions = suggestions[:1]
    for s in suggestions:
        click.echo(f"{s['rank']}\t{s['category_id']}\t{s['label']}\t{s['score']:.9g}")


@main.command()
@click.option("--person", "person_id", required=True)
@click.option("--delta", type=click.Choice(["+1", "-1"]), required=True)
@click.option("--voter", "voter_token", required=True, help="opaque voter token")
@click.option("--index", "index_dir", default=DEFAULT_INDEX_DIR, show_default=True)
@click.option("--server", default=None)
def vote(person_id, delta, voter_token, index_dir, server):
    """Vote a person up or down; prints the new tally."""
    try:
        tally = _client(server, index_dir).vote(person_id, 1 if delta == "+1" else -1, voter_token)
    except ServiceError as exc:
        raise click.ClickException(str(exc)) from None
    click.echo(f"tally {tally}")


@main.command()
@click.option("--index", "index_dir", default=DEFAULT_INDEX_DIR, show_default=True)
@click.option("--server", default=None)
def stats(index_dir, server):
    """Graph statistics, including the clique-like component count."""
    try:
        s = _client(server, index_dir).stats()
    except ServiceError as exc:
        raise click.ClickException(str(exc)) from None
    click.echo(
        f"nodes: {s['node_count']}\n"
        f"edges: {s['edge_count']}\n"
        f"connected components: {s['connected_component_count']}\n"
        f"largest component size: {s['largest_component_size']}\n"
        f"clique-like components: {s['clique_like_component_count']}"
    )


@main.command()
@click.option("--config", "config_path", required=True,
              type=click.Path(exists=True, dir_okay=False))
@click.option("--host", default="127.0.0.1", show_default=True)
def serve(config_path, host):
    """Run the HTTP service."""
    import uvicorn

    cfg = ServiceConfig.load(config_path)
    engine = cfg.build_engine()
    click.echo(f"serving {cfg.corpus_dir} on {host}:{cfg.port}")
    uvicorn.run(create_app(engine), host=host, port=cfg.port)


if __name__ == "__main__":
    main()
