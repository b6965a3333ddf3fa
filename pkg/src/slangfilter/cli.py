"""Command-line interface: init, filter, review, serve, report.

Exit status of `filter` encodes the verdict: 0 Clean, 2 Blocked,
3 NeedsRevision, 4 Flagged; 1 is an operational error (also for every other
subcommand). In human mode the report goes to stderr and the text itself is
echoed to stdout when it may be forwarded, so the command composes in shell
pipelines; --json writes a machine-readable report to stdout instead.
"""
from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .learner import DEFAULT_THRESHOLD, LearnerConfig
from .pipeline import (
    DetectionReport,
    Mode,
    PipelineConfig,
    Verdict,
    apply_review,
    make_decision,
    process,
    report_to_dict,
)
from .seeds import seed_bundle
from .store import StoreBundle, StoreError, append_audit, load_store, persist_store, suspicious_to_json
from .suspicious import DEFAULT_WINDOW_LENGTH, WindowConfig

VERDICT_EXIT = {
    Verdict.CLEAN: 0,
    Verdict.BLOCKED: 2,
    Verdict.NEEDS_REVISION: 3,
    Verdict.FLAGGED: 4,
}


def _store_option(command):
    return click.option(
        "--store", "store_dir", default=Path("store"), show_default=True,
        type=click.Path(file_okay=False, path_type=Path), help="Store directory.",
    )(command)


def _pipeline_options(command):
    for option in (
        click.option("--mode", type=click.Choice([m.value for m in Mode]),
                     default=Mode.ENFORCE.value, show_default=True,
                     help="Whether rejection verdicts forbid forwarding."),
        click.option("--window-length", type=int, default=DEFAULT_WINDOW_LENGTH,
                     show_default=True, help="Character window length for partial matching."),
        click.option("--threshold", type=int, default=DEFAULT_THRESHOLD,
                     show_default=True, help="Accumulated value at which a word is promoted."),
        click.option("--soundalike-fallback", is_flag=True, default=False,
                     help="Also match words phonetically against the lexicon."),
    ):
        command = option(command)
    return command


def _build_config(mode: str, window_length: int, threshold: int,
                  soundalike_fallback: bool) -> PipelineConfig:
    try:
        return PipelineConfig(
            mode=Mode(mode),
            window=WindowConfig(length=window_length),
            learner=LearnerConfig(threshold=threshold),
            soundalike_fallback=soundalike_fallback,
        )
    except ValueError as exc:
        raise click.ClickException(str(exc))


def _load(store_dir: Path) -> StoreBundle:
    try:
        return load_store(store_dir)
    except StoreError as exc:
        raise click.ClickException(str(exc))


@click.group()
def cli() -> None:
    """Screen text for slang/jargon words and learn new ones under review."""


@cli.command()
@_store_option
def init(store_dir: Path) -> None:
    """Create a new store seeded with the built-in lexicon and concepts."""
    if store_dir.exists() and any(store_dir.iterdir()):
        raise click.ClickException(f"{store_dir} is not empty")
    persist_store(seed_bundle(), store_dir)
    click.echo(f"initialized store at {store_dir}")


def _echo_human_report(report: DetectionReport, bundle: StoreBundle, threshold: int) -> None:
    err = lambda message: click.echo(message, err=True)
    err(f"verdict: {report.verdict.value}")
    if report.concept is not None:
        concept = report.concept.concept
        err(f"concept: {concept.name} (weight {concept.weight}, "
            f"overlap {report.concept.overlap})")
    for match in report.exact_matches:
        err(f"  slang word: {match.lexeme} (position {match.token_position})")
    for match in report.soundalike_matches:
        err(f"  sounds like slang word {match.canonical}: {match.variant} "
            f"({match.source}, position {match.token_position})")
    for hit in report.suspicion_hits:
        record = bundle.find_suspicious(hit.word)
        state = f"count={record.count} value={record.value}/{threshold}" if record \
            else "promoted"
        err(f"  suspicious: {hit.word} ~ {hit.matched_slang} "
            f"(window {hit.window!r} at {hit.offset}, position {hit.token_position}) {state}")
    if report.promotions:
        err("promoted to slang lexicon: " + ", ".join(report.promotions))


@cli.command(name="filter")
@click.argument("input", type=click.File("r", encoding="utf-8"), default="-")
@_store_option
@_pipeline_options
@click.option("--json", "as_json", is_flag=True, default=False,
              help="Print a machine-readable report to stdout.")
def filter_text(input, store_dir: Path, mode: str, window_length: int, threshold: int,
                soundalike_fallback: bool, as_json: bool) -> None:
    """Filter INPUT (a file, or stdin by default) against the store."""
    text = input.read()
    bundle = _load(store_dir)
    config = _build_config(mode, window_length, threshold, soundalike_fallback)
    report = process(text, bundle, config)
    if report.suspicion_hits or report.promotions:
        persist_store(bundle, store_dir)
    if as_json:
        click.echo(json.dumps(report_to_dict(report), ensure_ascii=False, indent=2))
    else:
        _echo_human_report(report, bundle, threshold)
        if report.permits_forwarding(config.mode):
            click.echo(text, nl=False)
    sys.exit(VERDICT_EXIT[report.verdict])


@cli.group()
def review() -> None:
    """Inspect and decide on queued suspicious words."""


@review.command(name="list")
@_store_option
@click.option("--json", "as_json", is_flag=True, default=False)
def review_list(store_dir: Path, as_json: bool) -> None:
    """Print the suspicious table, highest accumulated value first."""
    bundle = _load(store_dir)
    rows = sorted(bundle.suspicious, key=lambda r: (-r.value, r.id))
    if as_json:
        click.echo(json.dumps([suspicious_to_json(r) for r in rows],
                              ensure_ascii=False, indent=2))
        return
    if not rows:
        click.echo("suspicious queue is empty")
        return
    width = max(len(r.word) for r in rows)
    click.echo(f"{'word':<{width}}  count  value  matched slang")
    for record in rows:
        click.echo(f"{record.word:<{width}}  {record.count:>5}  {record.value:>5}  "
                   f"{record.matched_slang}")


def _decide(store_dir: Path, word: str, action: str) -> None:
    bundle = _load(store_dir)
    decision = make_decision(word, action)
    try:
        apply_review(bundle, decision)
    except KeyError as exc:
        raise click.ClickException(str(exc.args[0]))
    persist_store(bundle, store_dir)
    append_audit(store_dir, decision.to_json())
    click.echo(f"{action}ed {word}")


@review.command()
@click.argument("word")
@_store_option
def confirm(word: str, store_dir: Path) -> None:
    """Confirm WORD as slang: it moves into the lexicon immediately."""
    _decide(store_dir, word, "confirm")


@review.command()
@click.argument("word")
@_store_option
def dismiss(word: str, store_dir: Path) -> None:
    """Dismiss WORD for now; it stays queued and keeps accumulating evidence."""
    _decide(store_dir, word, "dismiss")


@cli.command()
@_store_option
@_pipeline_options
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8377, show_default=True)
@click.option("--ui", "ui_dir", default=None,
              type=click.Path(exists=True, file_okay=False, path_type=Path),
              help="Serve a static moderation UI from this directory.")
def serve(store_dir: Path, mode: str, window_length: int, threshold: int,
          soundalike_fallback: bool, host: str, port: int, ui_dir: Path | None) -> None:
    """Run the HTTP review service."""
    import uvicorn

    from .service import create_app

    config = _build_config(mode, window_length, threshold, soundalike_fallback)
    try:
        app = create_app(store_dir, config, ui_dir=ui_dir)
    except StoreError as exc:
        raise click.ClickException(str(exc))
    try:
        uvicorn.run(app, host=host, port=port, log_level="info")
    except OSError as exc:
        raise click.ClickException(f"cannot serve on {host}:{port}: {exc}")


@cli.command(name="report")
@_store_option
@click.option("--out", "out_dir", default=Path("reports"), show_default=True,
              type=click.Path(file_okay=False, path_type=Path),
              help="Directory for the CSV and figure files.")
@click.option("--threshold", type=int, default=DEFAULT_THRESHOLD, show_default=True)
def report_queue(store_dir: Path, out_dir: Path, threshold: int) -> None:
    """Export the suspicious queue as CSV plus a threshold-progress chart."""
    from .reporting import export_queue_report

    bundle = _load(store_dir)
    csv_path, figure_path = export_queue_report(bundle, threshold, out_dir)
    click.echo(f"wrote {csv_path}")
    click.echo(f"wrote {figure_path}")


def main() -> None:
    """Console entry point; all operational/usage errors exit with status 1."""
    try:
        cli.main(standalone_mode=False)
    except click.exceptions.Exit as exc:
        sys.exit(exc.exit_code)
    except click.ClickException as exc:
        exc.show()
        sys.exit(1)
    except click.Abort:
        click.echo("aborted", err=True)
        sys.exit(1)


if __name__ == "__main__":
    main()
