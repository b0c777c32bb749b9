"""CLI interface for session-scheduler."""

import json
import sys
from pathlib import Path
from typing import Any, NoReturn, Optional

import click
from dependency_injector import providers

from config.settings import Settings, settings
from src.application.dtos import (
    ClusteringMethod,
    ClusterRunConfig,
    EvaluateRunConfig,
    IngestCheckConfig,
    LLMScheduleRunConfig,
    SolveRunConfig,
)
from src.application.solver import BoundKind, SolverStatus
from src.container import Container, setup_logging
from src.infrastructure.ai.base_llm_client import LLMError, TransportExhaustedError
from src.infrastructure.clustering.tfidf import TextFields

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3
EXIT_TIMEOUT = 4
EXIT_TRANSPORT = 5

# Initialize container
container = Container()
container.wire(modules=[__name__])

# Setup logging
setup_logging(settings.log_level)


def llm_options(command):
    """Chat backend flags shared by the language-model commands."""
    options = [
        click.option("--replay-dir", type=click.Path(file_okay=False), help="Replay store directory (selects the replay backend)."),
        click.option("--endpoint", help="Chat-completion endpoint URL (selects the http backend)."),
        click.option("--model", help="Model name sent to the endpoint."),
        click.option("--temperature", type=float, help="Sampling temperature."),
        click.option("--max-retries", type=int, help="Attempts per prompt when the response is unusable."),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def _fail(error: BaseException | str, code: Optional[int] = None) -> NoReturn:
    """Print the error in red on standard error and exit."""
    if code is None:
        if isinstance(error, LLMError):
            code = EXIT_TRANSPORT
        elif isinstance(error, ValueError):
            code = EXIT_USAGE
        else:
            code = EXIT_ERROR
    click.echo(click.style(f"✗ Error: {error}", fg="red", bold=True), err=True)
    sys.exit(code)


def _info(ctx: click.Context, text: str) -> None:
    """Human-readable output: standard output, or standard error under --json."""
    click.echo(text, err=ctx.obj["json_output"])


def _emit(ctx: click.Context, payload: dict[str, Any], always: bool = False) -> None:
    """
    Machine-readable output.

    Written to --output when given, otherwise to standard output when --json
    is set (or always is true).
    """
    text = json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
    output = ctx.obj["output"]
    if output:
        Path(output).write_text(text, encoding="utf-8")
    elif ctx.obj["json_output"] or always:
        click.echo(text, nl=False)


def _llm_settings(
    replay_dir: Optional[str],
    endpoint: Optional[str],
    model: Optional[str],
    temperature: Optional[float],
    max_retries: Optional[int],
) -> Settings:
    """Settings with chat flags applied on top of the environment."""
    update: dict[str, Any] = {}
    if replay_dir:
        update.update(llm_backend="replay", llm_replay_dir=replay_dir)
    if endpoint:
        update.update(llm_backend="http", llm_endpoint_url=endpoint)
    if model:
        update["llm_model"] = model
    if temperature is not None:
        update["llm_temperature"] = temperature
    if max_retries is not None:
        update["llm_max_retries"] = max_retries

    effective = Settings.model_validate({**container.config().model_dump(), **update})
    if not effective.has_llm_backend:
        raise ValueError(
            "No chat backend configured. Pass --replay-dir or --endpoint, "
            "or set LLM_REPLAY_DIR / LLM_ENDPOINT_URL."
        )
    return effective


@click.group()
@click.version_option(version="0.1.0")
@click.option("--seed", type=int, default=None, help="Base random seed (default from DEFAULT_SEED).")
@click.option("--json", "json_output", is_flag=True, help="Machine-readable JSON on standard output.")
@click.option("--output", "-o", type=click.Path(dir_okay=False), help="Write the JSON result to this file.")
@click.pass_context
def cli(ctx: click.Context, seed: Optional[int], json_output: bool, output: Optional[str]):
    """
    Session Scheduler - Conference Program Builder

    Cluster papers, solve the session assignment program exactly, and
    evaluate schedules proposed by chat models.
    """
    # Re-read the environment for every invocation
    container.reset_singletons()
    ctx.ensure_object(dict)
    ctx.obj.update(
        seed=seed if seed is not None else container.config().default_seed,
        json_output=json_output,
        output=output,
    )


@cli.command()
@click.option("--papers", "-p", "papers_path", required=True, type=click.Path(exists=True, dir_okay=False), help="Papers CSV.")
@click.option("--method", type=click.Choice([m.value for m in ClusteringMethod]), default="tfidf", show_default=True, help="Clustering method.")
@click.option("--fields", type=click.Choice([f.value for f in TextFields]), default="title", show_default=True, help="Paper text used by TFIDF.")
@click.option("--k", type=int, default=5, show_default=True, help="Number of clusters.")
@click.option("--trials", type=int, default=5, show_default=True, help="Seeded trials (seeds seed..seed+trials-1).")
@click.option("--reference", "reference_path", type=click.Path(exists=True, dir_okay=False), help="Reference labeling CSV (paper_id,cluster).")
@click.option("--labels-dir", type=click.Path(file_okay=False), help="Write one labeling CSV per trial here.")
@llm_options
@click.pass_context
def cluster(
    ctx: click.Context,
    papers_path: str,
    method: str,
    fields: str,
    k: int,
    trials: int,
    reference_path: Optional[str],
    labels_dir: Optional[str],
    replay_dir: Optional[str],
    endpoint: Optional[str],
    model: Optional[str],
    temperature: Optional[float],
    max_retries: Optional[int],
):
    """Cluster papers with TFIDF + k-means or a chat model."""
    try:
        config = ClusterRunConfig(
            seed=ctx.obj["seed"],
            output=ctx.obj["output"],
            json_output=ctx.obj["json_output"],
            papers_path=papers_path,
            method=method,
            fields=fields,
            k=k,
            trials=trials,
            reference_path=reference_path,
            labels_dir=labels_dir,
        )

        if config.method is ClusteringMethod.LLM:
            effective = _llm_settings(replay_dir, endpoint, model, temperature, max_retries)
            with container.config.override(providers.Object(effective)):
                summary = container.cluster_papers_use_case().execute(config)
        else:
            summary = container.cluster_papers_use_case().execute(config)

        _info(ctx, click.style(f"✓ Clustered {len(summary.trials)} trial(s)", fg="green", bold=True))
        for trial in summary.trials:
            line = f"  seed {trial.seed}: {trial.labeling.n_clusters} clusters"
            if trial.scores is not None:
                line += f", {trial.scores}"
            if trial.repaired_papers:
                line += f", {len(trial.repaired_papers)} repaired"
            _info(ctx, line)
        if summary.mean is not None:
            _info(ctx, f"  Mean: {summary.mean}")

        payload = {
            "method": config.method.value,
            "fields": config.fields.value,
            "k": config.k,
            "seeds": config.seeds,
            **summary.to_dict(),
        }
        _emit(ctx, payload)

    except Exception as e:
        _fail(e)


@cli.command()
@click.option("--papers", "-p", "papers_path", required=True, type=click.Path(exists=True, dir_okay=False), help="Papers CSV.")
@click.option("--sessions", "-s", "sessions_path", required=True, type=click.Path(exists=True, dir_okay=False), help="Sessions CSV.")
@click.option("--labeling", "labeling_path", type=click.Path(exists=True, dir_okay=False), help="Labeling CSV; same label means similarity 1.")
@click.option("--similarity", "similarity_path", type=click.Path(exists=True, dir_okay=False), help="Square similarity matrix CSV.")
@click.option("--time-budget", type=float, help="Wall-clock budget in seconds.")
@click.option("--node-limit", type=int, help="Stop after this many search nodes.")
@click.option("--bound", type=click.Choice([b.value for b in BoundKind]), default="pairwise", show_default=True, help="Upper bound used for pruning.")
@click.option("--oracle", is_flag=True, help="Enumerate every assignment (small instances only).")
@click.option("--schedule-out", type=click.Path(dir_okay=False), help="Write the schedule in @-delimited format here.")
@click.pass_context
def solve(
    ctx: click.Context,
    papers_path: str,
    sessions_path: str,
    labeling_path: Optional[str],
    similarity_path: Optional[str],
    time_budget: Optional[float],
    node_limit: Optional[int],
    bound: str,
    oracle: bool,
    schedule_out: Optional[str],
):
    """Solve the session assignment program exactly."""
    try:
        config = SolveRunConfig(
            seed=ctx.obj["seed"],
            output=ctx.obj["output"],
            json_output=ctx.obj["json_output"],
            papers_path=papers_path,
            sessions_path=sessions_path,
            labeling_path=labeling_path,
            similarity_path=similarity_path,
            time_budget=time_budget,
            node_limit=node_limit,
            bound=bound,
            oracle=oracle,
            schedule_out=schedule_out,
        )
        outcome = container.solve_schedule_use_case().execute(config)
    except Exception as e:
        _fail(e)

    result = outcome.result
    click.echo(str(result), err=True)
    if outcome.schedule_text and not schedule_out:
        click.echo(outcome.schedule_text, err=True, nl=False)
    _emit(ctx, result.to_dict(), always=True)

    if result.status is SolverStatus.INFEASIBLE:
        click.echo(click.style("✗ Instance is infeasible", fg="red", bold=True), err=True)
        sys.exit(EXIT_INFEASIBLE)
    if result.status is SolverStatus.TIMEOUT_NO_INCUMBENT:
        click.echo(click.style("✗ Stopped before any feasible schedule was found", fg="red", bold=True), err=True)
        sys.exit(EXIT_TIMEOUT)


@cli.command("llm-schedule")
@click.option("--papers", "-p", "papers_path", required=True, type=click.Path(exists=True, dir_okay=False), help="Papers CSV.")
@click.option("--sessions", "-s", "sessions_path", required=True, type=click.Path(exists=True, dir_okay=False), help="Sessions CSV.")
@click.option("--reference", "reference_path", type=click.Path(exists=True, dir_okay=False), help="Reference schedule CSV (paper_id,session_id).")
@click.option("--papers-per-session", type=int, help="Keep this many papers per reference session.")
@click.option("--session-count", "session_count", type=int, help="Keep this many reference sessions.")
@click.option("--schedule-out", type=click.Path(dir_okay=False), help="Write the returned schedule block here.")
@click.option("--transcript", "transcript_path", type=click.Path(dir_okay=False), help="Write the exchange transcript (JSON lines) here.")
@llm_options
@click.pass_context
def llm_schedule(
    ctx: click.Context,
    papers_path: str,
    sessions_path: str,
    reference_path: Optional[str],
    papers_per_session: Optional[int],
    session_count: Optional[int],
    schedule_out: Optional[str],
    transcript_path: Optional[str],
    replay_dir: Optional[str],
    endpoint: Optional[str],
    model: Optional[str],
    temperature: Optional[float],
    max_retries: Optional[int],
):
    """Ask a chat model for a program and report its violations."""
    try:
        effective = _llm_settings(replay_dir, endpoint, model, temperature, max_retries)
        config = LLMScheduleRunConfig(
            seed=ctx.obj["seed"],
            output=ctx.obj["output"],
            json_output=ctx.obj["json_output"],
            papers_path=papers_path,
            sessions_path=sessions_path,
            reference_path=reference_path,
            papers_per_session=papers_per_session,
            session_count=session_count,
            temperature=effective.llm_temperature,
            max_retries=effective.llm_max_retries,
            schedule_out=schedule_out,
            transcript_path=transcript_path,
        )
        with container.config.override(providers.Object(effective)):
            result = container.llm_schedule_use_case().execute(config)
    except TransportExhaustedError as e:
        where = f" (transcript: {transcript_path})" if transcript_path else ""
        _fail(f"{e}{where}", EXIT_TRANSPORT)
    except Exception as e:
        _fail(e)

    outcome = result.outcome
    report = outcome.report
    status = "✗ Unparseable response" if outcome.unparseable else "✓ Schedule received"
    _info(ctx, click.style(f"{status} after {outcome.attempts} attempt(s)", fg="red" if outcome.unparseable else "green", bold=True))
    _info(ctx, f"  Instance: {result.instance.n_papers} papers, {result.instance.n_sessions} sessions")
    _info(ctx, str(report))
    if result.scores is not None:
        _info(ctx, f"  Scores: {result.scores}")

    _emit(
        ctx,
        {
            "papers": result.instance.n_papers,
            "sessions": result.instance.n_sessions,
            "attempts": outcome.attempts,
            "scores": result.scores.model_dump() if result.scores else None,
            "violations": report.model_dump(),
        },
    )


@cli.command()
@click.option("--papers", "-p", "papers_path", required=True, type=click.Path(exists=True, dir_okay=False), help="Papers CSV.")
@click.option("--sessions", "-s", "sessions_path", required=True, type=click.Path(exists=True, dir_okay=False), help="Sessions CSV.")
@click.option("--reference", "reference_path", required=True, type=click.Path(exists=True, dir_okay=False), help="Reference schedule CSV (paper_id,session_id).")
@click.option("--candidate", "candidate_path", required=True, type=click.Path(exists=True, dir_okay=False), help="Candidate schedule in @-delimited format.")
@click.pass_context
def evaluate(
    ctx: click.Context,
    papers_path: str,
    sessions_path: str,
    reference_path: str,
    candidate_path: str,
):
    """Score a candidate schedule and count its violations."""
    try:
        config = EvaluateRunConfig(
            seed=ctx.obj["seed"],
            output=ctx.obj["output"],
            json_output=ctx.obj["json_output"],
            papers_path=papers_path,
            sessions_path=sessions_path,
            reference_path=reference_path,
            candidate_path=candidate_path,
        )
        outcome = container.evaluate_schedule_use_case().execute(config)

        if outcome.scores is not None:
            _info(ctx, f"Scores: {outcome.scores}")
        else:
            _info(ctx, click.style("⚠ No paper matched the reference; scores skipped", fg="yellow"))
        _info(ctx, str(outcome.report))
        _emit(ctx, outcome.to_dict())

    except Exception as e:
        _fail(e)


@cli.command("ingest-check")
@click.option("--papers", "-p", "papers_path", required=True, type=click.Path(exists=True, dir_okay=False), help="Papers CSV.")
@click.option("--sessions", "-s", "sessions_path", required=True, type=click.Path(exists=True, dir_okay=False), help="Sessions CSV.")
@click.option("--schedule", "schedule_path", type=click.Path(exists=True, dir_okay=False), help="Schedule in @-delimited format to check.")
@click.pass_context
def ingest_check(
    ctx: click.Context,
    papers_path: str,
    sessions_path: str,
    schedule_path: Optional[str],
):
    """Validate input files and, optionally, a schedule against them."""
    try:
        config = IngestCheckConfig(
            seed=ctx.obj["seed"],
            output=ctx.obj["output"],
            json_output=ctx.obj["json_output"],
            papers_path=papers_path,
            sessions_path=sessions_path,
            schedule_path=schedule_path,
        )
        report = container.ingest_check_use_case().execute(config)

        _info(ctx, click.style("✓ Input files are valid", fg="green", bold=True))
        _info(ctx, str(report))
        if not report.capacity_ok:
            _info(ctx, click.style("⚠ Total duration exceeds total capacity", fg="yellow", bold=True))
        _emit(ctx, {**report.model_dump(), "capacity_ok": report.capacity_ok})

    except Exception as e:
        _fail(e)


if __name__ == "__main__":
    cli()
