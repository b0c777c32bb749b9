"""Shrink an instance while keeping its reference program consistent."""

import logging
from dataclasses import dataclass

import numpy as np

from src.domain.entities import Instance, Paper, Schedule, Session
from src.domain.services import validate_schedule

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DownsampledInstance:
    """A smaller instance and the reference schedule restricted to it."""

    instance: Instance
    reference: Schedule


def _populations(instance: Instance, reference: Schedule) -> dict[str, list[Paper]]:
    validate_schedule(instance, reference)
    populations: dict[str, list[Paper]] = {session.id: [] for session in instance.sessions}
    for paper in instance.papers:
        if paper.id in reference:
            populations[reference.session_of(paper.id)].append(paper)
    dropped = instance.n_papers - sum(len(p) for p in populations.values())
    if dropped:
        logger.warning(f"{dropped} papers have no reference session and are dropped")
    return populations


def _scaled_length(session: Session, original: list[Paper], kept: list[Paper]) -> int:
    """Length for the kept papers with the session's original slack ratio."""
    original_total = sum(paper.duration for paper in original)
    if not original_total:
        return session.length
    kept_total = sum(paper.duration for paper in kept)
    return -(-kept_total * session.length // original_total)


def downsample(
    instance: Instance, reference: Schedule, papers_per_session: int, seed: int
) -> DownsampledInstance:
    """
    Keep at most papers_per_session papers of every reference session.

    Each session keeps a seeded uniform sample of min(papers_per_session,
    population) papers; its length becomes ceil(kept minutes x length /
    original minutes), preserving the original slack ratio. Sessions
    without papers keep their length. Paper order follows the instance.

    Raises:
        ValueError: If papers_per_session < 1.
        MalformedScheduleError: If the reference names unknown ids.
    """
    if papers_per_session < 1:
        raise ValueError(f"papers_per_session must be at least 1, got {papers_per_session}")

    populations = _populations(instance, reference)
    rng = np.random.default_rng(seed)

    kept_ids: set[str] = set()
    sessions: list[Session] = []
    for session in instance.sessions:
        population = populations[session.id]
        size = min(papers_per_session, len(population))
        chosen = sorted(rng.choice(len(population), size=size, replace=False)) if size else []
        kept = [population[i] for i in chosen]
        kept_ids.update(paper.id for paper in kept)
        sessions.append(
            Session(
                id=session.id,
                title=session.title,
                length=_scaled_length(session, population, kept),
            )
        )

    papers = [paper for paper in instance.papers if paper.id in kept_ids]
    logger.info(
        f"Downsampled to {len(papers)} papers ({papers_per_session} per session, seed={seed})"
    )
    return DownsampledInstance(
        instance=Instance.build(papers, sessions),
        reference=reference.restricted_to(kept_ids),
    )


def downsample_sessions(
    instance: Instance, reference: Schedule, session_count: int, seed: int
) -> DownsampledInstance:
    """
    Keep a seeded sample of session_count populated sessions and exactly
    their papers. Lengths are unchanged.

    Raises:
        ValueError: If session_count < 1 or the reference places no paper.
    """
    if session_count < 1:
        raise ValueError(f"session_count must be at least 1, got {session_count}")

    populations = _populations(instance, reference)
    populated = [session for session in instance.sessions if populations[session.id]]
    if not populated:
        raise ValueError("Reference schedule places no paper in any session")

    size = min(session_count, len(populated))
    chosen = sorted(np.random.default_rng(seed).choice(len(populated), size=size, replace=False))
    sessions = [populated[i] for i in chosen]
    kept_ids = {paper.id for session in sessions for paper in populations[session.id]}
    papers = [paper for paper in instance.papers if paper.id in kept_ids]

    logger.info(f"Downsampled to {len(sessions)} sessions, {len(papers)} papers (seed={seed})")
    return DownsampledInstance(
        instance=Instance.build(papers, sessions),
        reference=reference.restricted_to(kept_ids),
    )
