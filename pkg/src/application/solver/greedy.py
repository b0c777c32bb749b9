"""Constructive schedules: greedy warm start and a seeded random baseline."""

import logging
from typing import Optional, Sequence

import numpy as np

from src.application.solver.models import SolverProblem
from src.domain.entities import Instance, Schedule

logger = logging.getLogger(__name__)


def schedule_from_vector(instance: Instance, vector: Sequence[int]) -> Schedule:
    """Schedule from a session index per paper (instance order)."""
    return Schedule(
        {
            paper.id: instance.sessions[int(session_index)].id
            for paper, session_index in zip(instance.papers, vector)
        }
    )


def duration_order(instance: Instance) -> list[int]:
    """Paper positions by descending duration, ties in instance order."""
    return sorted(range(instance.n_papers), key=lambda i: (-instance.papers[i].duration, i))


def greedy_incumbent(problem: SolverProblem) -> Optional[Schedule]:
    """
    First-fit-decreasing placement that follows similarity.

    Each paper, longest first, goes to the session with room that gains the
    most similarity with papers already there; ties go to the session with
    the most remaining capacity, then the lowest index.

    Returns:
        A feasible Schedule, or None when a paper is stranded. None does not
        prove the instance infeasible.
    """
    instance = problem.instance
    values = problem.sim.values
    lengths = np.array([session.length for session in instance.sessions])
    loads = np.zeros(instance.n_sessions, dtype=int)
    gains = np.zeros((instance.n_sessions, instance.n_papers))
    vector = np.full(instance.n_papers, -1, dtype=int)

    for i in duration_order(instance):
        duration = instance.papers[i].duration
        room = lengths - loads
        candidates = [s for s in range(instance.n_sessions) if room[s] >= duration]
        if not candidates:
            logger.debug(f"Greedy pass stranded paper '{instance.papers[i].id}'")
            return None
        best = min(candidates, key=lambda s: (-gains[s, i], -room[s], s))
        vector[i] = best
        loads[best] += duration
        gains[best] += values[i]

    return schedule_from_vector(instance, vector)


def random_feasible_schedule(
    problem: SolverProblem, seed: int, attempts: int = 100
) -> Optional[Schedule]:
    """
    Seeded random placement, the sanity baseline for solver objectives.

    Papers are visited in a random order and each goes to a uniformly chosen
    session with room. A stranded paper restarts the attempt.

    Returns:
        A feasible Schedule, or None after attempts failures.
    """
    if attempts < 1:
        raise ValueError("attempts must be at least 1")

    instance = problem.instance
    rng = np.random.default_rng(seed)
    lengths = np.array([session.length for session in instance.sessions])
    durations = np.array([paper.duration for paper in instance.papers])

    for _ in range(attempts):
        loads = np.zeros(instance.n_sessions, dtype=int)
        vector = np.full(instance.n_papers, -1, dtype=int)
        for i in rng.permutation(instance.n_papers):
            open_sessions = np.nonzero(lengths - loads >= durations[i])[0]
            if open_sessions.size == 0:
                break
            chosen = int(rng.choice(open_sessions))
            vector[i] = chosen
            loads[chosen] += durations[i]
        else:
            return schedule_from_vector(instance, vector)

    logger.warning(f"No random feasible schedule found in {attempts} attempts")
    return None
