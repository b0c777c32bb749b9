"""Feasibility and objective rules shared by the solver, metrics and CLI."""

from dataclasses import dataclass, field

import numpy as np

from src.domain.entities import Instance, Schedule, SimilarityMatrix
from src.domain.exceptions import MalformedScheduleError


@dataclass(frozen=True)
class FeasibilityReport:
    """Outcome of check_feasible."""

    ok: bool
    violated_sessions: list[str] = field(default_factory=list)
    unassigned_papers: list[str] = field(default_factory=list)
    session_loads: dict[str, int] = field(default_factory=dict)


def validate_schedule(instance: Instance, schedule: Schedule) -> None:
    """
    Ensure every key is an instance paper and every value an instance session.

    Raises:
        MalformedScheduleError: On the first unknown id.
    """
    for paper_id, session_id in schedule.assignment.items():
        if not instance.has_paper(paper_id):
            raise MalformedScheduleError(f"Schedule references unknown paper '{paper_id}'")
        if not instance.has_session(session_id):
            raise MalformedScheduleError(
                f"Schedule assigns paper '{paper_id}' to unknown session '{session_id}'"
            )


def session_loads(instance: Instance, schedule: Schedule) -> dict[str, int]:
    """Minutes used per session, for every instance session."""
    loads = {session.id: 0 for session in instance.sessions}
    for paper_id, session_id in schedule.assignment.items():
        loads[session_id] += instance.paper(paper_id).duration
    return loads


def check_feasible(instance: Instance, schedule: Schedule) -> FeasibilityReport:
    """
    Check exactly-once assignment and session capacities.

    Args:
        instance: The scheduling instance.
        schedule: Schedule to check (may be partial).

    Returns:
        FeasibilityReport; ok is True iff every paper is assigned and no
        session's total duration exceeds its length.

    Raises:
        MalformedScheduleError: If the schedule names unknown papers or sessions.
    """
    validate_schedule(instance, schedule)

    loads = session_loads(instance, schedule)
    violated = [session.id for session in instance.sessions if loads[session.id] > session.length]
    unassigned = [paper.id for paper in instance.papers if paper.id not in schedule]

    return FeasibilityReport(
        ok=not violated and not unassigned,
        violated_sessions=violated,
        unassigned_papers=unassigned,
        session_loads=loads,
    )


def assignment_vector(instance: Instance, schedule: Schedule) -> np.ndarray:
    """Session index per paper in instance order (-1 when unassigned)."""
    validate_schedule(instance, schedule)
    vector = np.full(instance.n_papers, -1, dtype=int)
    for paper_id, session_id in schedule.assignment.items():
        vector[instance.paper_index(paper_id)] = instance.session_index(session_id)
    return vector


def assignment_matrix(instance: Instance, schedule: Schedule) -> np.ndarray:
    """Binary N x M matrix x with x[i, j] = 1 iff paper i sits in session j."""
    vector = assignment_vector(instance, schedule)
    x = np.zeros((instance.n_papers, instance.n_sessions), dtype=int)
    assigned = vector >= 0
    x[np.nonzero(assigned)[0], vector[assigned]] = 1
    return x


def colocated(instance: Instance, schedule: Schedule, i: int, j: int, m: int) -> bool:
    """Whether papers i and j (instance positions) both sit in session m."""
    vector = assignment_vector(instance, schedule)
    return bool(vector[i] == m and vector[j] == m)


def objective_value(instance: Instance, schedule: Schedule, sim: SimilarityMatrix) -> float:
    """
    Sum of similarities over unordered co-located pairs.

    Raises:
        DimensionMismatchError: If sim is not N x N.
        MalformedScheduleError: If the schedule is not total or names unknown ids.
    """
    sim.require_size(instance.n_papers)
    vector = assignment_vector(instance, schedule)
    if np.any(vector < 0):
        missing = [instance.papers[i].id for i in np.nonzero(vector < 0)[0]]
        raise MalformedScheduleError(f"Schedule is not total; unassigned papers: {missing}")
    return partition_objective(vector, sim.values)


def partition_objective(vector: np.ndarray, values: np.ndarray) -> float:
    """Objective of a session-index vector; the diagonal of values must be zero."""
    same_session = vector[:, None] == vector[None, :]
    return float(np.sum(values * same_session) / 2.0)
