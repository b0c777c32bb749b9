"""Exhaustive enumeration, the reference answer for small instances."""

import itertools
import logging
import time

import numpy as np

from src.application.solver.greedy import schedule_from_vector
from src.application.solver.models import SolverProblem, SolverResult, SolverStatus
from src.domain.services import partition_objective

logger = logging.getLogger(__name__)

MAX_ASSIGNMENTS = 10**7


class SolverGuardError(ValueError):
    """Raised when an instance is too large to enumerate."""

    pass


def brute_force(problem: SolverProblem, max_assignments: int = MAX_ASSIGNMENTS) -> SolverResult:
    """
    Enumerate all M^N assignments and keep the best feasible one.

    Assignments are visited in lexicographic order of session indices; a
    later assignment replaces the best only when strictly better.

    Raises:
        SolverGuardError: If M^N exceeds max_assignments.
    """
    instance = problem.instance
    n, m = instance.n_papers, instance.n_sessions
    total = m**n
    if total > max_assignments:
        raise SolverGuardError(
            f"Brute force over {m}^{n} = {total} assignments exceeds the limit of {max_assignments}"
        )

    started = time.monotonic()
    values = problem.sim.values
    durations = np.array([paper.duration for paper in instance.papers])
    lengths = np.array([session.length for session in instance.sessions])

    best_vector = None
    best_objective = -np.inf
    for combo in itertools.product(range(m), repeat=n):
        vector = np.fromiter(combo, dtype=int, count=n)
        loads = np.bincount(vector, weights=durations, minlength=m)
        if np.any(loads > lengths):
            continue
        objective = partition_objective(vector, values)
        if objective > best_objective:
            best_objective, best_vector = objective, vector

    elapsed = time.monotonic() - started
    logger.info(f"Brute force enumerated {total} assignments in {elapsed:.2f}s")
    if best_vector is None:
        return SolverResult(
            status=SolverStatus.INFEASIBLE,
            schedule=None,
            objective=None,
            bound=None,
            nodes_explored=total,
            elapsed_seconds=elapsed,
        )
    return SolverResult(
        status=SolverStatus.OPTIMAL,
        schedule=schedule_from_vector(instance, best_vector),
        objective=best_objective,
        bound=best_objective,
        nodes_explored=total,
        elapsed_seconds=elapsed,
    )
