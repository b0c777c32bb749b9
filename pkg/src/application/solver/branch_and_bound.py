"""Exact depth-first branch-and-bound for the session assignment program.

Only the per-paper session choice is searched; whether two papers share a
session follows from those choices, so no pair variables are kept.
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from src.application.solver.greedy import duration_order, greedy_incumbent, schedule_from_vector
from src.application.solver.models import BoundKind, SolverProblem, SolverResult, SolverStatus
from src.domain.entities import Schedule
from src.domain.services import assignment_vector, check_feasible, partition_objective

logger = logging.getLogger(__name__)

EPSILON = 1e-10
CHECK_INTERVAL = 256


@dataclass
class _Frame:
    """Children of one search node, explored in order."""

    paper: int
    children: list[int]
    child_bounds: list[float]
    next_child: int = 0
    applied: Optional[int] = None
    saved: tuple[float, float, float] = (0.0, 0.0, 0.0)

    def open_bound(self) -> float:
        """Upper bound over children not yet entered."""
        rest = self.child_bounds[self.next_child:]
        return max(rest) if rest else -np.inf


@dataclass
class _SearchState:
    """Mutable partial assignment with incremental similarity sums."""

    values: np.ndarray
    durations: np.ndarray
    lengths: np.ndarray
    vector: np.ndarray = field(init=False)
    loads: np.ndarray = field(init=False)
    gains: np.ndarray = field(init=False)  # gains[s, p]: similarity of p with papers in s
    placed_mass: np.ndarray = field(init=False)  # similarity of p with all placed papers
    row_mass: np.ndarray = field(init=False)
    total_mass: float = field(init=False)
    objective: float = 0.0
    assigned_mass: float = 0.0  # pairs with both papers placed
    free_mass: float = field(init=False)  # pairs with neither paper placed
    remaining_duration: int = field(init=False)

    def __post_init__(self) -> None:
        n, m = len(self.durations), len(self.lengths)
        self.vector = np.full(n, -1, dtype=int)
        self.loads = np.zeros(m, dtype=int)
        self.gains = np.zeros((m, n))
        self.placed_mass = np.zeros(n)
        self.row_mass = self.values.sum(axis=1)
        self.total_mass = float(self.values.sum() / 2.0)
        self.free_mass = self.total_mass
        self.remaining_duration = int(self.durations.sum())

    def apply(self, paper: int, session: int) -> None:
        self.objective += self.gains[session, paper]
        self.assigned_mass += self.placed_mass[paper]
        self.free_mass -= self.row_mass[paper] - self.placed_mass[paper]
        self.gains[session] += self.values[paper]
        self.placed_mass += self.values[paper]
        self.loads[session] += self.durations[paper]
        self.remaining_duration -= int(self.durations[paper])
        self.vector[paper] = session

    def undo(self, paper: int, session: int, saved: tuple[float, float, float]) -> None:
        self.objective, self.assigned_mass, self.free_mass = saved
        self.gains[session] -= self.values[paper]
        self.placed_mass -= self.values[paper]
        self.loads[session] -= self.durations[paper]
        self.remaining_duration += int(self.durations[paper])
        self.vector[paper] = -1

    def snapshot(self) -> tuple[float, float, float]:
        return (self.objective, self.assigned_mass, self.free_mass)

    def capacity_ok(self) -> bool:
        """Remaining papers fit into the total remaining room."""
        return self.remaining_duration <= int(np.sum(self.lengths - self.loads))

    def pairwise_bound(self) -> float:
        """Current objective plus every pair not yet realized."""
        return self.objective + self.total_mass - self.assigned_mass

    def best_session_bound(self, unplaced: np.ndarray) -> float:
        """
        Current objective, plus pairs among unplaced papers, plus for each
        unplaced paper its best gain over sessions that still have room.
        Returns -inf when some unplaced paper fits nowhere.
        """
        if unplaced.size == 0:
            return self.objective
        room = self.lengths - self.loads
        fits = room[:, None] >= self.durations[unplaced][None, :]
        if not np.all(fits.any(axis=0)):
            return -np.inf
        best = np.where(fits, self.gains[:, unplaced], -np.inf).max(axis=0)
        return self.objective + self.free_mass + float(best.sum())


class BranchAndBoundSolver:
    """
    Depth-first branch-and-bound over per-paper session choices.

    Papers are branched in descending duration order. Children are the
    sessions with room, by descending similarity gain then index; among
    empty sessions of equal length only the lowest-indexed one is tried.
    A node is pruned when the remaining papers exceed the remaining total
    room, or when its bound cannot beat the incumbent.
    """

    def __init__(self, problem: SolverProblem, bound: BoundKind = BoundKind.PAIRWISE):
        self.problem = problem
        self.bound_kind = BoundKind(bound)
        instance = problem.instance
        self.order = duration_order(instance)
        self.state = _SearchState(
            values=np.asarray(problem.sim.values, dtype=float),
            durations=np.array([paper.duration for paper in instance.papers]),
            lengths=np.array([session.length for session in instance.sessions]),
        )
        self.best_objective = -np.inf
        self.best_vector: Optional[np.ndarray] = None
        self.nodes = 0
        self.bound_history: list[float] = []

    def solve(self) -> SolverResult:
        """Run the search until exhaustion, time budget or node limit."""
        instance = self.problem.instance
        started = time.monotonic()
        logger.info(
            f"Solving: {instance.n_papers} papers, {instance.n_sessions} sessions, "
            f"bound={self.bound_kind.value}, time_budget={self.problem.time_budget}"
        )

        warm = greedy_incumbent(self.problem)
        if warm is not None:
            self.best_vector = assignment_vector(instance, warm)
            self.best_objective = partition_objective(self.best_vector, self.state.values)
            logger.debug(f"Greedy incumbent objective {self.best_objective:.6f}")

        root_bound = self.state.pairwise_bound()
        self.bound_history.append(max(root_bound, self.best_objective))

        stack = [self._frame(0)] if self.state.capacity_ok() else []
        stopped: Optional[str] = None
        checkpoint = 0
        while stack:
            if self.nodes >= checkpoint + CHECK_INTERVAL:
                checkpoint = self.nodes
                bound = self._global_bound(stack)
                logger.debug(
                    f"nodes={self.nodes} depth={len(stack)} "
                    f"incumbent={self.best_objective:.6f} bound={bound:.6f}"
                )
                stopped = self._out_of_time(started)
            if stopped is None and self._out_of_nodes():
                stopped = "node-limit"
            if stopped:
                break
            self._step(stack)

        elapsed = time.monotonic() - started
        result = self._result(stack, stopped, elapsed)
        logger.info(
            f"Solver finished: status={result.status.value}, objective={result.objective}, "
            f"nodes={result.nodes_explored}, elapsed={elapsed:.2f}s"
        )
        return result

    def _step(self, stack: list[_Frame]) -> None:
        state = self.state
        frame = stack[-1]
        if frame.applied is not None:
            state.undo(frame.paper, frame.applied, frame.saved)
            frame.applied = None
        if frame.next_child >= len(frame.children):
            stack.pop()
            return

        session = frame.children[frame.next_child]
        frame.next_child += 1
        self.nodes += 1

        frame.saved = state.snapshot()
        state.apply(frame.paper, session)
        frame.applied = session

        if not state.capacity_ok():
            return
        depth = len(stack)
        if self._node_bound(depth) <= self.best_objective + EPSILON:
            return
        if depth == len(self.order):
            # bound above the incumbent at a leaf means a strict improvement
            self.best_objective = state.objective
            self.best_vector = state.vector.copy()
            return
        stack.append(self._frame(depth))

    def _node_bound(self, depth: int) -> float:
        if self.bound_kind is BoundKind.BEST_SESSION:
            unplaced = np.array(self.order[depth:], dtype=int)
            return self.state.best_session_bound(unplaced)
        return self.state.pairwise_bound()

    def _frame(self, depth: int) -> _Frame:
        state = self.state
        paper = self.order[depth]
        duration = state.durations[paper]

        children: list[int] = []
        seen_empty_lengths: set[int] = set()
        for s in range(len(state.lengths)):
            if state.loads[s] + duration > state.lengths[s]:
                continue
            if state.loads[s] == 0:
                length = int(state.lengths[s])
                if length in seen_empty_lengths:
                    continue
                seen_empty_lengths.add(length)
            children.append(s)
        children.sort(key=lambda s: (-state.gains[s, paper], s))

        base = state.objective + state.total_mass - state.assigned_mass - state.placed_mass[paper]
        child_bounds = [float(base + state.gains[s, paper]) for s in children]
        return _Frame(paper=paper, children=children, child_bounds=child_bounds)

    def _out_of_nodes(self) -> bool:
        limit = self.problem.node_limit
        return limit is not None and self.nodes >= limit

    def _out_of_time(self, started: float) -> Optional[str]:
        budget = self.problem.time_budget
        if budget is not None and time.monotonic() - started > budget:
            return "time"
        return None

    def _global_bound(self, stack: list[_Frame]) -> float:
        """Best objective any unexplored node could reach, never rising."""
        open_bounds = [frame.open_bound() for frame in stack]
        current = max([self.best_objective, *open_bounds])
        bound = min(self.bound_history[-1], current)
        self.bound_history.append(bound)
        return bound

    def _result(self, stack: list[_Frame], stopped: Optional[str], elapsed: float) -> SolverResult:
        instance = self.problem.instance
        schedule: Optional[Schedule] = None
        objective: Optional[float] = None
        if self.best_vector is not None:
            schedule = schedule_from_vector(instance, self.best_vector)
            objective = partition_objective(self.best_vector, self.state.values)
            report = check_feasible(instance, schedule)
            if not report.ok:
                raise RuntimeError(f"Solver produced an infeasible schedule: {report}")

        if stopped is None:
            if schedule is None:
                status, bound = SolverStatus.INFEASIBLE, None
            else:
                status, bound = SolverStatus.OPTIMAL, objective
                self.bound_history.append(objective)
        else:
            bound = self._global_bound(stack)
            if schedule is None:
                status = SolverStatus.TIMEOUT_NO_INCUMBENT
            elif stopped == "node-limit":
                status = SolverStatus.FEASIBLE_INCUMBENT
            else:
                status = SolverStatus.TIMEOUT_WITH_INCUMBENT
            if objective is not None:
                bound = max(bound, objective)

        return SolverResult(
            status=status,
            schedule=schedule,
            objective=objective,
            bound=bound,
            nodes_explored=self.nodes,
            elapsed_seconds=elapsed,
            bound_history=tuple(self.bound_history),
        )


def solve(
    problem: SolverProblem,
    bound: BoundKind | str = BoundKind.PAIRWISE,
) -> SolverResult:
    """
    Solve the session assignment program to optimality (or until stopped).

    Args:
        problem: Instance, similarities and stopping limits.
        bound: "pairwise" (default) or the tighter "best-session" bound.

    Returns:
        SolverResult. Every returned schedule passes check_feasible.

    Raises:
        DimensionMismatchError: If the similarity matrix does not match the
            instance (raised when the problem is built).
    """
    return BranchAndBoundSolver(problem, BoundKind(bound)).solve()
