"""Problem and result types for the exact session solver."""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Optional

from src.domain.entities import Instance, Schedule, SimilarityMatrix


class SolverStatus(str, Enum):
    """How a solver run ended."""

    OPTIMAL = "optimal"
    FEASIBLE_INCUMBENT = "feasible-incumbent"  # node limit hit with a schedule in hand
    INFEASIBLE = "infeasible"
    TIMEOUT_WITH_INCUMBENT = "timeout-with-incumbent"
    TIMEOUT_NO_INCUMBENT = "timeout-no-incumbent"


class BoundKind(str, Enum):
    """Admissible upper bound used for pruning."""

    PAIRWISE = "pairwise"
    BEST_SESSION = "best-session"


@dataclass(frozen=True)
class SolverProblem:
    """
    One instance of the session assignment program.

    Attributes:
        instance: Papers and sessions.
        sim: N x N similarities in instance paper order.
        time_budget: Wall-clock seconds, or None to run to optimality.
        node_limit: Stop after this many search nodes, or None.
    """

    instance: Instance
    sim: SimilarityMatrix
    time_budget: Optional[float] = None
    node_limit: Optional[int] = None

    def __post_init__(self) -> None:
        self.sim.require_size(self.instance.n_papers)
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("time_budget must be positive")
        if self.node_limit is not None and self.node_limit < 1:
            raise ValueError("node_limit must be at least 1")


@dataclass(frozen=True)
class SolverResult:
    """
    Outcome of a solver run.

    bound is an upper bound on the optimum (None when infeasible); for an
    optimal result it equals objective.
    """

    status: SolverStatus
    schedule: Optional[Schedule]
    objective: Optional[float]
    bound: Optional[float]
    nodes_explored: int
    elapsed_seconds: float = 0.0
    bound_history: tuple[float, ...] = ()

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready form: status, objective, bound, nodes_explored, assignment."""
        return {
            "status": self.status.value,
            "objective": self.objective,
            "bound": self.bound,
            "nodes_explored": self.nodes_explored,
            "assignment": dict(self.schedule.assignment) if self.schedule is not None else {},
        }

    def __str__(self) -> str:
        objective = f"{self.objective:.6f}" if self.objective is not None else "-"
        bound = f"{self.bound:.6f}" if self.bound is not None else "-"
        return (
            f"Solver Result ({self.status.value}):\n"
            f"  Objective: {objective}\n"
            f"  Bound: {bound}\n"
            f"  Nodes: {self.nodes_explored}\n"
            f"  Duration: {self.elapsed_seconds:.2f}s"
        )
