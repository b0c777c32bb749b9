"""Exact solver for assigning papers to sessions."""

from src.application.solver.branch_and_bound import BranchAndBoundSolver, solve
from src.application.solver.brute_force import SolverGuardError, brute_force
from src.application.solver.greedy import greedy_incumbent, random_feasible_schedule
from src.application.solver.models import BoundKind, SolverProblem, SolverResult, SolverStatus

__all__ = [
    "BoundKind",
    "BranchAndBoundSolver",
    "SolverGuardError",
    "SolverProblem",
    "SolverResult",
    "SolverStatus",
    "brute_force",
    "greedy_incumbent",
    "random_feasible_schedule",
    "solve",
]
