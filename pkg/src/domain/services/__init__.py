"""Pure domain services."""

from src.domain.services.scheduling_rules import (
    FeasibilityReport,
    assignment_matrix,
    assignment_vector,
    check_feasible,
    colocated,
    objective_value,
    partition_objective,
    session_loads,
    validate_schedule,
)
from src.domain.services.similarity import labeling_to_similarity

__all__ = [
    "FeasibilityReport",
    "assignment_matrix",
    "assignment_vector",
    "check_feasible",
    "colocated",
    "objective_value",
    "partition_objective",
    "session_loads",
    "validate_schedule",
    "labeling_to_similarity",
]
