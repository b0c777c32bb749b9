"""Application DTOs package."""

from src.application.dtos.clustering_dto import ClusteringMethod, TrialResult, TrialSummary
from src.application.dtos.evaluation_dto import OverfullSession, ScorePair, ViolationReport
from src.application.dtos.llm_dto import LLMClusteringOutcome, ZeroShotOutcome
from src.application.dtos.run_config_dto import (
    ClusterRunConfig,
    EvaluateRunConfig,
    IngestCheckConfig,
    LLMScheduleRunConfig,
    RunConfig,
    SolveRunConfig,
)

__all__ = [
    "ClusteringMethod",
    "TrialResult",
    "TrialSummary",
    "OverfullSession",
    "ScorePair",
    "ViolationReport",
    "LLMClusteringOutcome",
    "ZeroShotOutcome",
    "RunConfig",
    "ClusterRunConfig",
    "SolveRunConfig",
    "LLMScheduleRunConfig",
    "EvaluateRunConfig",
    "IngestCheckConfig",
]
