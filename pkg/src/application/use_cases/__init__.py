"""Application use cases package."""

from src.application.use_cases.cluster_papers import ClusterPapersUseCase
from src.application.use_cases.evaluate_schedule import EvaluateScheduleUseCase, EvaluationOutcome
from src.application.use_cases.ingest_check import IngestCheckUseCase, IngestReport
from src.application.use_cases.llm_schedule import LLMScheduleOutcome, LLMScheduleUseCase
from src.application.use_cases.solve_schedule import SolveOutcome, SolveScheduleUseCase

__all__ = [
    "ClusterPapersUseCase",
    "EvaluateScheduleUseCase",
    "EvaluationOutcome",
    "IngestCheckUseCase",
    "IngestReport",
    "LLMScheduleOutcome",
    "LLMScheduleUseCase",
    "SolveOutcome",
    "SolveScheduleUseCase",
]
