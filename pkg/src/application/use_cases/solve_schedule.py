"""Use case for solving the session assignment program."""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from src.application.dtos.run_config_dto import SolveRunConfig
from src.application.solver import SolverProblem, SolverResult, brute_force, solve
from src.domain.entities import Instance, SimilarityMatrix
from src.domain.services import labeling_to_similarity
from src.infrastructure.parsers.csv_parser import load_instance, load_labeling, load_similarity_matrix
from src.infrastructure.parsers.schedule_wire_format import emit_schedule

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SolveOutcome:
    """Solver result with the instance and the emitted schedule text."""

    instance: Instance
    result: SolverResult
    schedule_text: Optional[str] = None


class SolveScheduleUseCase:
    """
    Solve an instance exactly.

    Workflow:
    1. Load papers and sessions
    2. Build similarities from a labeling, or read a similarity matrix
    3. Branch-and-bound (or brute force in oracle mode)
    4. Emit the schedule in the @-delimited format
    """

    def execute(self, config: SolveRunConfig) -> SolveOutcome:
        """
        Solve the configured instance.

        Raises:
            IngestionError: If an input file is malformed.
            MalformedLabelingError: If the labeling misses instance papers.
            SolverGuardError: If oracle mode is asked for a too-large instance.
        """
        instance = load_instance(config.papers_path, config.sessions_path)
        sim = self._similarity(config, instance)
        problem = SolverProblem(
            instance=instance,
            sim=sim,
            time_budget=config.time_budget,
            node_limit=config.node_limit,
        )

        if config.oracle:
            logger.info("Oracle mode: enumerating every assignment")
            result = brute_force(problem)
        else:
            result = solve(problem, bound=config.bound)

        schedule_text = None
        if result.schedule is not None:
            schedule_text = emit_schedule(instance, result.schedule).text
            if config.schedule_out:
                Path(config.schedule_out).write_text(schedule_text, encoding="utf-8")
                logger.info(f"Wrote schedule to {config.schedule_out}")

        return SolveOutcome(instance=instance, result=result, schedule_text=schedule_text)

    def _similarity(self, config: SolveRunConfig, instance: Instance) -> SimilarityMatrix:
        if config.labeling_path:
            return labeling_to_similarity(load_labeling(config.labeling_path), instance)
        return load_similarity_matrix(config.similarity_path, instance)
