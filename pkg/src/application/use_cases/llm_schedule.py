"""Use case for zero-shot scheduling with a chat model."""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Optional

from src.application.dtos.evaluation_dto import ScorePair
from src.application.dtos.llm_dto import ZeroShotOutcome
from src.application.dtos.run_config_dto import LLMScheduleRunConfig
from src.application.services.downsampling import downsample, downsample_sessions
from src.application.services.evaluation_service import schedule_scores
from src.application.services.zero_shot_service import ZeroShotScheduler
from src.domain.entities import Instance, Schedule
from src.infrastructure.ai.base_llm_client import TransportExhaustedError
from src.infrastructure.parsers.csv_parser import load_assignment, load_instance

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LLMScheduleOutcome:
    """Zero-shot outcome with the instance it ran on and reference scores."""

    instance: Instance
    outcome: ZeroShotOutcome
    scores: Optional[ScorePair] = None


class LLMScheduleUseCase:
    """
    Ask a chat model for a program and report its violations.

    Workflow:
    1. Load the instance (and the reference program when given)
    2. Optionally downsample papers per session, then sessions
    3. Prompt, parse, resolve titles and count violations
    4. Score against the reference; write schedule block and transcript
    """

    def __init__(self, scheduler: Callable[[], ZeroShotScheduler]):
        """
        Initialize use case.

        Args:
            scheduler: Factory for the zero-shot scheduler (builds the chat client).
        """
        self.scheduler = scheduler

    def execute(self, config: LLMScheduleRunConfig) -> LLMScheduleOutcome:
        """
        Run one zero-shot scheduling exchange.

        Raises:
            IngestionError: If an input file is malformed.
            TransportExhaustedError: If the chat client fails; the transcript
                is written first when a path is configured.
        """
        instance = load_instance(config.papers_path, config.sessions_path)
        reference: Optional[Schedule] = None
        if config.reference_path:
            reference = load_assignment(config.reference_path)

        if reference is not None and config.papers_per_session is not None:
            shrunk = downsample(instance, reference, config.papers_per_session, config.seed)
            instance, reference = shrunk.instance, shrunk.reference
        if reference is not None and config.session_count is not None:
            shrunk = downsample_sessions(instance, reference, config.session_count, config.seed)
            instance, reference = shrunk.instance, shrunk.reference

        try:
            outcome = self.scheduler().zero_shot_schedule(
                instance,
                config.seed,
                temperature=config.temperature,
                max_retries=config.max_retries,
            )
        except TransportExhaustedError as e:
            if config.transcript_path and e.transcript is not None:
                e.transcript.write(config.transcript_path)
            raise

        if config.schedule_out:
            Path(config.schedule_out).write_text(outcome.raw_block, encoding="utf-8")
            logger.info(f"Wrote schedule block to {config.schedule_out}")
        if config.transcript_path:
            outcome.transcript.write(config.transcript_path)

        scores = None
        if reference is not None and any(p in outcome.schedule for p in reference.assignment):
            scores = schedule_scores(reference, outcome.schedule, instance)

        return LLMScheduleOutcome(instance=instance, outcome=outcome, scores=scores)
