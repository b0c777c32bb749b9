"""Use case for evaluating a candidate schedule against a reference."""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional

from src.application.dtos.evaluation_dto import ScorePair, ViolationReport
from src.application.dtos.run_config_dto import EvaluateRunConfig
from src.application.services.evaluation_service import schedule_scores, violation_report
from src.application.services.title_resolver import TitleResolver
from src.infrastructure.parsers.csv_parser import IngestionError, load_assignment, load_instance
from src.infrastructure.parsers.schedule_wire_format import parse_schedule_block

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EvaluationOutcome:
    """Scores (None when nothing was matched) and the violation report."""

    report: ViolationReport
    scores: Optional[ScorePair] = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "scores": self.scores.model_dump() if self.scores else None,
            "violations": self.report.model_dump(),
        }


class EvaluateScheduleUseCase:
    """
    Score a wire-format candidate against a reference program.

    An unparseable candidate is a valid input: the report flags it and no
    scores are produced.
    """

    def __init__(self, title_resolver: Optional[TitleResolver] = None):
        self.title_resolver = title_resolver or TitleResolver()

    def execute(self, config: EvaluateRunConfig) -> EvaluationOutcome:
        """
        Evaluate the candidate.

        Raises:
            IngestionError: If an input file is malformed.
        """
        instance = load_instance(config.papers_path, config.sessions_path)
        reference = load_assignment(config.reference_path)

        candidate_path = Path(config.candidate_path)
        try:
            text = candidate_path.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as e:
            raise IngestionError(f"Cannot read candidate schedule: {e}", candidate_path) from e

        parsed = parse_schedule_block(text)
        resolution = self.title_resolver.resolve_titles(parsed.rows, instance)
        report = violation_report(instance, parsed.rows, resolution, parsed)

        scores = None
        if any(paper_id in resolution.schedule for paper_id in reference.assignment):
            scores = schedule_scores(reference, resolution.schedule, instance)
        else:
            logger.warning("Candidate shares no paper with the reference; scores skipped")

        return EvaluationOutcome(report=report, scores=scores)
