"""Use case for validating input files before a run."""

import logging
from pathlib import Path
from typing import Optional

from pydantic import BaseModel

from src.application.dtos.run_config_dto import IngestCheckConfig
from src.application.services.title_resolver import TitleResolver
from src.domain.services import check_feasible
from src.infrastructure.parsers.csv_parser import IngestionError, load_instance
from src.infrastructure.parsers.schedule_wire_format import parse_schedule_block

logger = logging.getLogger(__name__)


class ScheduleCheck(BaseModel):
    """Feasibility of a wire-format schedule against the instance."""

    feasible: bool
    found_block: bool
    violated_sessions: list[str]
    unassigned_papers: list[str]
    unmatched_rows: int
    unknown_session_rows: int
    parse_defects: int


class IngestReport(BaseModel):
    """What ingest-check found."""

    papers: int
    sessions: int
    total_duration: int
    total_capacity: int
    discussion_items: int
    schedule: Optional[ScheduleCheck] = None

    @property
    def capacity_ok(self) -> bool:
        return self.total_duration <= self.total_capacity

    def __str__(self) -> str:
        lines = [
            "Ingest Check:",
            f"  Papers: {self.papers}",
            f"  Sessions: {self.sessions}",
            f"  Total duration: {self.total_duration} / capacity {self.total_capacity}",
            f"  Discussions and Q/A items: {self.discussion_items}",
        ]
        if self.schedule is not None:
            lines.append(f"  Schedule feasible: {self.schedule.feasible}")
        return "\n".join(lines)


class IngestCheckUseCase:
    """Load the instance CSVs and, optionally, check a schedule against them."""

    def __init__(self, title_resolver: Optional[TitleResolver] = None):
        self.title_resolver = title_resolver or TitleResolver()

    def execute(self, config: IngestCheckConfig) -> IngestReport:
        """
        Raises:
            IngestionError: If a file is malformed.
        """
        instance = load_instance(config.papers_path, config.sessions_path)
        if instance.total_duration > instance.total_capacity:
            logger.warning(
                f"Total duration {instance.total_duration} exceeds total capacity "
                f"{instance.total_capacity}; the instance is infeasible"
            )

        schedule_check = None
        if config.schedule_path:
            path = Path(config.schedule_path)
            try:
                text = path.read_text(encoding="utf-8")
            except (OSError, UnicodeDecodeError) as e:
                raise IngestionError(f"Cannot read schedule: {e}", path) from e
            parsed = parse_schedule_block(text)
            resolution = self.title_resolver.resolve_titles(parsed.rows, instance)
            feasibility = check_feasible(instance, resolution.schedule)
            schedule_check = ScheduleCheck(
                feasible=feasibility.ok
                and not resolution.report.unknown_session_rows
                and not resolution.report.unmatched_rows,
                found_block=parsed.found_block,
                violated_sessions=feasibility.violated_sessions,
                unassigned_papers=feasibility.unassigned_papers,
                unmatched_rows=len(resolution.report.unmatched_rows),
                unknown_session_rows=len(resolution.report.unknown_session_rows),
                parse_defects=len(parsed.defects),
            )

        return IngestReport(
            papers=instance.n_papers,
            sessions=instance.n_sessions,
            total_duration=instance.total_duration,
            total_capacity=instance.total_capacity,
            discussion_items=sum(1 for paper in instance.papers if paper.is_discussion),
            schedule=schedule_check,
        )
