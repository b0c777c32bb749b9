"""DTOs for language-model scheduling and clustering runs."""

from dataclasses import dataclass, field
from typing import Any

from src.application.dtos.evaluation_dto import ViolationReport
from src.application.services.title_resolver import TitleResolution
from src.domain.entities import Labeling, Schedule
from src.infrastructure.ai.response_parser import ClusterRow
from src.infrastructure.ai.transcript import Transcript
from src.infrastructure.parsers.schedule_wire_format import ParsedScheduleBlock


@dataclass(frozen=True)
class ZeroShotOutcome:
    """Everything one zero-shot scheduling run produced."""

    schedule: Schedule
    report: ViolationReport
    transcript: Transcript
    parsed: ParsedScheduleBlock
    resolution: TitleResolution
    attempts: int

    @property
    def unparseable(self) -> bool:
        return self.report.unparseable

    @property
    def raw_block(self) -> str:
        """Fenced schedule block of the last response, empty when none."""
        if not self.parsed.found_block:
            return ""
        return f"```\n{self.parsed.block}```\n"


@dataclass(frozen=True)
class LLMClusteringOutcome:
    """Labeling recovered from a clustering response, with its repairs."""

    labeling: Labeling
    transcript: Transcript
    attempts: int
    repaired_papers: list[str] = field(default_factory=list)
    rejected_rows: list[ClusterRow] = field(default_factory=list)

    @property
    def was_repaired(self) -> bool:
        return bool(self.repaired_papers)

    def repair_report(self) -> dict[str, Any]:
        return {
            "repaired_papers": self.repaired_papers,
            "rejected_rows": [
                {"talk_title": row.talk_title, "cluster": row.cluster} for row in self.rejected_rows
            ],
        }
