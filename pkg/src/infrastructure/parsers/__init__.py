"""Infrastructure parsers package."""

from src.infrastructure.parsers.csv_parser import (
    IngestionError,
    InstanceCSVParser,
    labeling_to_csv,
    load_assignment,
    load_instance,
    load_labeling,
    load_papers,
    load_sessions,
    load_similarity_matrix,
    write_assignment,
    write_labeling,
    write_similarity_matrix,
)
from src.infrastructure.parsers.schedule_wire_format import (
    SCHEDULE_HEADER,
    ParsedScheduleBlock,
    RawScheduleRow,
    ScheduleParseError,
    emit_schedule,
    parse_schedule_block,
    require_fenced_block,
)

__all__ = [
    "IngestionError",
    "InstanceCSVParser",
    "labeling_to_csv",
    "load_assignment",
    "load_instance",
    "load_labeling",
    "load_papers",
    "load_sessions",
    "load_similarity_matrix",
    "write_assignment",
    "write_labeling",
    "write_similarity_matrix",
    "SCHEDULE_HEADER",
    "ParsedScheduleBlock",
    "RawScheduleRow",
    "ScheduleParseError",
    "emit_schedule",
    "parse_schedule_block",
    "require_fenced_block",
]
