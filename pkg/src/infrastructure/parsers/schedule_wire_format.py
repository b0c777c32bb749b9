"""The @-delimited schedule format exchanged with language models.

A schedule travels as a block fenced by triple backquotes:

    ```
    session@talk_title@duration
    231@An Empirical Study on Maintainable Method ...@7
    ```

Titles may contain commas but never `@`.
"""

import logging
import re
from dataclasses import dataclass, field

from src.domain.entities import Instance, Schedule
from src.domain.exceptions import MalformedScheduleError
from src.domain.services import validate_schedule

logger = logging.getLogger(__name__)

FENCE = "```"
DELIMITER = "@"
SCHEDULE_HEADER = "session@talk_title@duration"
AT_REPLACEMENT = "(at)"

_FENCED_BLOCK = re.compile(r"^[ \t]*```[^\n`]*\n(.*?)^[ \t]*```", re.DOTALL | re.MULTILINE)


class ScheduleParseError(ValueError):
    """Raised when a response holds no fenced block."""

    pass


@dataclass(frozen=True)
class RawScheduleRow:
    """One `session@talk_title@duration` line as emitted by the model."""

    session: str
    talk_title: str
    duration: int


@dataclass(frozen=True)
class RowDefect:
    """A line that could not be parsed."""

    line_number: int
    line: str
    reason: str


@dataclass(frozen=True)
class ParsedScheduleBlock:
    """Rows recovered from a response plus everything that was skipped."""

    rows: list[RawScheduleRow] = field(default_factory=list)
    defects: list[RowDefect] = field(default_factory=list)
    found_block: bool = True
    block: str = ""

    @property
    def is_parseable(self) -> bool:
        return self.found_block


@dataclass(frozen=True)
class WireSchedule:
    """Emitted schedule text and the papers whose titles were sanitized."""

    text: str
    sanitized_paper_ids: list[str] = field(default_factory=list)


def extract_fenced_block(text: str) -> str | None:
    """
    Content of the first triple-backquote block, or None.

    Fences must open a line; backquotes inside prose do not count.
    """
    match = _FENCED_BLOCK.search(text or "")
    if not match:
        return None
    return match.group(1)


def require_fenced_block(text: str) -> str:
    """
    Content of the first fenced block.

    Raises:
        ScheduleParseError: If the text holds no fenced block.
    """
    block = extract_fenced_block(text)
    if block is None:
        raise ScheduleParseError("No ``` fenced block found in response")
    return block


def split_delimited_lines(
    block: str, header: str, field_count: int
) -> tuple[list[tuple[int, list[str]]], list[RowDefect]]:
    """
    Split block lines on '@', skipping blank lines and the header.

    Returns:
        (line_number, fields) pairs with exactly field_count fields, and the
        defects for lines with any other field count.
    """
    rows: list[tuple[int, list[str]]] = []
    defects: list[RowDefect] = []
    normalized_header = header.replace(" ", "").casefold()

    for line_number, raw_line in enumerate(block.splitlines(), start=1):
        line = raw_line.strip()
        if not line:
            continue
        if line.replace(" ", "").casefold() == normalized_header:
            continue

        fields = [part.strip() for part in line.split(DELIMITER)]
        if len(fields) != field_count:
            defects.append(
                RowDefect(line_number, line, f"expected {field_count} fields, found {len(fields)}")
            )
            continue
        rows.append((line_number, fields))

    return rows, defects


def parse_schedule_block(text: str) -> ParsedScheduleBlock:
    """
    Extract schedule rows from a model response.

    Never raises: a missing fence yields found_block=False, and malformed
    lines are collected as defects while the rest are kept.
    """
    block = extract_fenced_block(text)
    if block is None:
        logger.warning("Response contains no fenced schedule block")
        return ParsedScheduleBlock(
            rows=[],
            defects=[RowDefect(0, "", "no ``` fenced block found")],
            found_block=False,
        )

    split_rows, defects = split_delimited_lines(block, SCHEDULE_HEADER, 3)
    rows: list[RawScheduleRow] = []
    for line_number, (session, title, duration_text) in split_rows:
        try:
            duration = int(duration_text)
            if duration < 0:
                raise ValueError(duration_text)
        except ValueError:
            defects.append(
                RowDefect(
                    line_number,
                    DELIMITER.join([session, title, duration_text]),
                    f"duration is not a non-negative integer: '{duration_text}'",
                )
            )
            continue
        rows.append(RawScheduleRow(session=session, talk_title=title, duration=duration))

    if defects:
        logger.warning(f"Skipped {len(defects)} malformed schedule lines")
    logger.debug(f"Parsed {len(rows)} schedule rows")
    return ParsedScheduleBlock(rows=rows, defects=defects, found_block=True, block=block)


def sanitize_title(title: str) -> str:
    """Replace the delimiter so a title fits in one field."""
    return title.replace(DELIMITER, AT_REPLACEMENT)


def emit_schedule(instance: Instance, schedule: Schedule) -> WireSchedule:
    """
    Render a total schedule in the fenced @-delimited format.

    Rows follow session order, then instance paper order within a session.

    Raises:
        MalformedScheduleError: If the schedule is not total or names unknown ids.
    """
    validate_schedule(instance, schedule)
    unassigned = [paper.id for paper in instance.papers if paper.id not in schedule]
    if unassigned:
        raise MalformedScheduleError(f"Cannot emit a partial schedule; unassigned: {unassigned}")

    lines = [FENCE, SCHEDULE_HEADER]
    sanitized: list[str] = []
    for session in instance.sessions:
        for paper in instance.papers:
            if schedule.session_of(paper.id) != session.id:
                continue
            title = paper.title
            if DELIMITER in title:
                title = sanitize_title(title)
                sanitized.append(paper.id)
            lines.append(DELIMITER.join([session.id, title, str(paper.duration)]))
    lines.append(FENCE)

    if sanitized:
        logger.warning(f"Sanitized '@' in titles of papers: {sanitized}")
    return WireSchedule(text="\n".join(lines) + "\n", sanitized_paper_ids=sanitized)
