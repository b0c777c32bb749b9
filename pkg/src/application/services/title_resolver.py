"""Map titles emitted by a language model back to instance papers."""

import logging
import re
import unicodedata
from dataclasses import dataclass, field
from typing import Optional, Sequence

from src.domain.entities import Instance, Paper, Schedule
from src.infrastructure.parsers.schedule_wire_format import RawScheduleRow

logger = logging.getLogger(__name__)

DEFAULT_MATCH_THRESHOLD = 0.6
MIN_ROW_CHARS = 10

_ELLIPSIS = re.compile(r"(\.\.\.|…)+$")
_WHITESPACE = re.compile(r"\s+")


@dataclass(frozen=True)
class DuplicateMatch:
    """A row that lost its best-scoring paper to another row."""

    row_index: int
    paper_id: str


@dataclass(frozen=True)
class TitleMatching:
    """Row-to-paper matches for a list of titles."""

    matches: list[Optional[str]]
    scores: list[float]
    unmatched_rows: list[int] = field(default_factory=list)
    unmatched_papers: list[str] = field(default_factory=list)
    duplicate_matches: list[DuplicateMatch] = field(default_factory=list)


@dataclass(frozen=True)
class ResolutionReport:
    """What resolve_titles could not place cleanly."""

    unmatched_rows: list[int] = field(default_factory=list)
    unmatched_papers: list[str] = field(default_factory=list)
    duplicate_matches: list[DuplicateMatch] = field(default_factory=list)
    unknown_session_rows: list[int] = field(default_factory=list)
    row_matches: list[Optional[str]] = field(default_factory=list)


@dataclass(frozen=True)
class TitleResolution:
    """Schedule recovered from rows, with its report."""

    schedule: Schedule
    report: ResolutionReport


def normalize_title(title: str) -> str:
    """
    Case-fold, drop a trailing ellipsis and punctuation, collapse whitespace.

    Args:
        title: Raw title.

    Returns:
        Normalized title used for matching.
    """
    text = unicodedata.normalize("NFKC", title).strip()
    text = _ELLIPSIS.sub("", text)
    text = "".join(ch for ch in text.casefold() if ch.isalnum() or ch.isspace())
    return _WHITESPACE.sub(" ", text).strip()


def prefix_score(row_title: str, paper_title: str) -> float:
    """
    Longest common prefix of two normalized titles over the row title length.

    Rows shorter than MIN_ROW_CHARS are scored against MIN_ROW_CHARS (or the
    whole paper title when that is shorter), so a two-letter fragment scores at
    most 0.2 against a longer title.
    """
    if not row_title:
        return 0.0
    common = 0
    for a, b in zip(row_title, paper_title):
        if a != b:
            break
        common += 1
    return common / max(len(row_title), min(len(paper_title), MIN_ROW_CHARS))


def edit_distance(a: str, b: str) -> int:
    """Levenshtein distance."""
    if len(a) < len(b):
        a, b = b, a
    previous = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        current = [i]
        for j, cb in enumerate(b, start=1):
            current.append(min(previous[j] + 1, current[j - 1] + 1, previous[j - 1] + (ca != cb)))
        previous = current
    return previous[-1]


class TitleResolver:
    """
    Greedy one-to-one title matching.

    Every (row, paper) pair scoring at least the threshold is a candidate.
    Candidates are taken by descending score, then smaller edit distance,
    then smaller gap between row and paper duration, then row session id,
    then row order, then paper order; a row or paper is used at most once.
    Papers sharing a title and a duration are interchangeable, so which of
    them a row gets is decided by order alone.
    """

    def __init__(self, threshold: float = DEFAULT_MATCH_THRESHOLD):
        if not 0.0 < threshold <= 1.0:
            raise ValueError("Match threshold must be in (0, 1]")
        self.threshold = threshold

    def match_titles(
        self,
        titles: Sequence[str],
        papers: Sequence[Paper],
        durations: Optional[Sequence[int]] = None,
        sessions: Optional[Sequence[str]] = None,
    ) -> TitleMatching:
        """
        Match each title to at most one paper.

        Args:
            titles: Row titles in row order.
            papers: Candidate papers.
            durations: Row durations aligned with titles, used to separate
                papers with equal titles. Omitted when rows carry none.
            sessions: Row session tokens aligned with titles, deciding which
                of several equal rows takes a paper independently of row order.

        Returns:
            TitleMatching. A row is a duplicate when it ended up unmatched or
            matched below its best score because its best paper went to
            another row.
        """
        for name, values in (("durations", durations), ("sessions", sessions)):
            if values is not None and len(values) != len(titles):
                raise ValueError(f"{name} must align with titles")
        row_norms = [normalize_title(t) for t in titles]
        paper_norms = [normalize_title(p.title) for p in papers]

        candidates: list[tuple[float, int, int, str, int, int]] = []
        best_paper: dict[int, tuple[float, int, int, int]] = {}
        for r, row_norm in enumerate(row_norms):
            for p, paper_norm in enumerate(paper_norms):
                score = prefix_score(row_norm, paper_norm)
                if score < self.threshold:
                    continue
                distance = edit_distance(row_norm, paper_norm)
                gap = abs(durations[r] - papers[p].duration) if durations is not None else 0
                session = sessions[r] if sessions is not None else ""
                candidates.append((score, distance, gap, session, r, p))
                key = (-score, distance, gap, p)
                if r not in best_paper or key < best_paper[r]:
                    best_paper[r] = key

        candidates.sort(key=lambda c: (-c[0], c[1], c[2], c[3], c[4], c[5]))

        matches: list[Optional[str]] = [None] * len(titles)
        scores = [0.0] * len(titles)
        taken: set[int] = set()
        for score, _, _, _, r, p in candidates:
            if matches[r] is not None or p in taken:
                continue
            matches[r] = papers[p].id
            scores[r] = score
            taken.add(p)

        duplicates = [
            DuplicateMatch(row_index=r, paper_id=papers[key[3]].id)
            for r, key in sorted(best_paper.items())
            if matches[r] is None or scores[r] < -key[0]
        ]
        unmatched_rows = [r for r, m in enumerate(matches) if m is None]
        unmatched_papers = [p.id for i, p in enumerate(papers) if i not in taken]

        if unmatched_rows:
            logger.warning(f"{len(unmatched_rows)} titles matched no paper above {self.threshold}")
        if duplicates:
            logger.warning(f"{len(duplicates)} titles competed for an already matched paper")

        return TitleMatching(
            matches=matches,
            scores=scores,
            unmatched_rows=unmatched_rows,
            unmatched_papers=unmatched_papers,
            duplicate_matches=duplicates,
        )

    def resolve_titles(self, rows: Sequence[RawScheduleRow], instance: Instance) -> TitleResolution:
        """
        Turn parsed rows into a Schedule over instance papers.

        Rows whose session token is not an instance session still claim
        their paper, but are left out of the Schedule and listed as
        unknown-session rows (evidence of added sessions).
        """
        matching = self.match_titles(
            [row.talk_title for row in rows],
            instance.papers,
            durations=[row.duration for row in rows],
            sessions=[row.session for row in rows],
        )

        assignment: dict[str, str] = {}
        unknown_session_rows: list[int] = []
        for r, (row, paper_id) in enumerate(zip(rows, matching.matches)):
            if not instance.has_session(row.session):
                unknown_session_rows.append(r)
                continue
            if paper_id is not None:
                assignment[paper_id] = row.session

        if unknown_session_rows:
            tokens = sorted({rows[r].session for r in unknown_session_rows})
            logger.warning(f"Rows reference sessions not in the instance: {tokens}")

        report = ResolutionReport(
            unmatched_rows=matching.unmatched_rows,
            unmatched_papers=matching.unmatched_papers,
            duplicate_matches=matching.duplicate_matches,
            unknown_session_rows=unknown_session_rows,
            row_matches=matching.matches,
        )
        return TitleResolution(schedule=Schedule(assignment), report=report)


def resolve_titles(
    rows: Sequence[RawScheduleRow], instance: Instance, threshold: float = DEFAULT_MATCH_THRESHOLD
) -> TitleResolution:
    """Resolve rows with a default TitleResolver."""
    return TitleResolver(threshold).resolve_titles(rows, instance)
