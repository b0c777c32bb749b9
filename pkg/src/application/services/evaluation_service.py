"""Clustering scores and schedule violation counting."""

import logging
from collections import defaultdict
from typing import Sequence

from sklearn.metrics import homogeneity_completeness_v_measure

from src.application.dtos.evaluation_dto import OverfullSession, ScorePair, ViolationReport
from src.application.services.title_resolver import TitleResolution
from src.domain.entities import Instance, Labeling, Schedule
from src.domain.exceptions import MalformedLabelingError, MalformedScheduleError
from src.infrastructure.parsers.schedule_wire_format import ParsedScheduleBlock, RawScheduleRow

logger = logging.getLogger(__name__)


def homogeneity_completeness(reference: Labeling, predicted: Labeling) -> ScorePair:
    """
    Entropy-based homogeneity and completeness (natural logs).

    h = 1 - H(C|K)/H(C), or 1 when H(C) = 0; c = 1 - H(K|C)/H(K), or 1
    when H(K) = 0. C is the reference, K the prediction.

    Raises:
        MalformedLabelingError: If the two labelings cover different papers
            or are empty.
    """
    if set(reference.paper_ids) != set(predicted.paper_ids):
        only_ref = sorted(set(reference.paper_ids) - set(predicted.paper_ids))
        only_pred = sorted(set(predicted.paper_ids) - set(reference.paper_ids))
        raise MalformedLabelingError(
            f"Labelings cover different papers (reference only: {only_ref}, "
            f"predicted only: {only_pred})"
        )
    if not len(reference):
        raise MalformedLabelingError("Cannot score empty labelings")

    order = reference.paper_ids
    h, c, _ = homogeneity_completeness_v_measure(
        reference.values_for(order), predicted.values_for(order)
    )
    return ScorePair(homogeneity=_unit(h), completeness=_unit(c))


def schedule_scores(reference: Schedule, predicted: Schedule, instance: Instance) -> ScorePair:
    """
    Score a schedule against a reference schedule.

    Only papers present in both schedules enter the contingency table;
    papers the prediction dropped show up in the violation report instead.

    Raises:
        MalformedScheduleError: If the schedules share no paper.
    """
    common = [p for p in instance.paper_ids if p in reference and p in predicted]
    if not common:
        raise MalformedScheduleError("Reference and predicted schedules share no paper")

    kept = set(common)
    session_order = instance.session_ids
    return homogeneity_completeness(
        reference.restricted_to(kept).to_labeling(session_order),
        predicted.restricted_to(kept).to_labeling(session_order),
    )


def violation_report(
    instance: Instance,
    rows: Sequence[RawScheduleRow],
    resolved: TitleResolution,
    parsed: ParsedScheduleBlock | None = None,
) -> ViolationReport:
    """
    Count constraint violations of a model-proposed schedule.

    Overage uses instance durations, not the durations the model claimed.
    Within a session, talk order is the row order of the response.

    Args:
        instance: Ground-truth papers and sessions.
        rows: Parsed rows in response order.
        resolved: Title resolution of those rows.
        parsed: Optional parse result, for the defect list and the
            unparseable flag.
    """
    report = resolved.report
    matches = list(report.row_matches) + [None] * (len(rows) - len(report.row_matches))

    matched_papers = {paper_id for paper_id in matches if paper_id is not None}
    missing = [paper.id for paper in instance.papers if paper.id not in matched_papers]

    added: list[str] = []
    for row in rows:
        if not instance.has_session(row.session) and row.session not in added:
            added.append(row.session)
    added.sort()

    per_session: dict[str, list[str]] = defaultdict(list)
    for row, paper_id in zip(rows, matches):
        if paper_id is not None and instance.has_session(row.session):
            per_session[row.session].append(paper_id)

    overfull: list[OverfullSession] = []
    qa_misplaced: list[str] = []
    for session in instance.sessions:
        talks = per_session.get(session.id, [])
        total = sum(instance.paper(paper_id).duration for paper_id in talks)
        if total > session.length:
            overfull.append(
                OverfullSession(
                    session_id=session.id,
                    length=session.length,
                    total=total,
                    overage_fraction=(total - session.length) / session.length,
                )
            )
        discussion_positions = [
            i for i, paper_id in enumerate(talks) if instance.paper(paper_id).is_discussion
        ]
        if any(i != len(talks) - 1 for i in discussion_positions):
            qa_misplaced.append(session.id)

    duplicates = sorted({d.paper_id for d in report.duplicate_matches})

    defects: list[str] = []
    unparseable = False
    if parsed is not None:
        unparseable = not parsed.found_block
        defects = [f"line {d.line_number}: {d.reason}" for d in parsed.defects]

    result = ViolationReport(
        missing_papers=missing,
        added_sessions=added,
        overfull_sessions=overfull,
        qa_misplaced=qa_misplaced,
        duplicate_assignments=duplicates,
        unmatched_rows=len(report.unmatched_rows),
        parse_defects=defects,
        unparseable=unparseable,
        session_count=instance.n_sessions,
    )
    logger.info(
        f"Violations: {result.missing_paper_count} missing, {result.added_session_count} added sessions, "
        f"{len(overfull)} overfull, {len(qa_misplaced)} Q/A misplaced"
    )
    return result


def _unit(value: float) -> float:
    return float(min(1.0, max(0.0, value)))
