"""Tests for matching model-emitted titles back to instance papers."""

import pytest

from src.application.services.evaluation_service import violation_report
from src.application.services.title_resolver import (
    TitleResolver,
    normalize_title,
    prefix_score,
    resolve_titles,
)
from src.domain.entities import DISCUSSION_TITLE, Instance, Paper, Schedule, Session
from src.infrastructure.parsers.schedule_wire_format import (
    RawScheduleRow,
    emit_schedule,
    parse_schedule_block,
)

LONG_TITLE = "An Empirical Study on Maintainable Method Size in Java"


@pytest.fixture
def papers():
    return [
        Paper(id="p0", title=LONG_TITLE, duration=10),
        Paper(id="p1", title="An Empirical Study of Flaky Tests in Python Projects", duration=10),
        Paper(id="p2", title="Mining commit histories at scale", duration=15),
        Paper(id="p3", title="Fuzzing compilers with grammars", duration=15),
    ]


@pytest.fixture
def qa_instance():
    """Two Q/A items of different lengths in sessions that only fit them one way."""
    papers = [
        Paper(id="p0", title="Mining commit histories at scale", duration=10),
        Paper(id="p1", title="Fuzzing compilers with grammars", duration=10),
        Paper(id="qa1", title=DISCUSSION_TITLE, duration=5),
        Paper(id="qa2", title=DISCUSSION_TITLE, duration=10),
    ]
    sessions = [
        Session(id="A", title="Morning", length=20),
        Session(id="B", title="Afternoon", length=15),
    ]
    return Instance.build(papers, sessions)


class TestScoring:
    """Test suite for title normalization and the prefix score."""

    def test_normalize(self):
        assert normalize_title("  Fuzzing   Compilers: with Grammars...") == "fuzzing compilers with grammars"
        assert normalize_title("Deep Learning…") == "deep learning"

    def test_exact_title_scores_one(self):
        assert prefix_score("mining commit histories at scale", "mining commit histories at scale") == 1.0

    def test_short_exact_title_scores_one(self):
        assert prefix_score("go", "go") == 1.0

    def test_short_row_against_long_title(self):
        assert prefix_score("an", normalize_title(LONG_TITLE)) == pytest.approx(0.2)

    def test_empty_row(self):
        assert prefix_score("", "anything") == 0.0


class TestMatchTitles:
    """Test suite for TitleResolver.match_titles."""

    def test_exact_title(self, papers):
        matching = TitleResolver().match_titles(["Mining commit histories at scale"], papers)

        assert matching.matches == ["p2"]
        assert matching.scores == [1.0]

    def test_truncated_title(self, papers):
        matching = TitleResolver().match_titles([LONG_TITLE[:40] + "..."], papers)

        assert matching.matches == ["p0"]
        assert matching.scores == [1.0]

    def test_garbage_unmatched(self, papers):
        matching = TitleResolver().match_titles(["zzzz"], papers)

        assert matching.matches == [None]
        assert matching.unmatched_rows == [0]
        assert matching.unmatched_papers == ["p0", "p1", "p2", "p3"]

    def test_short_fragment_unmatched(self, papers):
        assert TitleResolver().match_titles(["An"], papers).matches == [None]

    def test_short_title_matched(self):
        matching = TitleResolver().match_titles(["Go"], [Paper(id="go", title="Go", duration=5)])
        assert matching.matches == ["go"]

    @pytest.mark.parametrize("threshold, expected", [(0.6, "p3"), (0.8, None)])
    def test_threshold(self, papers, threshold, expected):
        # 23 of 29 normalized characters agree
        matching = TitleResolver(threshold).match_titles(["Fuzzing compilers with lasers"], papers)

        assert matching.matches == [expected]

    def test_edit_distance_breaks_score_ties(self):
        papers = [
            Paper(id="long", title="Fuzzing compilers with grammars", duration=10),
            Paper(id="short", title="Fuzzing compilers", duration=10),
        ]

        matching = TitleResolver().match_titles(["Fuzzing compilers"], papers)

        assert matching.matches == ["short"]

    def test_duration_separates_equal_titles(self, qa_instance):
        titles = [DISCUSSION_TITLE, DISCUSSION_TITLE]

        matching = TitleResolver().match_titles(titles, qa_instance.papers, durations=[10, 5])

        assert matching.matches == ["qa2", "qa1"]
        assert matching.duplicate_matches == []

    def test_equal_titles_without_durations_follow_order(self, qa_instance):
        titles = [DISCUSSION_TITLE, DISCUSSION_TITLE]

        matching = TitleResolver().match_titles(titles, qa_instance.papers)

        assert matching.matches == ["qa1", "qa2"]
        assert matching.duplicate_matches == []

    def test_losing_row_is_duplicate(self, papers):
        titles = ["Mining commit histories at scale", "Mining commit histories at scale"]

        matching = TitleResolver().match_titles(titles, papers)

        assert matching.matches == ["p2", None]
        assert [(d.row_index, d.paper_id) for d in matching.duplicate_matches] == [(1, "p2")]

    def test_session_decides_between_competing_rows(self, papers):
        titles = ["Mining commit histories at scale", "Mining commit histories at scale"]

        matching = TitleResolver().match_titles(titles, papers, sessions=["s2", "s1"])

        assert matching.matches == [None, "p2"]

    def test_deterministic(self, papers):
        titles = ["Fuzzing compilers", LONG_TITLE[:30], "zzzz", "Mining commit"]
        resolver = TitleResolver()

        assert resolver.match_titles(titles, papers) == resolver.match_titles(titles, papers)

    def test_misaligned_durations(self, papers):
        with pytest.raises(ValueError, match="durations"):
            TitleResolver().match_titles(["a", "b"], papers, durations=[1])

    @pytest.mark.parametrize("threshold", [0.0, 1.5])
    def test_threshold_range(self, threshold):
        with pytest.raises(ValueError):
            TitleResolver(threshold)


class TestResolveTitles:
    """Test suite for resolve_titles over schedule rows."""

    def test_round_trip_with_two_discussions(self, qa_instance):
        schedule = Schedule({"p0": "A", "qa2": "A", "p1": "B", "qa1": "B"})
        parsed = parse_schedule_block(emit_schedule(qa_instance, schedule).text)

        resolution = resolve_titles(parsed.rows, qa_instance)

        assert resolution.schedule == schedule
        assert resolution.report.duplicate_matches == []

    def test_perfect_response_with_two_discussions_is_clean(self, qa_instance):
        text = (
            "```\nsession@talk_title@duration\n"
            "A@Mining commit histories at scale@10\n"
            f"A@{DISCUSSION_TITLE}@10\n"
            "B@Fuzzing compilers with grammars@10\n"
            f"B@{DISCUSSION_TITLE}@5\n"
            "```"
        )
        parsed = parse_schedule_block(text)

        report = violation_report(qa_instance, parsed.rows, resolve_titles(parsed.rows, qa_instance), parsed)

        assert report.overfull_sessions == []
        assert report.duplicate_assignments == []
        assert report.sessions_over_10pct == 0
        assert report.is_clean

    def test_unknown_session_rows_still_claim_papers(self, qa_instance):
        rows = [
            RawScheduleRow("Z", "Mining commit histories at scale", 10),
            RawScheduleRow("A", "Fuzzing compilers with grammars", 10),
        ]

        resolution = resolve_titles(rows, qa_instance)

        assert dict(resolution.schedule.assignment) == {"p1": "A"}
        assert resolution.report.unknown_session_rows == [0]
        assert resolution.report.row_matches == ["p0", "p1"]
        assert resolution.report.unmatched_papers == ["qa1", "qa2"]
