"""Unit tests for scheduling domain entities."""

import numpy as np
import pytest

from src.domain.entities import Instance, Labeling, Paper, Schedule, Session, SimilarityMatrix
from src.domain.exceptions import (
    DimensionMismatchError,
    InstanceError,
    MalformedLabelingError,
)


class TestPaper:
    """Test suite for Paper."""

    def test_create_valid_paper(self):
        paper = Paper(id="p1", title="A study, part 2", duration=7)

        assert paper.id == "p1"
        assert paper.abstract is None
        assert paper.text == "A study, part 2"

    def test_text_joins_abstract(self):
        paper = Paper(id="p1", title="Title", duration=7, abstract="Body")
        assert paper.text == "Title Body"

    @pytest.mark.parametrize("duration", [0, -5])
    def test_non_positive_duration_rejected(self, duration):
        with pytest.raises(InstanceError, match="duration must be positive"):
            Paper(id="p1", title="T", duration=duration)

    def test_non_integer_duration_rejected(self):
        with pytest.raises(InstanceError, match="integer"):
            Paper(id="p1", title="T", duration=7.5)

    def test_empty_title_rejected(self):
        with pytest.raises(InstanceError, match="title cannot be empty"):
            Paper(id="p1", title="   ", duration=7)

    def test_discussion_item_detected(self):
        assert Paper(id="q", title="Discussions and Q/A", duration=10).is_discussion
        assert Paper(id="q", title="discussions and q/a ", duration=10).is_discussion
        assert not Paper(id="p", title="Discussions of testing", duration=10).is_discussion


class TestSession:
    """Test suite for Session."""

    def test_non_positive_length_rejected(self):
        with pytest.raises(InstanceError, match="length must be positive"):
            Session(id="s1", title="Testing", length=0)

    def test_empty_id_rejected(self):
        with pytest.raises(InstanceError):
            Session(id=" ", title="Testing", length=45)


class TestInstance:
    """Test suite for Instance."""

    @pytest.fixture
    def papers(self):
        return [Paper(id=f"p{i}", title=f"T{i}", duration=5 + i) for i in range(3)]

    @pytest.fixture
    def sessions(self):
        return [Session(id="s1", title="A", length=10), Session(id="s2", title="B", length=20)]

    def test_totals_and_lookups(self, papers, sessions):
        instance = Instance.build(papers, sessions)

        assert instance.n_papers == 3
        assert instance.n_sessions == 2
        assert instance.total_duration == 18
        assert instance.total_capacity == 30
        assert instance.paper_index("p2") == 2
        assert instance.session("s2").length == 20

    def test_infeasible_totals_allowed(self, papers):
        instance = Instance.build(papers, [Session(id="s", title="Tiny", length=1)])
        assert instance.total_duration > instance.total_capacity

    def test_duplicate_paper_id_rejected(self, papers, sessions):
        with pytest.raises(InstanceError, match="Duplicate paper id 'p0'"):
            Instance.build(papers + [Paper(id="p0", title="X", duration=3)], sessions)

    def test_duplicate_session_id_rejected(self, papers, sessions):
        with pytest.raises(InstanceError, match="Duplicate session id"):
            Instance.build(papers, sessions + [Session(id="s1", title="C", length=5)])

    def test_empty_instance_rejected(self, sessions):
        with pytest.raises(InstanceError):
            Instance.build([], sessions)


class TestSimilarityMatrix:
    """Test suite for SimilarityMatrix."""

    def test_rejects_non_square(self):
        with pytest.raises(DimensionMismatchError):
            SimilarityMatrix(np.zeros((2, 3)))

    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError, match="symmetric"):
            SimilarityMatrix(np.array([[0.0, 1.0], [0.5, 0.0]]))

    def test_rejects_negative(self):
        with pytest.raises(ValueError, match="non-negative"):
            SimilarityMatrix(np.array([[0.0, -1.0], [-1.0, 0.0]]))

    def test_rejects_nonzero_diagonal(self):
        with pytest.raises(ValueError, match="diagonal"):
            SimilarityMatrix(np.eye(2))

    def test_from_array_symmetrizes_and_clears_diagonal(self):
        sim = SimilarityMatrix.from_array(np.array([[5.0, 1.0], [3.0, 5.0]]))

        assert sim[0, 1] == sim[1, 0] == 2.0
        assert sim[0, 0] == 0.0

    def test_values_are_read_only(self):
        sim = SimilarityMatrix.zeros(2)
        with pytest.raises(ValueError):
            sim.values[0, 1] = 1.0

    def test_require_size(self):
        with pytest.raises(DimensionMismatchError, match="expected 3x3"):
            SimilarityMatrix.zeros(2).require_size(3)


class TestScheduleAndLabeling:
    """Test suite for Schedule and Labeling."""

    def test_to_labeling_uses_session_order(self):
        schedule = Schedule({"a": "s2", "b": "s1", "c": "s9"})
        labeling = schedule.to_labeling(["s1", "s2"])

        assert dict(labeling.labels) == {"a": 1, "b": 0, "c": 2}

    def test_restricted_to(self):
        schedule = Schedule({"a": "s1", "b": "s2"})
        assert schedule.restricted_to({"a"}) == Schedule({"a": "s1"})

    def test_schedule_is_immutable(self):
        schedule = Schedule({"a": "s1"})
        with pytest.raises(TypeError):
            schedule.assignment["a"] = "s2"

    def test_canonical_relabels_by_first_appearance(self):
        labeling = Labeling({"a": 7, "b": 3, "c": 7})
        assert dict(labeling.canonical().labels) == {"a": 0, "b": 1, "c": 0}

    def test_negative_label_rejected(self):
        with pytest.raises(MalformedLabelingError):
            Labeling({"a": -1})

    def test_missing_label_raises(self):
        with pytest.raises(MalformedLabelingError, match="No label for paper 'z'"):
            Labeling({"a": 0}).values_for(["a", "z"])
