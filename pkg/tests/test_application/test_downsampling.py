"""Tests for instance downsampling."""

import math

import numpy as np
import pytest

from src.application.services.downsampling import downsample, downsample_sessions
from src.domain.entities import Schedule
from src.domain.exceptions import MalformedScheduleError
from tests.conftest import make_instance


@pytest.fixture
def instance():
    # s0 holds p0..p4 (50 min of 60), s1 holds p5..p7 (45 of 50), s2 empty
    return make_instance([10, 10, 10, 10, 10, 15, 15, 15], [60, 50, 30])


@pytest.fixture
def reference():
    return Schedule({f"p{i}": ("s0" if i < 5 else "s1") for i in range(8)})


class TestDownsample:
    """Test suite for downsample."""

    def test_keeps_at_most_n_per_session(self, instance, reference):
        result = downsample(instance, reference, 2, seed=1)

        assert result.instance.n_papers == 4
        assert len(result.reference.papers_in("s0")) == 2
        assert len(result.reference.papers_in("s1")) == 2

    def test_lengths_keep_slack_ratio(self, instance, reference):
        result = downsample(instance, reference, 2, seed=1)
        lengths = {s.id: s.length for s in result.instance.sessions}

        assert lengths["s0"] == math.ceil(20 * 60 / 50)
        assert lengths["s1"] == math.ceil(30 * 50 / 45)
        assert lengths["s2"] == 30

    def test_small_sessions_kept_whole(self, instance, reference):
        result = downsample(instance, reference, 10, seed=0)

        assert result.instance.paper_ids == instance.paper_ids
        assert [s.length for s in result.instance.sessions] == [60, 50, 30]
        assert result.reference == reference

    def test_seeded(self, instance, reference):
        first = downsample(instance, reference, 2, seed=9)
        second = downsample(instance, reference, 2, seed=9)

        assert first.instance.paper_ids == second.instance.paper_ids

    def test_reference_stays_feasible(self, instance, reference):
        rng = np.random.default_rng(0)

        for _ in range(20):
            result = downsample(instance, reference, int(rng.integers(1, 5)), seed=int(rng.integers(1000)))
            for session in result.instance.sessions:
                total = sum(
                    result.instance.paper(p).duration for p in result.reference.papers_in(session.id)
                )
                assert total <= session.length

    def test_paper_order_follows_instance(self, instance, reference):
        result = downsample(instance, reference, 3, seed=4)
        ids = result.instance.paper_ids

        assert ids == sorted(ids, key=instance.paper_index)

    def test_invalid_count(self, instance, reference):
        with pytest.raises(ValueError, match="at least 1"):
            downsample(instance, reference, 0, seed=0)

    def test_unknown_session_in_reference(self, instance):
        with pytest.raises(MalformedScheduleError):
            downsample(instance, Schedule({"p0": "nowhere"}), 2, seed=0)


class TestDownsampleSessions:
    """Test suite for downsample_sessions."""

    def test_keeps_whole_sessions(self, instance, reference):
        result = downsample_sessions(instance, reference, 1, seed=3)

        assert result.instance.n_sessions == 1
        session = result.instance.sessions[0]
        assert session.id in {"s0", "s1"}
        assert sorted(result.reference.papers_in(session.id)) == sorted(result.instance.paper_ids)
        assert session.length == instance.session(session.id).length

    def test_count_capped_at_populated(self, instance, reference):
        result = downsample_sessions(instance, reference, 5, seed=0)

        assert result.instance.session_ids == ["s0", "s1"]
        assert result.instance.n_papers == 8

    def test_empty_reference(self, instance):
        with pytest.raises(ValueError, match="no paper"):
            downsample_sessions(instance, Schedule({}), 1, seed=0)
