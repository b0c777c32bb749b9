"""Tests for title clustering by a chat model."""

from unittest.mock import Mock

import pytest

from src.application.services.llm_clustering_service import LLMClusteringService, llm_cluster
from src.domain.entities import Paper
from src.infrastructure.ai.base_llm_client import (
    BaseChatClient,
    TransportExhaustedError,
    UnparseableResponseError,
)
from src.infrastructure.ai.prompt_builder import SchedulePromptBuilder
from src.infrastructure.ai.replay_client import ReplayChatClient, record_response


@pytest.fixture
def papers():
    titles = [
        "Mining commit histories at scale",
        "Mining issue trackers for bugs",
        "Fuzzing compilers with grammars",
        "Fuzzing network protocols",
    ]
    return [Paper(id=f"p{i}", title=t, duration=10) for i, t in enumerate(titles)]


def block(*rows):
    return "```\ntalk_title@cluster\n" + "".join(f"{title}@{cluster}\n" for title, cluster in rows) + "```"


class TestLLMClusteringService:
    """Test suite for LLMClusteringService."""

    @pytest.fixture
    def client(self):
        return Mock(spec=BaseChatClient)

    @pytest.fixture
    def service(self, client):
        return LLMClusteringService(client, "test-model")

    def test_full_response(self, service, client, papers):
        client.send.return_value = block(
            ("Fuzzing network protocols", 1),
            ("Mining commit histories at scale", 0),
            ("Fuzzing compilers with grammars", 1),
            ("Mining issue trackers for bugs", 0),
        )

        outcome = service.llm_cluster(papers, k=2, seed=0)

        assert dict(outcome.labeling.labels) == {"p0": 0, "p1": 0, "p2": 1, "p3": 1}
        assert not outcome.was_repaired
        assert outcome.attempts == 1

    def test_omitted_paper_repaired_into_largest_cluster(self, service, client, papers):
        client.send.return_value = block(
            ("Mining commit histories at scale", 0),
            ("Fuzzing compilers with grammars", 1),
            ("Fuzzing network protocols", 1),
        )

        outcome = service.llm_cluster(papers, k=2, seed=0)

        assert outcome.repaired_papers == ["p1"]
        assert outcome.labeling.label_of("p1") == 1
        assert outcome.repair_report()["repaired_papers"] == ["p1"]

    def test_out_of_range_cluster_rejected(self, service, client, papers):
        client.send.return_value = block(
            ("Mining commit histories at scale", 0),
            ("Mining issue trackers for bugs", 0),
            ("Fuzzing compilers with grammars", 5),
            ("Fuzzing network protocols", 1),
        )

        outcome = service.llm_cluster(papers, k=2, seed=0)

        assert [row.cluster for row in outcome.rejected_rows] == [5]
        assert outcome.repaired_papers == ["p2"]
        # cluster 0 keeps two papers, cluster 1 one
        assert outcome.labeling.label_of("p2") == 0
        assert set(outcome.labeling.labels.values()) <= {0, 1}

    def test_no_block_after_retries(self, client, papers):
        client.send.return_value = "Sure! Topic A: mining. Topic B: fuzzing."
        service = LLMClusteringService(client, "test-model", max_retries=3)

        with pytest.raises(UnparseableResponseError) as exc_info:
            service.llm_cluster(papers, k=2, seed=0)

        assert exc_info.value.attempts == 3
        assert len(exc_info.value.transcript) == 3

    def test_invalid_arguments(self, service, papers):
        with pytest.raises(ValueError):
            service.llm_cluster(papers, k=0, seed=0)
        with pytest.raises(ValueError):
            service.llm_cluster([], k=2, seed=0)

    def test_prompt_is_seeded(self, service, client, papers):
        client.send.return_value = block(("Mining commit histories at scale", 0))

        service.llm_cluster(papers, k=2, seed=3)

        expected = SchedulePromptBuilder().build_cluster_prompt(papers, 2, 3)
        assert client.send.call_args.args[0].prompt == expected


class TestLLMClusterReplay:
    """Replay-store runs of the module-level llm_cluster."""

    def test_replayed_response(self, tmp_path, papers):
        prompt = SchedulePromptBuilder().build_cluster_prompt(papers, 2, 11)
        record_response(
            tmp_path,
            prompt,
            block(
                ("Mining commit histories at scale", 1),
                ("Mining issue trackers for bugs", 1),
                ("Fuzzing compilers with grammars", 0),
                ("Fuzzing network protocols", 0),
            ),
        )

        outcome = llm_cluster(papers, 2, ReplayChatClient(tmp_path), seed=11)

        assert dict(outcome.labeling.labels) == {"p0": 1, "p1": 1, "p2": 0, "p3": 0}

    def test_missing_recording(self, tmp_path, papers):
        with pytest.raises(TransportExhaustedError):
            llm_cluster(papers, 2, ReplayChatClient(tmp_path), seed=11)
