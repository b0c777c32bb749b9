"""Cluster papers by asking a chat model to group their titles."""

import logging
from collections import Counter
from typing import Sequence

from src.application.dtos.llm_dto import LLMClusteringOutcome
from src.application.services.chat_exchange import exchange
from src.application.services.title_resolver import TitleResolver
from src.domain.entities import Labeling, Paper
from src.infrastructure.ai.base_llm_client import (
    DEFAULT_MAX_RETRIES,
    DEFAULT_TEMPERATURE,
    BaseChatClient,
    ChatRequest,
    UnparseableResponseError,
)
from src.infrastructure.ai.prompt_builder import SchedulePromptBuilder
from src.infrastructure.ai.response_parser import ClusterResponseParser
from src.infrastructure.ai.transcript import Transcript

logger = logging.getLogger(__name__)


def _largest_cluster(labels: dict[str, int]) -> int:
    """Most populated label, smallest label on ties; 0 when nothing is labeled."""
    if not labels:
        return 0
    counts = Counter(labels.values())
    return min(counts, key=lambda label: (-counts[label], label))


class LLMClusteringService:
    """
    Title-only clustering by a chat model.

    Rows whose cluster falls outside 0..k-1 are rejected. Papers no row
    claims are put into the largest returned cluster and listed as
    repaired, so the labeling is always total.
    """

    def __init__(
        self,
        client: BaseChatClient,
        model_name: str,
        temperature: float = DEFAULT_TEMPERATURE,
        max_retries: int = DEFAULT_MAX_RETRIES,
        prompt_builder: SchedulePromptBuilder | None = None,
        response_parser: ClusterResponseParser | None = None,
        title_resolver: TitleResolver | None = None,
    ):
        self.client = client
        self.model_name = model_name
        self.temperature = temperature
        self.max_retries = max_retries
        self.prompt_builder = prompt_builder or SchedulePromptBuilder()
        self.response_parser = response_parser or ClusterResponseParser()
        self.title_resolver = title_resolver or TitleResolver()

    def llm_cluster(self, papers: Sequence[Paper], k: int, seed: int) -> LLMClusteringOutcome:
        """
        Cluster papers into k groups by title.

        Raises:
            ValueError: If k < 1 or papers is empty.
            UnparseableResponseError: If no attempt returned a usable block.
            TransportExhaustedError: If the client fails.
        """
        if k < 1:
            raise ValueError(f"k must be at least 1, got {k}")
        if not papers:
            raise ValueError("llm_cluster needs at least one paper")

        request = ChatRequest(
            model_name=self.model_name,
            prompt=self.prompt_builder.build_cluster_prompt(papers, k, seed),
            temperature=self.temperature,
            max_retries=self.max_retries,
        )
        transcript = Transcript()
        parsed, attempts = exchange(
            self.client, request, self.response_parser.parse, lambda block: block.is_usable, transcript
        )
        if not parsed.is_usable:
            raise UnparseableResponseError(
                f"No usable clustering block after {attempts} attempts",
                attempts=attempts,
                transcript=transcript,
            )

        in_range = [row for row in parsed.rows if 0 <= row.cluster < k]
        rejected = [row for row in parsed.rows if not 0 <= row.cluster < k]
        if rejected:
            logger.warning(f"Rejected {len(rejected)} rows with clusters outside 0..{k - 1}")

        matching = self.title_resolver.match_titles([row.talk_title for row in in_range], papers)
        labels: dict[str, int] = {}
        for row, paper_id in zip(in_range, matching.matches):
            if paper_id is not None:
                labels[paper_id] = row.cluster

        fallback = _largest_cluster(labels)
        repaired = [paper.id for paper in papers if paper.id not in labels]
        for paper_id in repaired:
            labels[paper_id] = fallback
        if repaired:
            logger.warning(f"Repaired {len(repaired)} unlabeled papers into cluster {fallback}")

        labeling = Labeling({paper.id: labels[paper.id] for paper in papers})
        return LLMClusteringOutcome(
            labeling=labeling,
            transcript=transcript,
            attempts=attempts,
            repaired_papers=repaired,
            rejected_rows=rejected,
        )


def llm_cluster(
    papers: Sequence[Paper],
    k: int,
    client: BaseChatClient,
    seed: int,
    model_name: str = "gpt-4",
) -> LLMClusteringOutcome:
    """llm_cluster with default prompt builder, parser and resolver."""
    return LLMClusteringService(client, model_name).llm_cluster(papers, k, seed)
