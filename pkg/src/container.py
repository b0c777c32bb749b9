"""Dependency injection container."""

import logging
import sys

from dependency_injector import containers, providers

from config.settings import Settings
from src.application.services.clustering_service import ClusteringService
from src.application.services.llm_clustering_service import LLMClusteringService
from src.application.services.title_resolver import TitleResolver
from src.application.services.zero_shot_service import ZeroShotScheduler
from src.application.use_cases import (
    ClusterPapersUseCase,
    EvaluateScheduleUseCase,
    IngestCheckUseCase,
    LLMScheduleUseCase,
    SolveScheduleUseCase,
)
from src.infrastructure.ai.http_chat_client import HttpChatClient
from src.infrastructure.ai.prompt_builder import SchedulePromptBuilder
from src.infrastructure.ai.replay_client import RecordingChatClient, ReplayChatClient
from src.infrastructure.ai.response_parser import ClusterResponseParser

logger = logging.getLogger(__name__)


def _live_client(
    endpoint_url: str, api_key: str | None, timeout: int, record_dir: str
) -> HttpChatClient | RecordingChatClient:
    """HTTP client, wrapped in a recorder when a record directory is set."""
    client = HttpChatClient(endpoint_url=endpoint_url, api_key=api_key, timeout=timeout)
    if record_dir:
        return RecordingChatClient(client, record_dir)
    return client


class Container(containers.DeclarativeContainer):
    """
    Dependency injection container.

    Manages application dependencies and their lifecycles.
    Swaps the live chat endpoint for the replay store via LLM_BACKEND.
    """

    # Configuration
    config = providers.Singleton(Settings)

    # Chat client (conditional based on backend)
    chat_client = providers.Selector(
        config.provided.llm_backend,
        http=providers.Singleton(
            _live_client,
            endpoint_url=config.provided.llm_endpoint_url,
            api_key=config.provided.get_optional_llm_api_key.call(),
            timeout=config.provided.llm_timeout,
            record_dir=config.provided.llm_record_dir,
        ),
        replay=providers.Singleton(
            ReplayChatClient,
            store_dir=config.provided.llm_replay_dir,
        ),
    )

    # Language-model components
    prompt_builder = providers.Singleton(SchedulePromptBuilder)
    response_parser = providers.Singleton(ClusterResponseParser)
    title_resolver = providers.Singleton(
        TitleResolver,
        threshold=config.provided.match_threshold,
    )

    # Services
    clustering_service = providers.Singleton(
        ClusteringService,
        max_iter=config.provided.kmeans_max_iter,
    )

    zero_shot_scheduler = providers.Factory(
        ZeroShotScheduler,
        client=chat_client,
        model_name=config.provided.llm_model,
        prompt_builder=prompt_builder,
        title_resolver=title_resolver,
    )

    llm_clustering_service = providers.Factory(
        LLMClusteringService,
        client=chat_client,
        model_name=config.provided.llm_model,
        temperature=config.provided.llm_temperature,
        max_retries=config.provided.llm_max_retries,
        prompt_builder=prompt_builder,
        response_parser=response_parser,
        title_resolver=title_resolver,
    )

    # Use Cases
    cluster_papers_use_case = providers.Factory(
        ClusterPapersUseCase,
        clustering_service=clustering_service,
        llm_clustering_service=llm_clustering_service.provider,
    )

    solve_schedule_use_case = providers.Factory(SolveScheduleUseCase)

    llm_schedule_use_case = providers.Factory(
        LLMScheduleUseCase,
        scheduler=zero_shot_scheduler.provider,
    )

    evaluate_schedule_use_case = providers.Factory(
        EvaluateScheduleUseCase,
        title_resolver=title_resolver,
    )

    ingest_check_use_case = providers.Factory(
        IngestCheckUseCase,
        title_resolver=title_resolver,
    )


def setup_logging(log_level: str = "INFO") -> None:
    """
    Configure application logging on standard error.

    Args:
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL).
    """
    logging.basicConfig(
        level=getattr(logging, log_level.upper()),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
        stream=sys.stderr,
    )
