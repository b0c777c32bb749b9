"""Zero-shot scheduling: one prompt, one proposed program, one report."""

import logging

from src.application.dtos.llm_dto import ZeroShotOutcome
from src.application.services.chat_exchange import exchange
from src.application.services.evaluation_service import violation_report
from src.application.services.title_resolver import TitleResolver
from src.domain.entities import Instance
from src.infrastructure.ai.base_llm_client import (
    DEFAULT_MAX_RETRIES,
    DEFAULT_TEMPERATURE,
    BaseChatClient,
    ChatRequest,
)
from src.infrastructure.ai.prompt_builder import SchedulePromptBuilder
from src.infrastructure.ai.transcript import Transcript
from src.infrastructure.parsers.schedule_wire_format import ParsedScheduleBlock, parse_schedule_block

logger = logging.getLogger(__name__)


def _is_parseable(parsed: ParsedScheduleBlock) -> bool:
    return parsed.is_parseable


class ZeroShotScheduler:
    """
    Ask a chat model for a whole program and measure what it got wrong.

    The response is parsed, its titles are matched back to instance
    papers, and violations are counted against instance truth. An
    unparseable last response still yields a (flagged) report.
    """

    def __init__(
        self,
        client: BaseChatClient,
        model_name: str,
        prompt_builder: SchedulePromptBuilder | None = None,
        title_resolver: TitleResolver | None = None,
    ):
        self.client = client
        self.model_name = model_name
        self.prompt_builder = prompt_builder or SchedulePromptBuilder()
        self.title_resolver = title_resolver or TitleResolver()

    def zero_shot_schedule(
        self,
        instance: Instance,
        seed: int,
        temperature: float = DEFAULT_TEMPERATURE,
        max_retries: int = DEFAULT_MAX_RETRIES,
    ) -> ZeroShotOutcome:
        """
        Run one zero-shot scheduling exchange.

        Args:
            instance: Papers and sessions to schedule.
            seed: Seed for the paper shuffle in the prompt.
            temperature: Sampling temperature.
            max_retries: Attempts allowed while the response does not parse.

        Returns:
            ZeroShotOutcome with the resolved schedule, its violation report
            and the transcript.

        Raises:
            TransportExhaustedError: If the client fails; carries the transcript.
        """
        prompt = self.prompt_builder.build_schedule_prompt(instance, seed)
        request = ChatRequest(
            model_name=self.model_name,
            prompt=prompt,
            temperature=temperature,
            max_retries=max_retries,
        )
        transcript = Transcript()
        parsed, attempts = exchange(self.client, request, parse_schedule_block, _is_parseable, transcript)
        if not _is_parseable(parsed):
            logger.warning(f"No fenced schedule block after {attempts} attempts")

        resolution = self.title_resolver.resolve_titles(parsed.rows, instance)
        report = violation_report(instance, parsed.rows, resolution, parsed)
        return ZeroShotOutcome(
            schedule=resolution.schedule,
            report=report,
            transcript=transcript,
            parsed=parsed,
            resolution=resolution,
            attempts=attempts,
        )


def zero_shot_schedule(
    instance: Instance,
    client: BaseChatClient,
    seed: int,
    temperature: float = DEFAULT_TEMPERATURE,
    model_name: str = "gpt-4",
    max_retries: int = DEFAULT_MAX_RETRIES,
) -> ZeroShotOutcome:
    """zero_shot_schedule with default prompt builder and title resolver."""
    return ZeroShotScheduler(client, model_name).zero_shot_schedule(
        instance, seed, temperature=temperature, max_retries=max_retries
    )
