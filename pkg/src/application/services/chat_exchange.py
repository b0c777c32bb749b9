"""Send a prompt, re-sending it unchanged until the response parses."""

import logging
from typing import Callable, TypeVar

from src.infrastructure.ai.base_llm_client import (
    BaseChatClient,
    ChatRequest,
    LLMError,
    TransportExhaustedError,
)
from src.infrastructure.ai.transcript import Transcript

logger = logging.getLogger(__name__)

T = TypeVar("T")


def exchange(
    client: BaseChatClient,
    request: ChatRequest,
    parse: Callable[[str], T],
    usable: Callable[[T], bool],
    transcript: Transcript,
) -> tuple[T, int]:
    """
    Prompt up to request.max_retries times, stopping at the first usable parse.

    Every attempt lands in the transcript.

    Returns:
        (last parse result, attempts made); the result may be unusable when
        all attempts were spent.

    Raises:
        TransportExhaustedError: If the client fails; carries the transcript.
    """
    parsed: T | None = None
    for attempt in range(1, request.max_retries + 1):
        try:
            response = client.send(request)
        except LLMError as e:
            transcript.record(request.prompt, None, attempt, error=str(e))
            logger.error(f"Chat request failed on attempt {attempt}: {e}")
            raise TransportExhaustedError(f"Chat request failed: {e}", transcript=transcript) from e

        transcript.record(request.prompt, response, attempt)
        parsed = parse(response)
        if usable(parsed):
            logger.info(f"Usable response on attempt {attempt} ({len(response)} chars)")
            return parsed, attempt
        logger.warning(f"Unusable response on attempt {attempt}/{request.max_retries}; re-prompting")

    assert parsed is not None
    return parsed, request.max_retries
