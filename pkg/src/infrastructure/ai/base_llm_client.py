"""Chat client contract and LLM error hierarchy.

Every chat client (HTTP transport, replay store, recorder) implements
BaseChatClient so the scheduling and clustering services never depend on
where a response comes from.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any

DEFAULT_TEMPERATURE = 0.8
DEFAULT_MAX_RETRIES = 3


class LLMError(Exception):
    """Base exception for chat client errors."""

    pass


class RateLimitError(LLMError):
    """
    Raised when the endpoint rejects a request with HTTP 429.

    Attributes:
        retry_after: Seconds to wait before retrying (from Retry-After header).
        message: Human-readable error message.
    """

    def __init__(self, message: str = "Rate limit exceeded", retry_after: int = 60):
        super().__init__(message)
        self.retry_after = retry_after
        self.message = message


class TransientError(LLMError):
    """Timeouts, connection failures and 5xx responses; retried with backoff."""

    pass


class PermanentError(LLMError):
    """Authentication, validation and other 4xx failures; never retried."""

    pass


class ReplayMissError(PermanentError):
    """Raised when the replay store has no response for a prompt."""

    def __init__(self, prompt_key: str, store: str):
        super().__init__(f"No recorded response {prompt_key} in replay store {store}")
        self.prompt_key = prompt_key
        self.store = store


class TransportExhaustedError(LLMError):
    """
    Raised when the transport keeps failing after all retries.

    Attributes:
        transcript: Exchanges recorded before the failure.
    """

    def __init__(self, message: str, transcript: Any = None):
        super().__init__(message)
        self.transcript = transcript


class UnparseableResponseError(LLMError):
    """Raised when no attempt produced a usable response block."""

    def __init__(self, message: str, attempts: int, transcript: Any = None):
        super().__init__(message)
        self.attempts = attempts
        self.transcript = transcript


@dataclass(frozen=True)
class ChatRequest:
    """
    One chat-completion request.

    Attributes:
        model_name: Model identifier sent to the endpoint.
        temperature: Sampling temperature (>= 0).
        prompt: Single user message.
        max_retries: Identical re-prompts allowed when a response is unusable.
    """

    model_name: str
    prompt: str
    temperature: float = DEFAULT_TEMPERATURE
    max_retries: int = DEFAULT_MAX_RETRIES

    def __post_init__(self) -> None:
        if self.temperature < 0:
            raise ValueError(f"temperature must be >= 0, got {self.temperature}")
        if self.max_retries < 1:
            raise ValueError(f"max_retries must be >= 1, got {self.max_retries}")


class BaseChatClient(ABC):
    """Abstract chat-completion client."""

    @abstractmethod
    def send(self, request: ChatRequest) -> str:
        """
        Send one request and return the response text.

        Raises:
            LLMError: If the response cannot be obtained.
        """
        pass

    @abstractmethod
    def test_connection(self) -> bool:
        """Whether the backend looks usable, without sending a prompt."""
        pass
