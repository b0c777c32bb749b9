"""HTTP chat-completion client."""

import logging
from typing import Optional

import httpx
from tenacity import (
    retry,
    retry_if_exception,
    stop_after_attempt,
    wait_exponential,
)

from .base_llm_client import (
    BaseChatClient,
    ChatRequest,
    PermanentError,
    RateLimitError,
    TransientError,
)

logger = logging.getLogger(__name__)


def _is_retryable_error(exception: BaseException) -> bool:
    """Rate limits and transient failures are retried; everything else is not."""
    return isinstance(exception, (RateLimitError, TransientError))


class HttpChatClient(BaseChatClient):
    """
    Client for an OpenAI-style chat-completion endpoint.

    Posts {model, temperature, messages} as JSON with a bearer token and
    reads choices[0].message.content from the reply.
    """

    def __init__(
        self,
        endpoint_url: str,
        api_key: Optional[str] = None,
        timeout: int = 120,
    ):
        """
        Initialize the client.

        Args:
            endpoint_url: Full chat-completion URL.
            api_key: Bearer token; omitted from headers when None.
            timeout: Request timeout in seconds.
        """
        if not endpoint_url:
            raise ValueError("endpoint_url is required for the HTTP chat client")

        self.endpoint_url = endpoint_url
        headers = {"Content-Type": "application/json"}
        if api_key:
            headers["Authorization"] = f"Bearer {api_key}"
        self.client = httpx.Client(timeout=timeout, headers=headers)

        logger.info(f"Initialized HTTP chat client: {endpoint_url}")

    def __del__(self):
        """Clean up HTTP client."""
        if hasattr(self, "client"):
            self.client.close()

    def _classify_error(self, error: Exception) -> Exception:
        """Map an httpx failure to the LLM error hierarchy."""
        if isinstance(error, httpx.HTTPStatusError) and error.response.status_code == 429:
            retry_after = 60
            if "retry-after" in error.response.headers:
                try:
                    retry_after = int(error.response.headers["retry-after"])
                except ValueError:
                    pass
            logger.warning(f"Rate limit error. Retry after {retry_after}s")
            return RateLimitError(message=str(error), retry_after=retry_after)

        if isinstance(error, (httpx.ConnectError, httpx.TimeoutException)):
            logger.warning(f"Transient error: {error}")
            return TransientError(str(error))

        if isinstance(error, httpx.HTTPStatusError) and error.response.status_code >= 500:
            logger.warning(f"Server error (transient): {error.response.status_code}")
            return TransientError(str(error))

        if isinstance(error, httpx.HTTPStatusError):
            logger.error(f"Client error (permanent): {error.response.status_code}")
            return PermanentError(str(error))

        if isinstance(error, (KeyError, IndexError, TypeError, ValueError)):
            logger.error(f"Malformed completion payload: {error}")
            return PermanentError(f"Malformed completion payload: {error}")

        logger.warning(f"Unknown error type, treating as transient: {error}")
        return TransientError(str(error))

    @retry(
        retry=retry_if_exception(_is_retryable_error),
        stop=stop_after_attempt(5),
        wait=wait_exponential(multiplier=2, min=5, max=120),
        reraise=True,
    )
    def send(self, request: ChatRequest) -> str:
        """
        Send one chat completion.

        Rate limits and transient failures are retried up to 5 times with
        exponential backoff (5s to 120s); permanent errors fail at once.

        Raises:
            RateLimitError: If rate limiting persists after all retries.
            TransientError: If a transient failure persists after all retries.
            PermanentError: On 4xx responses or a malformed payload.
        """
        payload = {
            "model": request.model_name,
            "temperature": request.temperature,
            "messages": [{"role": "user", "content": request.prompt}],
        }
        try:
            logger.debug(f"POST {self.endpoint_url} ({len(request.prompt)} prompt chars)")
            response = self.client.post(self.endpoint_url, json=payload)
            response.raise_for_status()
            content = response.json()["choices"][0]["message"]["content"]
        except Exception as e:
            raise self._classify_error(e) from e

        text = content or ""
        logger.info(f"Received response ({len(text)} chars)")
        return text

    def test_connection(self) -> bool:
        """True when the endpoint answers at all (any status below 500)."""
        try:
            response = self.client.get(self.endpoint_url)
            return response.status_code < 500
        except httpx.HTTPError as e:
            logger.error(f"Chat endpoint connection test failed: {e}")
            return False
