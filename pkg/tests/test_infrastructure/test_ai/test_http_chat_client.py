"""Unit tests for the HTTP chat client."""

from unittest.mock import Mock, patch

import httpx
import pytest

from src.infrastructure.ai.base_llm_client import (
    ChatRequest,
    PermanentError,
    RateLimitError,
    TransientError,
)
from src.infrastructure.ai.http_chat_client import HttpChatClient


def completion(content: str) -> Mock:
    response = Mock()
    response.json.return_value = {"choices": [{"message": {"content": content}}]}
    return response


def status_error(code: int, headers: dict | None = None) -> Mock:
    response = Mock()
    response.status_code = code
    response.headers = headers or {}
    response.raise_for_status.side_effect = httpx.HTTPStatusError(
        f"{code} Error", request=Mock(), response=response
    )
    return response


class TestHttpChatClient:
    """Test suite for HttpChatClient."""

    @pytest.fixture
    def mock_httpx_client(self):
        """Create mock httpx client."""
        with patch("src.infrastructure.ai.http_chat_client.httpx.Client") as mock_client:
            yield mock_client.return_value

    @pytest.fixture
    def client(self, mock_httpx_client):
        """Create HttpChatClient instance with mocked httpx."""
        return HttpChatClient(endpoint_url="http://test/v1/chat/completions", api_key="k", timeout=30)

    @pytest.fixture(autouse=True)
    def no_backoff(self):
        """Skip tenacity's sleeps between retries."""
        with patch("tenacity.nap.time.sleep"):
            yield

    @pytest.fixture
    def request_(self):
        return ChatRequest(model_name="gpt-4", prompt="Schedule these", temperature=0.8)

    def test_init_requires_endpoint(self):
        with pytest.raises(ValueError, match="endpoint_url is required"):
            HttpChatClient(endpoint_url="")

    def test_init_sets_bearer_header(self):
        with patch("src.infrastructure.ai.http_chat_client.httpx.Client") as mock_client:
            HttpChatClient(endpoint_url="http://test", api_key="secret", timeout=12)

        kwargs = mock_client.call_args[1]
        assert kwargs["timeout"] == 12
        assert kwargs["headers"]["Authorization"] == "Bearer secret"

    def test_init_without_key_omits_authorization(self):
        with patch("src.infrastructure.ai.http_chat_client.httpx.Client") as mock_client:
            HttpChatClient(endpoint_url="http://test")

        assert "Authorization" not in mock_client.call_args[1]["headers"]

    def test_send_success(self, client, mock_httpx_client, request_):
        mock_httpx_client.post.return_value = completion("```\nrows\n```")

        result = client.send(request_)

        assert result == "```\nrows\n```"
        call_args = mock_httpx_client.post.call_args
        assert call_args[0][0] == "http://test/v1/chat/completions"
        payload = call_args[1]["json"]
        assert payload["model"] == "gpt-4"
        assert payload["temperature"] == 0.8
        assert payload["messages"] == [{"role": "user", "content": "Schedule these"}]

    def test_transient_error_retried(self, client, mock_httpx_client, request_):
        mock_httpx_client.post.side_effect = [
            httpx.ConnectError("Connection refused"),
            completion("ok"),
        ]

        assert client.send(request_) == "ok"
        assert mock_httpx_client.post.call_count == 2

    def test_server_error_exhausts_retries(self, client, mock_httpx_client, request_):
        mock_httpx_client.post.return_value = status_error(503)

        with pytest.raises(TransientError):
            client.send(request_)

        assert mock_httpx_client.post.call_count == 5

    def test_rate_limit_reads_retry_after(self, client, mock_httpx_client, request_):
        mock_httpx_client.post.return_value = status_error(429, {"retry-after": "7"})

        with pytest.raises(RateLimitError) as exc_info:
            client.send(request_)

        assert exc_info.value.retry_after == 7

    def test_client_error_not_retried(self, client, mock_httpx_client, request_):
        mock_httpx_client.post.return_value = status_error(401)

        with pytest.raises(PermanentError):
            client.send(request_)

        assert mock_httpx_client.post.call_count == 1

    def test_malformed_payload_is_permanent(self, client, mock_httpx_client, request_):
        response = Mock()
        response.json.return_value = {"choices": []}
        mock_httpx_client.post.return_value = response

        with pytest.raises(PermanentError, match="Malformed completion payload"):
            client.send(request_)

    def test_test_connection(self, client, mock_httpx_client):
        mock_httpx_client.get.return_value = Mock(status_code=405)
        assert client.test_connection() is True

        mock_httpx_client.get.side_effect = httpx.ConnectError("down")
        assert client.test_connection() is False


class TestChatRequest:
    """Test suite for ChatRequest validation."""

    def test_defaults(self):
        request = ChatRequest(model_name="gpt-4", prompt="p")

        assert request.temperature == 0.8
        assert request.max_retries == 3

    def test_negative_temperature_rejected(self):
        with pytest.raises(ValueError, match="temperature"):
            ChatRequest(model_name="gpt-4", prompt="p", temperature=-0.1)

    def test_zero_retries_rejected(self):
        with pytest.raises(ValueError, match="max_retries"):
            ChatRequest(model_name="gpt-4", prompt="p", max_retries=0)
