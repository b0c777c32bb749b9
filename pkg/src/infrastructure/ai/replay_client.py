"""Filesystem replay store for chat responses.

Responses live in one directory as ``{sha256(prompt)}.txt`` files, so a
pipeline fed by a ReplayChatClient runs offline and reproduces byte for
byte.
"""

import hashlib
import logging
from pathlib import Path

from .base_llm_client import BaseChatClient, ChatRequest, ReplayMissError

logger = logging.getLogger(__name__)

RESPONSE_SUFFIX = ".txt"


def prompt_key(prompt: str) -> str:
    """Hex SHA-256 of the UTF-8 prompt."""
    return hashlib.sha256(prompt.encode("utf-8")).hexdigest()


def response_path(store_dir: Path, prompt: str) -> Path:
    return Path(store_dir) / f"{prompt_key(prompt)}{RESPONSE_SUFFIX}"


class ReplayChatClient(BaseChatClient):
    """Serves recorded responses keyed by prompt hash. Read-only."""

    def __init__(self, store_dir: Path | str):
        self.store_dir = Path(store_dir)
        logger.info(f"Initialized replay chat client: {self.store_dir}")

    def send(self, request: ChatRequest) -> str:
        """
        Return the recorded response for the prompt.

        Raises:
            ReplayMissError: If no response file exists for the prompt.
        """
        path = response_path(self.store_dir, request.prompt)
        if not path.is_file():
            raise ReplayMissError(path.name, str(self.store_dir))
        logger.debug(f"Replaying {path.name}")
        return path.read_text(encoding="utf-8")

    def test_connection(self) -> bool:
        return self.store_dir.is_dir()


class RecordingChatClient(BaseChatClient):
    """Forwards to a live client and stores every response for later replay."""

    def __init__(self, inner: BaseChatClient, store_dir: Path | str):
        self.inner = inner
        self.store_dir = Path(store_dir)

    def send(self, request: ChatRequest) -> str:
        response = self.inner.send(request)
        self.store_dir.mkdir(parents=True, exist_ok=True)
        path = response_path(self.store_dir, request.prompt)
        path.write_text(response, encoding="utf-8")
        logger.info(f"Recorded response to {path}")
        return response

    def test_connection(self) -> bool:
        return self.inner.test_connection()


def record_response(store_dir: Path | str, prompt: str, response: str) -> Path:
    """Write a response file for a prompt; used to build replay fixtures."""
    path = response_path(Path(store_dir), prompt)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(response, encoding="utf-8")
    return path
