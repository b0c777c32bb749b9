"""Chat clients, prompts and response parsing for language-model experiments."""

from .base_llm_client import (
    BaseChatClient,
    ChatRequest,
    LLMError,
    PermanentError,
    RateLimitError,
    ReplayMissError,
    TransientError,
    TransportExhaustedError,
    UnparseableResponseError,
)
from .http_chat_client import HttpChatClient
from .prompt_builder import SchedulePromptBuilder, build_schedule_prompt
from .replay_client import RecordingChatClient, ReplayChatClient, prompt_key, record_response
from .response_parser import ClusterResponseParser, ClusterRow, ParsedClusterBlock
from .transcript import Transcript, TranscriptEntry

__all__ = [
    "BaseChatClient",
    "ChatRequest",
    "ClusterResponseParser",
    "ClusterRow",
    "HttpChatClient",
    "LLMError",
    "ParsedClusterBlock",
    "PermanentError",
    "RateLimitError",
    "RecordingChatClient",
    "ReplayChatClient",
    "ReplayMissError",
    "SchedulePromptBuilder",
    "Transcript",
    "TranscriptEntry",
    "TransientError",
    "TransportExhaustedError",
    "UnparseableResponseError",
    "build_schedule_prompt",
    "prompt_key",
    "record_response",
]
