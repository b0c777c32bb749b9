"""Application configuration management."""

import os
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Application settings with environment variable support.

    Supports loading from .env files and secret files.
    """

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Application Configuration
    log_level: str = "INFO"
    default_seed: int = 0

    # LLM Configuration
    llm_backend: str = "replay"  # "http" or "replay"
    llm_endpoint_url: str = ""
    llm_model: str = "gpt-4"
    llm_api_key: Optional[str] = None
    llm_temperature: float = Field(0.8, ge=0.0)
    llm_max_retries: int = Field(3, ge=1)
    llm_timeout: int = 120
    llm_replay_dir: str = ""
    llm_record_dir: str = ""  # when set, live responses are also stored for replay

    # Matching and Clustering
    match_threshold: float = Field(0.6, gt=0.0, le=1.0)
    kmeans_max_iter: int = Field(300, ge=1)

    def get_llm_api_key(self) -> str:
        """
        Get the chat endpoint API key from a secret file or the environment.

        Returns:
            API key.

        Raises:
            ValueError: If the key is not configured.
        """
        # Try secret file first
        secret_file = os.environ.get("LLM_API_KEY_FILE")
        if secret_file and os.path.exists(secret_file):
            with open(secret_file, "r") as f:
                return f.read().strip()

        # Fall back to environment variable
        if self.llm_api_key:
            return self.llm_api_key

        raise ValueError(
            "LLM API key not configured. Set LLM_API_KEY environment variable "
            "or LLM_API_KEY_FILE for a secret file."
        )

    def get_optional_llm_api_key(self) -> Optional[str]:
        """API key when configured, None otherwise (unauthenticated endpoints)."""
        try:
            return self.get_llm_api_key()
        except ValueError:
            return None

    @property
    def has_llm_backend(self) -> bool:
        """Whether the configured backend has what it needs to answer prompts."""
        if self.llm_backend == "http":
            return bool(self.llm_endpoint_url)
        return bool(self.llm_replay_dir)


# Global settings instance
settings = Settings()
