"""Paper and Session domain entities."""

from dataclasses import dataclass
from typing import Optional

from src.domain.exceptions import InstanceError

DISCUSSION_TITLE = "Discussions and Q/A"


@dataclass(frozen=True)
class Paper:
    """
    One accepted talk.

    Durations are whole minutes. "Discussions and Q/A" slots are modelled
    as ordinary papers carrying that exact title.
    """

    id: str
    title: str
    duration: int
    abstract: Optional[str] = None

    def __post_init__(self) -> None:
        """Validate paper data after initialization."""
        if not str(self.id).strip():
            raise InstanceError("Paper id cannot be empty")

        if not self.title or not self.title.strip():
            raise InstanceError(f"Paper {self.id} title cannot be empty")

        if isinstance(self.duration, bool) or not isinstance(self.duration, int):
            raise InstanceError(f"Paper {self.id} duration must be an integer")

        if self.duration <= 0:
            raise InstanceError(f"Paper {self.id} duration must be positive")

    @property
    def is_discussion(self) -> bool:
        """Check if this item is a "Discussions and Q/A" event."""
        return self.title.strip().casefold() == DISCUSSION_TITLE.casefold()

    @property
    def text(self) -> str:
        """Title and abstract joined, for text models."""
        if self.abstract:
            return f"{self.title} {self.abstract}"
        return self.title

    def __str__(self) -> str:
        """Human-readable string representation."""
        return f"{self.id} | {self.title[:40]} | {self.duration} min"


@dataclass(frozen=True)
class Session:
    """A fixed-length block of the program that papers are placed into."""

    id: str
    title: str
    length: int

    def __post_init__(self) -> None:
        """Validate session data after initialization."""
        if not str(self.id).strip():
            raise InstanceError("Session id cannot be empty")

        if isinstance(self.length, bool) or not isinstance(self.length, int):
            raise InstanceError(f"Session {self.id} length must be an integer")

        if self.length <= 0:
            raise InstanceError(f"Session {self.id} length must be positive")

    def __str__(self) -> str:
        """Human-readable string representation."""
        return f"{self.id} | {self.title} | {self.length} min"
