"""JSON-lines transcript of prompt/response exchanges."""

import json
import logging
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TranscriptEntry:
    """One attempt: the prompt sent and what came back."""

    timestamp: str
    prompt: str
    response: Optional[str]
    attempt: int
    error: Optional[str] = None


@dataclass
class Transcript:
    """Ordered record of every attempt made for one task."""

    entries: list[TranscriptEntry] = field(default_factory=list)

    def record(
        self,
        prompt: str,
        response: Optional[str],
        attempt: int,
        error: Optional[str] = None,
    ) -> TranscriptEntry:
        entry = TranscriptEntry(
            timestamp=datetime.now(timezone.utc).isoformat(),
            prompt=prompt,
            response=response,
            attempt=attempt,
            error=error,
        )
        self.entries.append(entry)
        return entry

    @property
    def responses(self) -> list[str]:
        return [entry.response for entry in self.entries if entry.response is not None]

    def __len__(self) -> int:
        return len(self.entries)

    def to_jsonl(self) -> str:
        return "".join(json.dumps(asdict(entry), ensure_ascii=False) + "\n" for entry in self.entries)

    def write(self, path: Path | str) -> Path:
        """Write (overwrite) the transcript as JSON lines."""
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(self.to_jsonl(), encoding="utf-8")
        logger.info(f"Wrote transcript ({len(self.entries)} entries) to {target}")
        return target
