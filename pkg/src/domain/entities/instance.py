"""Scheduling instance entity."""

from dataclasses import dataclass, field
from typing import Iterable

from src.domain.entities.paper import Paper, Session
from src.domain.exceptions import InstanceError


@dataclass(frozen=True)
class Instance:
    """
    The papers to place and the sessions available.

    Total paper duration may exceed total session capacity; that is an
    infeasible instance, reported by the solver rather than rejected here.
    """

    papers: tuple[Paper, ...]
    sessions: tuple[Session, ...]
    _paper_index: dict[str, int] = field(init=False, repr=False, compare=False)
    _session_index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        """Validate counts and id uniqueness, and build lookups."""
        object.__setattr__(self, "papers", tuple(self.papers))
        object.__setattr__(self, "sessions", tuple(self.sessions))

        if not self.papers:
            raise InstanceError("Instance needs at least one paper")
        if not self.sessions:
            raise InstanceError("Instance needs at least one session")

        object.__setattr__(self, "_paper_index", _index_unique(self.papers, "paper"))
        object.__setattr__(self, "_session_index", _index_unique(self.sessions, "session"))

    @classmethod
    def build(cls, papers: Iterable[Paper], sessions: Iterable[Session]) -> "Instance":
        """Create an instance from any iterables of papers and sessions."""
        return cls(papers=tuple(papers), sessions=tuple(sessions))

    @property
    def n_papers(self) -> int:
        """Number of papers (N)."""
        return len(self.papers)

    @property
    def n_sessions(self) -> int:
        """Number of sessions (M)."""
        return len(self.sessions)

    @property
    def paper_ids(self) -> list[str]:
        """Paper ids in instance order."""
        return [paper.id for paper in self.papers]

    @property
    def session_ids(self) -> list[str]:
        """Session ids in instance order."""
        return [session.id for session in self.sessions]

    @property
    def total_duration(self) -> int:
        """Sum of paper durations in minutes."""
        return sum(paper.duration for paper in self.papers)

    @property
    def total_capacity(self) -> int:
        """Sum of session lengths in minutes."""
        return sum(session.length for session in self.sessions)

    def has_paper(self, paper_id: str) -> bool:
        return paper_id in self._paper_index

    def has_session(self, session_id: str) -> bool:
        return session_id in self._session_index

    def paper_index(self, paper_id: str) -> int:
        """Position of a paper in instance order."""
        return self._paper_index[paper_id]

    def session_index(self, session_id: str) -> int:
        """Position of a session in instance order."""
        return self._session_index[session_id]

    def paper(self, paper_id: str) -> Paper:
        return self.papers[self._paper_index[paper_id]]

    def session(self, session_id: str) -> Session:
        return self.sessions[self._session_index[session_id]]

    def __str__(self) -> str:
        """Human-readable string representation."""
        return (
            f"Instance({self.n_papers} papers, {self.n_sessions} sessions, "
            f"{self.total_duration}/{self.total_capacity} min)"
        )


def _index_unique(items: tuple, kind: str) -> dict[str, int]:
    index: dict[str, int] = {}
    for position, item in enumerate(items):
        if item.id in index:
            raise InstanceError(f"Duplicate {kind} id '{item.id}' at position {position}")
        index[item.id] = position
    return index
