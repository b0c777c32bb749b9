"""DTOs for clustering scores and schedule violation reports."""

from pydantic import BaseModel, ConfigDict, Field, computed_field


class ScorePair(BaseModel):
    """Homogeneity and completeness of a clustering against a reference."""

    model_config = ConfigDict(frozen=True)

    homogeneity: float = Field(..., ge=0.0, le=1.0)
    completeness: float = Field(..., ge=0.0, le=1.0)

    @classmethod
    def mean(cls, pairs: list["ScorePair"]) -> "ScorePair":
        """Component-wise mean of one or more pairs."""
        if not pairs:
            raise ValueError("Cannot average an empty list of scores")
        return cls(
            homogeneity=sum(p.homogeneity for p in pairs) / len(pairs),
            completeness=sum(p.completeness for p in pairs) / len(pairs),
        )

    def __str__(self) -> str:
        return f"homogeneity={self.homogeneity:.4f} completeness={self.completeness:.4f}"


class OverfullSession(BaseModel):
    """A session whose assigned durations exceed its length."""

    model_config = ConfigDict(frozen=True)

    session_id: str
    length: int
    total: int
    overage_fraction: float = Field(..., gt=0.0)


class ViolationReport(BaseModel):
    """Constraint violations of a proposed schedule."""

    missing_papers: list[str] = Field(default_factory=list)
    added_sessions: list[str] = Field(default_factory=list)
    overfull_sessions: list[OverfullSession] = Field(default_factory=list)
    qa_misplaced: list[str] = Field(default_factory=list)
    duplicate_assignments: list[str] = Field(default_factory=list)
    unmatched_rows: int = Field(0, ge=0)
    parse_defects: list[str] = Field(default_factory=list)
    unparseable: bool = False
    session_count: int = Field(0, ge=0)

    @computed_field
    @property
    def missing_paper_count(self) -> int:
        return len(self.missing_papers)

    @computed_field
    @property
    def added_session_count(self) -> int:
        return len(self.added_sessions)

    @computed_field
    @property
    def sessions_over_10pct(self) -> int:
        return sum(1 for s in self.overfull_sessions if s.overage_fraction > 0.10)

    @computed_field
    @property
    def sessions_over_50pct(self) -> int:
        return sum(1 for s in self.overfull_sessions if s.overage_fraction > 0.50)

    @computed_field
    @property
    def overfull_session_rate(self) -> float:
        """Share of instance sessions that are overfull."""
        if not self.session_count:
            return 0.0
        return len(self.overfull_sessions) / self.session_count

    @property
    def is_clean(self) -> bool:
        """True when no violation of any kind was found."""
        return not (
            self.missing_papers
            or self.added_sessions
            or self.overfull_sessions
            or self.qa_misplaced
            or self.duplicate_assignments
            or self.unmatched_rows
            or self.unparseable
        )

    def __str__(self) -> str:
        """Human-readable summary."""
        flag = "[UNPARSEABLE] " if self.unparseable else ""
        return (
            f"{flag}Violation Report:\n"
            f"  Missing papers: {self.missing_paper_count}\n"
            f"  Added sessions: {self.added_session_count}\n"
            f"  Overfull sessions: {len(self.overfull_sessions)} "
            f"(>10%: {self.sessions_over_10pct}, >50%: {self.sessions_over_50pct})\n"
            f"  Q/A not last: {len(self.qa_misplaced)}\n"
            f"  Duplicate assignments: {len(self.duplicate_assignments)}\n"
            f"  Unmatched rows: {self.unmatched_rows}"
        )
