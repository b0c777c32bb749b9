"""Schedule and Labeling domain entities."""

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterator, Mapping

from src.domain.exceptions import MalformedLabelingError


@dataclass(frozen=True)
class Schedule:
    """
    Map from paper id to session id.

    Solver-produced schedules are total over the instance papers. Schedules
    recovered from LLM output may be partial.
    """

    assignment: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "assignment", MappingProxyType(dict(self.assignment)))

    def session_of(self, paper_id: str) -> str:
        return self.assignment[paper_id]

    def papers_in(self, session_id: str) -> list[str]:
        """Paper ids placed in a session, in insertion order."""
        return [p for p, s in self.assignment.items() if s == session_id]

    def restricted_to(self, paper_ids: set[str]) -> "Schedule":
        """Sub-schedule over the given papers."""
        return Schedule({p: s for p, s in self.assignment.items() if p in paper_ids})

    def to_labeling(self, session_order: list[str]) -> "Labeling":
        """
        Turn session membership into integer labels.

        Sessions get labels by their position in session_order; sessions
        missing from that order are numbered after it, in first-seen order.
        """
        codes = {session_id: i for i, session_id in enumerate(session_order)}
        labels: dict[str, int] = {}
        for paper_id, session_id in self.assignment.items():
            if session_id not in codes:
                codes[session_id] = len(codes)
            labels[paper_id] = codes[session_id]
        return Labeling(labels)

    def __len__(self) -> int:
        return len(self.assignment)

    def __contains__(self, paper_id: object) -> bool:
        return paper_id in self.assignment

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Schedule):
            return NotImplemented
        return dict(self.assignment) == dict(other.assignment)

    def __hash__(self) -> int:
        return hash(frozenset(self.assignment.items()))


@dataclass(frozen=True)
class Labeling:
    """
    Cluster or class label per paper.

    Labels are non-negative integers and need not be contiguous.
    """

    labels: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned: dict[str, int] = {}
        for paper_id, label in dict(self.labels).items():
            if isinstance(label, bool) or int(label) != label or label < 0:
                raise MalformedLabelingError(
                    f"Label for paper '{paper_id}' must be a non-negative integer, got {label!r}"
                )
            cleaned[paper_id] = int(label)
        object.__setattr__(self, "labels", MappingProxyType(cleaned))

    @property
    def paper_ids(self) -> list[str]:
        return list(self.labels.keys())

    @property
    def n_clusters(self) -> int:
        return len(set(self.labels.values()))

    def label_of(self, paper_id: str) -> int:
        if paper_id not in self.labels:
            raise MalformedLabelingError(f"No label for paper '{paper_id}'")
        return self.labels[paper_id]

    def values_for(self, paper_ids: list[str]) -> list[int]:
        """Labels in the given paper order; every paper must be labelled."""
        return [self.label_of(paper_id) for paper_id in paper_ids]

    def canonical(self) -> "Labeling":
        """Relabel clusters 0, 1, ... in order of first appearance."""
        codes: dict[int, int] = {}
        relabeled = {}
        for paper_id, label in self.labels.items():
            if label not in codes:
                codes[label] = len(codes)
            relabeled[paper_id] = codes[label]
        return Labeling(relabeled)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Labeling):
            return NotImplemented
        return dict(self.labels) == dict(other.labels)

    def __hash__(self) -> int:
        return hash(frozenset(self.labels.items()))
