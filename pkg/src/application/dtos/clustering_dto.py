"""DTOs for clustering trials."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional

from src.application.dtos.evaluation_dto import ScorePair
from src.domain.entities import Labeling


class ClusteringMethod(str, Enum):
    """How papers are grouped."""

    TFIDF = "tfidf"
    LLM = "llm"


@dataclass(frozen=True)
class TrialResult:
    """One seeded clustering run."""

    seed: int
    labeling: Labeling
    scores: Optional[ScorePair] = None
    repaired_papers: list[str] = field(default_factory=list)


@dataclass(frozen=True)
class TrialSummary:
    """All trials of one configuration, with the mean score when scored."""

    trials: list[TrialResult]
    mean: Optional[ScorePair] = None

    @property
    def seeds(self) -> list[int]:
        return [trial.seed for trial in self.trials]

    def to_dict(self) -> dict[str, Any]:
        return {
            "trials": [
                {
                    "seed": trial.seed,
                    "n_clusters": trial.labeling.n_clusters,
                    "labels": dict(trial.labeling.labels),
                    "scores": trial.scores.model_dump() if trial.scores else None,
                    "repaired_papers": trial.repaired_papers,
                }
                for trial in self.trials
            ],
            "mean": self.mean.model_dump() if self.mean else None,
        }
