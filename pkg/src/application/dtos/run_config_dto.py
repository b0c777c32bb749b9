"""Run configurations, one per CLI subcommand."""

from typing import Optional

from pydantic import BaseModel, Field, model_validator

from src.application.dtos.clustering_dto import ClusteringMethod
from src.application.solver.models import BoundKind
from src.infrastructure.clustering.tfidf import TextFields


class RunConfig(BaseModel):
    """Settings every subcommand shares."""

    seed: int = 0
    output: Optional[str] = None  # None means standard output
    json_output: bool = False


class ClusterRunConfig(RunConfig):
    """Configuration for `cluster`."""

    papers_path: str
    method: ClusteringMethod = ClusteringMethod.TFIDF
    fields: TextFields = TextFields.TITLE
    k: int = Field(5, ge=1)
    trials: int = Field(5, ge=1)
    reference_path: Optional[str] = None
    labels_dir: Optional[str] = None

    @property
    def seeds(self) -> list[int]:
        """Trial i uses seed + i."""
        return [self.seed + i for i in range(self.trials)]


class SolveRunConfig(RunConfig):
    """Configuration for `solve`."""

    papers_path: str
    sessions_path: str
    labeling_path: Optional[str] = None
    similarity_path: Optional[str] = None
    time_budget: Optional[float] = Field(None, gt=0)
    node_limit: Optional[int] = Field(None, ge=1)
    oracle: bool = False
    bound: BoundKind = BoundKind.PAIRWISE
    schedule_out: Optional[str] = None

    @model_validator(mode="after")
    def one_similarity_source(self) -> "SolveRunConfig":
        """Exactly one of labeling_path and similarity_path is set."""
        if (self.labeling_path is None) == (self.similarity_path is None):
            raise ValueError("Give exactly one of --labeling or --similarity")
        return self


class LLMScheduleRunConfig(RunConfig):
    """Configuration for `llm-schedule`."""

    papers_path: str
    sessions_path: str
    reference_path: Optional[str] = None
    papers_per_session: Optional[int] = Field(None, ge=1)
    session_count: Optional[int] = Field(None, ge=1)
    temperature: float = Field(0.8, ge=0.0)
    max_retries: int = Field(3, ge=1)
    schedule_out: Optional[str] = None
    transcript_path: Optional[str] = None

    @model_validator(mode="after")
    def downsampling_needs_reference(self) -> "LLMScheduleRunConfig":
        """Downsampling follows the reference program."""
        wants_downsample = self.papers_per_session is not None or self.session_count is not None
        if wants_downsample and self.reference_path is None:
            raise ValueError("--papers-per-session and --session-count need --reference")
        return self


class EvaluateRunConfig(RunConfig):
    """Configuration for `evaluate`."""

    papers_path: str
    sessions_path: str
    reference_path: str
    candidate_path: str


class IngestCheckConfig(RunConfig):
    """Configuration for `ingest-check`."""

    papers_path: str
    sessions_path: str
    schedule_path: Optional[str] = None
