"""Repeated seeded clustering with averaged scores."""

import logging
from typing import Optional, Sequence

from src.application.dtos.clustering_dto import TrialResult, TrialSummary
from src.application.dtos.evaluation_dto import ScorePair
from src.application.services.evaluation_service import homogeneity_completeness
from src.domain.entities import Labeling, Paper
from src.infrastructure.clustering import TextFields, build_tfidf, kmeans
from src.infrastructure.clustering.kmeans import DEFAULT_MAX_ITER

logger = logging.getLogger(__name__)


def summarize_trials(trials: Sequence[TrialResult], reference: Optional[Labeling]) -> TrialSummary:
    """
    Score each trial against the reference and average.

    Trials are returned unchanged when no reference is given.
    """
    if reference is None:
        return TrialSummary(trials=list(trials))

    scored = [
        TrialResult(
            seed=trial.seed,
            labeling=trial.labeling,
            scores=homogeneity_completeness(reference, trial.labeling),
            repaired_papers=trial.repaired_papers,
        )
        for trial in trials
    ]
    mean = ScorePair.mean([trial.scores for trial in scored if trial.scores is not None])
    logger.info(f"Mean over {len(scored)} trials: {mean}")
    return TrialSummary(trials=scored, mean=mean)


class ClusteringService:
    """TFIDF + k-means clustering over several seeds."""

    def __init__(self, max_iter: int = DEFAULT_MAX_ITER):
        self.max_iter = max_iter

    def run_trials(
        self,
        papers: Sequence[Paper],
        fields: TextFields,
        k: int,
        seeds: Sequence[int],
        reference: Optional[Labeling] = None,
    ) -> TrialSummary:
        """
        Run k-means once per seed on one shared TFIDF model.

        Args:
            papers: Papers to cluster.
            fields: Text fields feeding the model.
            k: Number of clusters.
            seeds: One seed per trial.
            reference: Optional labeling to score each trial against.

        Returns:
            TrialSummary with per-trial labelings and, when a reference is
            given, per-trial and mean scores.

        Raises:
            ValueError: If seeds is empty or k is out of range.
        """
        if not seeds:
            raise ValueError("run_trials needs at least one seed")

        model = build_tfidf(papers, fields)
        paper_ids = [paper.id for paper in papers]
        trials = []
        for seed in seeds:
            labeling = kmeans(model, k, seed, paper_ids=paper_ids, max_iter=self.max_iter)
            logger.info(f"Trial seed={seed}: {labeling.n_clusters} clusters")
            trials.append(TrialResult(seed=seed, labeling=labeling))

        return summarize_trials(trials, reference)


def run_trials(
    papers: Sequence[Paper],
    fields: TextFields,
    k: int,
    seeds: Sequence[int],
    reference: Optional[Labeling] = None,
) -> TrialSummary:
    """run_trials with a default ClusteringService."""
    return ClusteringService().run_trials(papers, fields, k, seeds, reference)
