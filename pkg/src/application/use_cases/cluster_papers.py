"""Use case for clustering papers over several seeded trials."""

import logging
from pathlib import Path
from typing import Callable, Optional

from src.application.dtos.clustering_dto import ClusteringMethod, TrialResult, TrialSummary
from src.application.dtos.run_config_dto import ClusterRunConfig
from src.application.services.clustering_service import ClusteringService, summarize_trials
from src.application.services.llm_clustering_service import LLMClusteringService
from src.infrastructure.parsers.csv_parser import load_labeling, load_papers, write_labeling

logger = logging.getLogger(__name__)


class ClusterPapersUseCase:
    """
    Cluster a paper corpus, once per seed.

    Workflow:
    1. Load papers (and the reference labeling when given)
    2. Cluster with TFIDF + k-means or with a chat model
    3. Score every trial against the reference and average
    4. Optionally write one labeling CSV per trial
    """

    def __init__(
        self,
        clustering_service: ClusteringService,
        llm_clustering_service: Optional[Callable[[], LLMClusteringService]] = None,
    ):
        """
        Initialize use case.

        Args:
            clustering_service: TFIDF + k-means trials.
            llm_clustering_service: Factory for the chat-model clusterer,
                called only for the llm method.
        """
        self.clustering_service = clustering_service
        self.llm_clustering_service = llm_clustering_service

    def execute(self, config: ClusterRunConfig) -> TrialSummary:
        """
        Run the configured trials.

        Raises:
            IngestionError: If an input file is malformed.
            ValueError: If k is out of range or no chat backend is configured.
        """
        papers = load_papers(config.papers_path)
        reference = load_labeling(config.reference_path) if config.reference_path else None
        logger.info(
            f"Clustering {len(papers)} papers: method={config.method.value}, k={config.k}, "
            f"seeds={config.seeds}"
        )

        if config.method is ClusteringMethod.TFIDF:
            summary = self.clustering_service.run_trials(
                papers, config.fields, config.k, config.seeds, reference
            )
        else:
            if self.llm_clustering_service is None:
                raise ValueError("LLM clustering requested but no chat backend is configured")
            service = self.llm_clustering_service()
            trials = []
            for seed in config.seeds:
                outcome = service.llm_cluster(papers, config.k, seed)
                trials.append(
                    TrialResult(
                        seed=seed,
                        labeling=outcome.labeling,
                        repaired_papers=outcome.repaired_papers,
                    )
                )
            summary = summarize_trials(trials, reference)

        if config.labels_dir:
            labels_dir = Path(config.labels_dir)
            labels_dir.mkdir(parents=True, exist_ok=True)
            for trial in summary.trials:
                write_labeling(trial.labeling, labels_dir / f"labeling_seed{trial.seed}.csv")
            logger.info(f"Wrote {len(summary.trials)} labelings to {labels_dir}")

        return summary
