"""Seeded k-means over TFIDF vectors."""

import logging
import warnings
from typing import Optional, Sequence

import numpy as np
from sklearn.cluster import KMeans, kmeans_plusplus
from sklearn.exceptions import ConvergenceWarning

from src.domain.entities import Labeling
from src.infrastructure.clustering.tfidf import TfidfModel

logger = logging.getLogger(__name__)

DEFAULT_MAX_ITER = 300


def _check_k(model: TfidfModel, k: int) -> None:
    usable = model.nonzero_documents
    if k < 1 or k > usable:
        raise ValueError(f"k must be between 1 and {usable} (papers with text), got {k}")


def kmeans_init(model: TfidfModel, k: int, seed: int) -> np.ndarray:
    """
    k-means++ initial centers drawn with the given seed.

    Returns:
        Dense (k, vocabulary size) array of initial centers.
    """
    _check_k(model, k)
    centers, _ = kmeans_plusplus(model.documents, n_clusters=k, random_state=seed)
    return np.asarray(centers.toarray() if hasattr(centers, "toarray") else centers)


def kmeans(
    model: TfidfModel,
    k: int,
    seed: int,
    paper_ids: Optional[Sequence[str]] = None,
    init: Optional[np.ndarray] = None,
    max_iter: int = DEFAULT_MAX_ITER,
) -> Labeling:
    """
    Cluster the document vectors into k groups.

    Squared-Euclidean Lloyd iterations on the unit-normalized vectors,
    starting from seeded k-means++ centers (or init when given), until the
    assignment stops changing or max_iter is reached. Empty clusters are
    refilled with points far from their centers.

    Args:
        model: Fitted TFIDF model.
        k: Number of clusters.
        seed: Seed for the initialization.
        paper_ids: Ids for the labeling keys; defaults to "0".."N-1".
        init: Explicit initial centers, shape (k, vocabulary size).
        max_iter: Iteration cap.

    Returns:
        Labeling with labels renumbered by first appearance.

    Raises:
        ValueError: If k is outside 1..(papers with text).
    """
    _check_k(model, k)
    if paper_ids is None:
        paper_ids = [str(i) for i in range(model.n_documents)]
    if len(paper_ids) != model.n_documents:
        raise ValueError("paper_ids length does not match the model")

    centers = kmeans_init(model, k, seed) if init is None else np.asarray(init, dtype=float)
    estimator = KMeans(
        n_clusters=k,
        init=centers,
        n_init=1,
        max_iter=max_iter,
        tol=0.0,
        random_state=seed,
        algorithm="lloyd",
    )
    with warnings.catch_warnings():
        # duplicate documents can leave fewer distinct clusters than k
        warnings.simplefilter("ignore", ConvergenceWarning)
        labels = estimator.fit_predict(model.documents)

    logger.debug(f"k-means k={k} seed={seed} converged in {estimator.n_iter_} iterations")
    return Labeling({paper_id: int(label) for paper_id, label in zip(paper_ids, labels)}).canonical()
