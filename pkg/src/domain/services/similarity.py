"""Cluster-membership similarity."""

import numpy as np

from src.domain.entities import Instance, Labeling, SimilarityMatrix


def labeling_to_similarity(labeling: Labeling, instance: Instance) -> SimilarityMatrix:
    """
    Binary similarity: 1 for distinct papers sharing a label, 0 otherwise.

    Raises:
        MalformedLabelingError: If an instance paper has no label.
    """
    labels = np.asarray(labeling.values_for(instance.paper_ids))
    values = (labels[:, None] == labels[None, :]).astype(float)
    np.fill_diagonal(values, 0.0)
    return SimilarityMatrix(values)
