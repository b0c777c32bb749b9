"""Domain entities package."""

from src.domain.entities.instance import Instance
from src.domain.entities.paper import DISCUSSION_TITLE, Paper, Session
from src.domain.entities.schedule import Labeling, Schedule
from src.domain.entities.similarity_matrix import SimilarityMatrix

__all__ = [
    "Paper",
    "Session",
    "Instance",
    "Schedule",
    "Labeling",
    "SimilarityMatrix",
    "DISCUSSION_TITLE",
]
