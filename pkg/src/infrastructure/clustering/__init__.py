"""Text models and clustering over paper text."""

from src.infrastructure.clustering.kmeans import kmeans, kmeans_init
from src.infrastructure.clustering.tfidf import TextFields, TfidfModel, build_tfidf, cosine

__all__ = [
    "TextFields",
    "TfidfModel",
    "build_tfidf",
    "cosine",
    "kmeans",
    "kmeans_init",
]
