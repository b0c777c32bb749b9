"""TFIDF bag-of-words model over paper titles (and abstracts)."""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np
from scipy import sparse
from sklearn.feature_extraction.text import TfidfVectorizer

from src.domain.entities import Paper

logger = logging.getLogger(__name__)

# Lowercase maximal alphanumeric runs; underscores split tokens.
TOKEN_PATTERN = r"(?u)[^\W_]+"


class TextFields(str, Enum):
    """Which paper text feeds the model."""

    TITLE = "title"
    TITLE_AND_ABSTRACT = "title-abstract"


@dataclass(frozen=True, eq=False)
class TfidfModel:
    """
    Fitted TFIDF model.

    Attributes:
        vocabulary: Token to column index.
        idf: Inverse document frequency per column, ln((1+N)/(1+df)) + 1.
        documents: CSR matrix, one L2-normalized row per paper (zero rows
            for papers without tokens).
    """

    vocabulary: dict[str, int]
    idf: np.ndarray
    documents: sparse.csr_matrix

    @property
    def n_documents(self) -> int:
        return int(self.documents.shape[0])

    @property
    def nonzero_documents(self) -> int:
        """Number of papers with at least one token."""
        return int(np.count_nonzero(self.documents.getnnz(axis=1)))

    def idf_of(self, token: str) -> float:
        return float(self.idf[self.vocabulary[token]])


def paper_texts(papers: Sequence[Paper], fields: TextFields) -> list[str]:
    if TextFields(fields) is TextFields.TITLE:
        return [paper.title for paper in papers]
    return [paper.text for paper in papers]


def build_tfidf(papers: Sequence[Paper], fields: TextFields = TextFields.TITLE) -> TfidfModel:
    """
    Fit a smoothed-idf, raw-tf, L2-normalized TFIDF model.

    Args:
        papers: Papers to model (non-empty).
        fields: Title only, or title and abstract.

    Returns:
        TfidfModel; papers without tokens get zero vectors.
    """
    if not papers:
        raise ValueError("build_tfidf needs at least one paper")

    texts = paper_texts(papers, fields)
    vectorizer = TfidfVectorizer(
        lowercase=True,
        token_pattern=TOKEN_PATTERN,
        smooth_idf=True,
        sublinear_tf=False,
        norm="l2",
    )
    try:
        documents = vectorizer.fit_transform(texts).tocsr()
    except ValueError:
        # scikit-learn refuses a corpus with no tokens at all
        logger.warning("No tokens in any paper text; all document vectors are zero")
        return TfidfModel(
            vocabulary={},
            idf=np.zeros(0),
            documents=sparse.csr_matrix((len(papers), 0)),
        )

    vocabulary = {token: int(index) for token, index in vectorizer.vocabulary_.items()}
    logger.info(
        f"Built TFIDF model ({TextFields(fields).value}): {len(papers)} papers, "
        f"{len(vocabulary)} tokens"
    )
    return TfidfModel(vocabulary=vocabulary, idf=np.asarray(vectorizer.idf_), documents=documents)


def cosine(model: TfidfModel, i: int, j: int) -> float:
    """
    Cosine similarity of papers i and j, in [0, 1].

    Raises:
        IndexError: If i or j is out of range.
    """
    n = model.n_documents
    for index in (i, j):
        if not 0 <= index < n:
            raise IndexError(f"Paper index {index} out of range for {n} documents")

    value = model.documents[i].multiply(model.documents[j]).sum()
    return float(min(1.0, max(0.0, value)))
