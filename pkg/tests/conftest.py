"""Shared builders for scheduling test data."""

from typing import Sequence

import numpy as np
import pytest

from src.domain.entities import Instance, Paper, Session, SimilarityMatrix


def make_instance(
    durations: Sequence[int],
    lengths: Sequence[int],
    titles: Sequence[str] | None = None,
) -> Instance:
    """Papers p0..pN-1 and sessions s0..sM-1 with the given minutes."""
    titles = titles or [f"Paper number {i}" for i in range(len(durations))]
    papers = [Paper(id=f"p{i}", title=titles[i], duration=d) for i, d in enumerate(durations)]
    sessions = [Session(id=f"s{j}", title=f"Session {j}", length=l) for j, l in enumerate(lengths)]
    return Instance.build(papers, sessions)


def cluster_similarity(labels: Sequence[int]) -> SimilarityMatrix:
    """1 between distinct papers sharing a label, 0 otherwise."""
    array = np.asarray(labels)
    values = (array[:, None] == array[None, :]).astype(float)
    np.fill_diagonal(values, 0.0)
    return SimilarityMatrix(values)


def random_similarity(rng: np.random.Generator, n: int) -> SimilarityMatrix:
    return SimilarityMatrix.from_array(rng.random((n, n)))


@pytest.fixture
def four_paper_instance() -> Instance:
    """Four 7-minute papers, two 14-minute sessions."""
    return make_instance([7, 7, 7, 7], [14, 14])


@pytest.fixture
def two_cluster_sim() -> SimilarityMatrix:
    """Clusters {p0, p1} and {p2, p3}."""
    return cluster_similarity([0, 0, 1, 1])


@pytest.fixture
def write_csv(tmp_path):
    """Write text to a file under tmp_path and return its path."""

    def _write(name: str, text: str):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write


PAPERS_CSV = """id,title,abstract,duration
p1,Mining commit histories at scale,,10
p2,Mining issue trackers for bugs,,10
p3,Fuzzing compilers with grammars,,10
p4,Fuzzing network protocols,,10
"""

SESSIONS_CSV = """id,title,length
s1,Mining,20
s2,Fuzzing,20
"""

LABELING_CSV = """paper_id,cluster
p1,0
p2,0
p3,1
p4,1
"""

REFERENCE_CSV = """paper_id,session_id
p1,s1
p2,s1
p3,s2
p4,s2
"""


@pytest.fixture
def program_files(write_csv):
    """A four-paper program with labeling and reference schedule on disk."""
    return {
        "papers": write_csv("papers.csv", PAPERS_CSV),
        "sessions": write_csv("sessions.csv", SESSIONS_CSV),
        "labeling": write_csv("labeling.csv", LABELING_CSV),
        "reference": write_csv("reference.csv", REFERENCE_CSV),
    }
