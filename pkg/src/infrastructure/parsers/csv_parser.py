"""CSV readers and writers for papers, sessions, labelings and schedules."""

import logging
from pathlib import Path
from typing import Optional

import numpy as np
import pandas as pd

from src.domain.entities import Instance, Labeling, Paper, Schedule, Session, SimilarityMatrix
from src.domain.exceptions import SchedulingError

logger = logging.getLogger(__name__)

PAPER_COLUMNS = ["id", "title", "abstract", "duration"]
SESSION_COLUMNS = ["id", "title", "length"]
LABELING_COLUMNS = ["paper_id", "cluster"]
ASSIGNMENT_COLUMNS = ["paper_id", "session_id"]


class IngestionError(ValueError):
    """Raised when an input CSV cannot be turned into domain objects."""

    def __init__(self, message: str, path: Optional[Path] = None, row: Optional[int] = None):
        """
        Initialize ingestion error.

        Args:
            message: Human-readable error message.
            path: File being read.
            row: 1-based data row number (header excluded), if known.
        """
        location = ""
        if path is not None:
            location = f"{path}"
            if row is not None:
                location += f", row {row}"
            location += ": "
        super().__init__(f"{location}{message}")
        self.path = path
        self.row = row


class InstanceCSVParser:
    """
    Parser for the papers and sessions CSV files.

    Both files are UTF-8 with RFC-4180 quoting, so titles may contain commas.
    Every cell is read as text and converted explicitly, so ids like "007"
    survive unchanged.
    """

    def __init__(self, encoding: str = "utf-8"):
        self.encoding = encoding

    def load_papers(self, file_path: str | Path) -> list[Paper]:
        """
        Read papers from a CSV with header id,title,abstract,duration.

        Returns:
            One Paper per data row, in file order.

        Raises:
            IngestionError: Missing column, bad duration, empty title or duplicate id.
        """
        path = Path(file_path)
        df = self._read(path, PAPER_COLUMNS)

        papers: list[Paper] = []
        seen: dict[str, int] = {}
        for row_number, record in enumerate(df.to_dict("records"), start=1):
            paper_id = record["id"].strip()
            if paper_id in seen:
                raise IngestionError(
                    f"Duplicate paper id '{paper_id}' (first seen at row {seen[paper_id]})",
                    path,
                    row_number,
                )
            seen[paper_id] = row_number

            duration = _parse_int(record["duration"], "duration", path, row_number)
            abstract = record["abstract"].strip() or None
            try:
                papers.append(
                    Paper(id=paper_id, title=record["title"].strip(), duration=duration, abstract=abstract)
                )
            except SchedulingError as e:
                raise IngestionError(str(e), path, row_number) from e

        logger.info(f"Loaded {len(papers)} papers from {path}")
        discussions = sum(1 for paper in papers if paper.is_discussion)
        if discussions:
            logger.info(f"{discussions} 'Discussions and Q/A' items found in {path}")
        return papers

    def load_sessions(self, file_path: str | Path) -> list[Session]:
        """
        Read sessions from a CSV with header id,title,length.

        Raises:
            IngestionError: Missing column, non-positive length or duplicate id.
        """
        path = Path(file_path)
        df = self._read(path, SESSION_COLUMNS)

        sessions: list[Session] = []
        seen: dict[str, int] = {}
        for row_number, record in enumerate(df.to_dict("records"), start=1):
            session_id = record["id"].strip()
            if session_id in seen:
                raise IngestionError(
                    f"Duplicate session id '{session_id}' (first seen at row {seen[session_id]})",
                    path,
                    row_number,
                )
            seen[session_id] = row_number

            length = _parse_int(record["length"], "length", path, row_number)
            try:
                sessions.append(Session(id=session_id, title=record["title"].strip(), length=length))
            except SchedulingError as e:
                raise IngestionError(str(e), path, row_number) from e

        logger.info(f"Loaded {len(sessions)} sessions from {path}")
        return sessions

    def load_instance(self, papers_path: str | Path, sessions_path: str | Path) -> Instance:
        """Read both files and build an Instance."""
        papers = self.load_papers(papers_path)
        sessions = self.load_sessions(sessions_path)
        try:
            return Instance.build(papers, sessions)
        except SchedulingError as e:
            raise IngestionError(str(e)) from e

    def _read(self, path: Path, required_columns: list[str]) -> pd.DataFrame:
        """Read a CSV as text and check the header."""
        try:
            df = pd.read_csv(
                path,
                dtype=str,
                keep_default_na=False,
                encoding=self.encoding,
                skipinitialspace=False,
            )
        except FileNotFoundError as e:
            raise IngestionError("File not found", path) from e
        except pd.errors.EmptyDataError as e:
            raise IngestionError("File is empty (no header row)", path) from e
        except (pd.errors.ParserError, UnicodeDecodeError) as e:
            raise IngestionError(f"Malformed CSV: {e}", path) from e

        df.columns = [str(column).strip() for column in df.columns]
        missing = [column for column in required_columns if column not in df.columns]
        if missing:
            raise IngestionError(
                f"Missing required columns: {missing}. Available columns: {list(df.columns)}",
                path,
            )
        return df


def load_papers(file_path: str | Path) -> list[Paper]:
    """Read papers with the default parser."""
    return InstanceCSVParser().load_papers(file_path)


def load_sessions(file_path: str | Path) -> list[Session]:
    """Read sessions with the default parser."""
    return InstanceCSVParser().load_sessions(file_path)


def load_instance(papers_path: str | Path, sessions_path: str | Path) -> Instance:
    """Read papers and sessions with the default parser."""
    return InstanceCSVParser().load_instance(papers_path, sessions_path)


def load_labeling(file_path: str | Path) -> Labeling:
    """Read a paper_id,cluster CSV."""
    path = Path(file_path)
    df = InstanceCSVParser()._read(path, LABELING_COLUMNS)
    labels: dict[str, int] = {}
    for row_number, record in enumerate(df.to_dict("records"), start=1):
        paper_id = record["paper_id"].strip()
        if paper_id in labels:
            raise IngestionError(f"Duplicate paper id '{paper_id}'", path, row_number)
        cluster = _parse_int(record["cluster"], "cluster", path, row_number)
        if cluster < 0:
            raise IngestionError("cluster must be non-negative", path, row_number)
        labels[paper_id] = cluster
    return Labeling(labels)


def write_labeling(labeling: Labeling, file_path: str | Path) -> None:
    """Write a paper_id,cluster CSV."""
    _labeling_frame(labeling).to_csv(file_path, index=False, lineterminator="\n")


def labeling_to_csv(labeling: Labeling) -> str:
    """paper_id,cluster CSV text."""
    return _labeling_frame(labeling).to_csv(index=False, lineterminator="\n")


def _labeling_frame(labeling: Labeling) -> pd.DataFrame:
    return pd.DataFrame(
        [(paper_id, labeling.labels[paper_id]) for paper_id in labeling.paper_ids],
        columns=LABELING_COLUMNS,
    )


def load_assignment(file_path: str | Path) -> Schedule:
    """Read a paper_id,session_id CSV into a Schedule."""
    path = Path(file_path)
    df = InstanceCSVParser()._read(path, ASSIGNMENT_COLUMNS)
    assignment: dict[str, str] = {}
    for row_number, record in enumerate(df.to_dict("records"), start=1):
        paper_id = record["paper_id"].strip()
        if paper_id in assignment:
            raise IngestionError(f"Paper '{paper_id}' assigned twice", path, row_number)
        assignment[paper_id] = record["session_id"].strip()
    return Schedule(assignment)


def write_assignment(schedule: Schedule, file_path: str | Path) -> None:
    """Write a paper_id,session_id CSV."""
    frame = pd.DataFrame(
        list(schedule.assignment.items()),
        columns=ASSIGNMENT_COLUMNS,
    )
    frame.to_csv(file_path, index=False, lineterminator="\n")


def load_similarity_matrix(file_path: str | Path, instance: Instance) -> SimilarityMatrix:
    """
    Read a square similarity CSV (header paper_id,<id_1>,...,<id_N>).

    Rows and columns are reordered to instance paper order.
    """
    path = Path(file_path)
    try:
        df = pd.read_csv(path, index_col=0, dtype=str, keep_default_na=False)
    except (FileNotFoundError, pd.errors.EmptyDataError, pd.errors.ParserError) as e:
        raise IngestionError(f"Cannot read similarity matrix: {e}", path) from e

    df.index = [str(i).strip() for i in df.index]
    df.columns = [str(c).strip() for c in df.columns]
    ids = instance.paper_ids
    missing = sorted(set(ids) - set(df.index) | set(ids) - set(df.columns))
    if missing:
        raise IngestionError(f"Similarity matrix lacks papers: {missing}", path)

    try:
        values = df.loc[ids, ids].to_numpy(dtype=float)
        return SimilarityMatrix.from_array(values)
    except (ValueError, TypeError) as e:
        raise IngestionError(f"Invalid similarity matrix: {e}", path) from e


def write_similarity_matrix(sim: SimilarityMatrix, instance: Instance, file_path: str | Path) -> None:
    """Write a square similarity CSV in instance paper order."""
    sim.require_size(instance.n_papers)
    frame = pd.DataFrame(np.asarray(sim.values), index=instance.paper_ids, columns=instance.paper_ids)
    frame.index.name = "paper_id"
    frame.to_csv(file_path, lineterminator="\n")


def _parse_int(value: str, column: str, path: Path, row: int) -> int:
    text = str(value).strip()
    try:
        return int(text)
    except ValueError:
        raise IngestionError(f"{column} must be an integer, got '{text}'", path, row) from None
