"""Unit tests for the instance CSV readers and writers."""

import numpy as np
import pytest

from src.domain.entities import Labeling, Schedule, SimilarityMatrix
from src.infrastructure.parsers.csv_parser import (
    IngestionError,
    InstanceCSVParser,
    labeling_to_csv,
    load_assignment,
    load_instance,
    load_labeling,
    load_papers,
    load_sessions,
    load_similarity_matrix,
    write_assignment,
    write_labeling,
    write_similarity_matrix,
)
from tests.conftest import make_instance


class TestLoadPapers:
    """Test suite for load_papers."""

    def test_quoted_comma_and_empty_abstract(self, write_csv):
        path = write_csv("papers.csv", 'id,title,abstract,duration\np1,"A study, part 2",,7\n')

        papers = load_papers(path)

        assert len(papers) == 1
        assert papers[0].id == "p1"
        assert papers[0].title == "A study, part 2"
        assert papers[0].abstract is None
        assert papers[0].duration == 7

    def test_ids_kept_as_text(self, write_csv):
        path = write_csv("papers.csv", "id,title,abstract,duration\n007,T,,5\n")
        assert load_papers(path)[0].id == "007"

    def test_duplicate_id_cites_second_row(self, write_csv):
        path = write_csv("papers.csv", "id,title,abstract,duration\np1,A,,5\np2,B,,5\np1,C,,5\n")

        with pytest.raises(IngestionError) as exc_info:
            load_papers(path)

        assert exc_info.value.row == 3
        assert "first seen at row 1" in str(exc_info.value)

    def test_header_only_gives_empty_list(self, write_csv):
        path = write_csv("papers.csv", "id,title,abstract,duration\n")
        assert load_papers(path) == []

    def test_bad_duration(self, write_csv):
        path = write_csv("papers.csv", "id,title,abstract,duration\np1,A,,seven\n")

        with pytest.raises(IngestionError, match="duration must be an integer"):
            load_papers(path)

    def test_missing_column(self, write_csv):
        path = write_csv("papers.csv", "id,title,duration\np1,A,5\n")

        with pytest.raises(IngestionError, match="Missing required columns: \\['abstract'\\]"):
            load_papers(path)

    def test_missing_file_names_path(self, tmp_path):
        missing = tmp_path / "nope.csv"

        with pytest.raises(IngestionError, match="nope.csv"):
            load_papers(missing)

    def test_utf8_titles(self, write_csv):
        path = write_csv("papers.csv", "id,title,abstract,duration\np1,Über Äpfel,,5\n")
        assert load_papers(path)[0].title == "Über Äpfel"


class TestLoadSessions:
    """Test suite for load_sessions."""

    def test_single_row(self, write_csv):
        path = write_csv("sessions.csv", "id,title,length\ns231,Testing,45\n")

        sessions = load_sessions(path)

        assert sessions[0].id == "s231"
        assert sessions[0].title == "Testing"
        assert sessions[0].length == 45

    def test_non_positive_length(self, write_csv):
        path = write_csv("sessions.csv", "id,title,length\ns1,Testing,0\n")

        with pytest.raises(IngestionError, match="row 1"):
            load_sessions(path)

    def test_file_order_kept(self, write_csv):
        rows = "".join(f"s{i},Title {i},{10 + i}\n" for i in (5, 3, 9, 1, 7))
        path = write_csv("sessions.csv", "id,title,length\n" + rows)

        assert [s.id for s in load_sessions(path)] == ["s5", "s3", "s9", "s1", "s7"]


class TestLoadInstance:
    """Test suite for load_instance."""

    def test_builds_instance(self, write_csv):
        papers = write_csv("papers.csv", "id,title,abstract,duration\np1,A,,5\np2,B,x,6\n")
        sessions = write_csv("sessions.csv", "id,title,length\ns1,S,20\n")

        instance = InstanceCSVParser().load_instance(papers, sessions)

        assert instance.n_papers == 2
        assert instance.total_capacity == 20

    def test_empty_papers_is_ingestion_error(self, write_csv):
        papers = write_csv("papers.csv", "id,title,abstract,duration\n")
        sessions = write_csv("sessions.csv", "id,title,length\ns1,S,20\n")

        with pytest.raises(IngestionError, match="at least one paper"):
            load_instance(papers, sessions)


class TestLabelingAndAssignmentFiles:
    """Test suite for labeling and assignment CSV files."""

    def test_labeling_written_and_read(self, tmp_path):
        labeling = Labeling({"p1": 0, "p,2": 1})
        path = tmp_path / "labels.csv"

        write_labeling(labeling, path)

        assert load_labeling(path) == labeling
        assert labeling_to_csv(labeling) == 'paper_id,cluster\np1,0\n"p,2",1\n'

    def test_labeling_quotes_embedded_quotes(self, tmp_path):
        labeling = Labeling({'say "hi"': 2, "plain": 0})
        path = tmp_path / "labels.csv"

        write_labeling(labeling, path)

        assert path.read_text(encoding="utf-8") == 'paper_id,cluster\n"say ""hi""",2\nplain,0\n'
        assert load_labeling(path) == labeling

    def test_negative_cluster_rejected(self, write_csv):
        path = write_csv("labels.csv", "paper_id,cluster\np1,-1\n")

        with pytest.raises(IngestionError, match="non-negative"):
            load_labeling(path)

    def test_assignment_written_and_read(self, tmp_path):
        schedule = Schedule({"p1": "s1", "p2": "s2"})
        path = tmp_path / "reference.csv"

        write_assignment(schedule, path)

        assert load_assignment(path) == schedule

    def test_assignment_paper_twice(self, write_csv):
        path = write_csv("reference.csv", "paper_id,session_id\np1,s1\np1,s2\n")

        with pytest.raises(IngestionError, match="assigned twice"):
            load_assignment(path)


class TestSimilarityMatrixFile:
    """Test suite for the square similarity CSV."""

    def test_reordered_to_instance_order(self, write_csv):
        instance = make_instance([5, 5, 5], [15])
        path = write_csv(
            "sim.csv",
            "paper_id,p2,p0,p1\np2,0,0.2,0.3\np0,0.2,0,0.5\np1,0.3,0.5,0\n",
        )

        sim = load_similarity_matrix(path, instance)

        assert sim[0, 1] == 0.5
        assert sim[0, 2] == 0.2
        assert sim[1, 2] == 0.3

    def test_missing_paper(self, write_csv):
        instance = make_instance([5, 5, 5], [15])
        path = write_csv("sim.csv", "paper_id,p0,p1\np0,0,1\np1,1,0\n")

        with pytest.raises(IngestionError, match="lacks papers: \\['p2'\\]"):
            load_similarity_matrix(path, instance)

    def test_written_matrix_reads_back(self, tmp_path):
        instance = make_instance([5, 5, 5], [15])
        values = np.array([[0.0, 0.25, 0.5], [0.25, 0.0, 1.0], [0.5, 1.0, 0.0]])
        path = tmp_path / "sim.csv"
        write_similarity_matrix(SimilarityMatrix(values), instance, path)

        assert np.array_equal(load_similarity_matrix(path, instance).values, values)
