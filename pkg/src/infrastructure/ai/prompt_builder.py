"""Prompt builders for zero-shot scheduling and title clustering."""

import logging
from pathlib import Path
from typing import Sequence

import numpy as np
import pandas as pd

from src.domain.entities import Instance, Paper

logger = logging.getLogger(__name__)

TEMPLATE_DIR = Path(__file__).parent / "templates"
SCHEDULE_TEMPLATE = "schedule_prompt_v1.txt"
CLUSTER_TEMPLATE = "cluster_prompt_v1.txt"

SESSIONS_PLACEHOLDER = "{sessions_df_string}"
PAPERS_PLACEHOLDER = "{papers_df_string}"


def load_template(name: str) -> str:
    """Read a versioned prompt template shipped with the package."""
    return (TEMPLATE_DIR / name).read_text(encoding="utf-8")


def shuffled(papers: Sequence[Paper], seed: int) -> list[Paper]:
    """Seeded uniform shuffle of the papers."""
    order = np.random.default_rng(seed).permutation(len(papers))
    return [papers[i] for i in order]


def _table(frame: pd.DataFrame) -> str:
    return frame.to_string(index=False, max_colwidth=None)


class SchedulePromptBuilder:
    """
    Fill the schedule and clustering templates.

    Papers are shuffled with the given seed so the model does not see the
    original program order; equal seeds give byte-identical prompts.
    """

    def __init__(
        self,
        schedule_template: str = SCHEDULE_TEMPLATE,
        cluster_template: str = CLUSTER_TEMPLATE,
    ):
        self.schedule_template = load_template(schedule_template)
        self.cluster_template = load_template(cluster_template)

    def sessions_table(self, instance: Instance) -> str:
        frame = pd.DataFrame(
            {
                "session": [session.id for session in instance.sessions],
                "title": [session.title for session in instance.sessions],
                "length": [session.length for session in instance.sessions],
            }
        )
        return _table(frame)

    def papers_table(self, papers: Sequence[Paper], seed: int, with_duration: bool = True) -> str:
        order = shuffled(papers, seed)
        columns: dict[str, list] = {"talk_title": [paper.title for paper in order]}
        if with_duration:
            columns["duration"] = [paper.duration for paper in order]
        return _table(pd.DataFrame(columns))

    def build_schedule_prompt(self, instance: Instance, seed: int) -> str:
        """
        Schedule prompt listing sessions (id, title, length) and shuffled
        papers (title, duration).
        """
        prompt = self.schedule_template.replace(SESSIONS_PLACEHOLDER, self.sessions_table(instance))
        prompt = prompt.replace(PAPERS_PLACEHOLDER, self.papers_table(instance.papers, seed))
        logger.debug(f"Built schedule prompt ({len(prompt)} chars, seed={seed})")
        return prompt

    def build_cluster_prompt(self, papers: Sequence[Paper], k: int, seed: int) -> str:
        """Clustering prompt over shuffled titles only, clusters 0..k-1."""
        if k < 1:
            raise ValueError(f"k must be at least 1, got {k}")
        prompt = (
            self.cluster_template.replace("{k}", str(k))
            .replace("{max_cluster}", str(k - 1))
            .replace(PAPERS_PLACEHOLDER, self.papers_table(papers, seed, with_duration=False))
        )
        logger.debug(f"Built cluster prompt ({len(prompt)} chars, k={k}, seed={seed})")
        return prompt


def build_schedule_prompt(instance: Instance, seed: int) -> str:
    """Schedule prompt from the default templates."""
    return SchedulePromptBuilder().build_schedule_prompt(instance, seed)
