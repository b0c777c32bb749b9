"""Parser for `talk_title@cluster` clustering responses."""

import logging
from dataclasses import dataclass, field

from src.infrastructure.parsers.schedule_wire_format import (
    DELIMITER,
    RowDefect,
    extract_fenced_block,
    split_delimited_lines,
)

logger = logging.getLogger(__name__)

CLUSTER_HEADER = "talk_title@cluster"


@dataclass(frozen=True)
class ClusterRow:
    """One title with the cluster the model gave it."""

    talk_title: str
    cluster: int


@dataclass(frozen=True)
class ParsedClusterBlock:
    """Rows recovered from a clustering response."""

    rows: list[ClusterRow] = field(default_factory=list)
    defects: list[RowDefect] = field(default_factory=list)
    found_block: bool = True

    @property
    def is_usable(self) -> bool:
        return self.found_block and bool(self.rows)


class ClusterResponseParser:
    """
    Parse fenced `talk_title@cluster` blocks.

    Lines with the wrong field count or a non-integer cluster are skipped
    and reported as defects; range checks are left to the caller, which
    knows k.
    """

    def parse(self, response: str) -> ParsedClusterBlock:
        block = extract_fenced_block(response)
        if block is None:
            logger.warning("Clustering response contains no fenced block")
            logger.debug(f"Raw response: {response}")
            return ParsedClusterBlock(
                defects=[RowDefect(0, "", "no ``` fenced block found")],
                found_block=False,
            )

        split_rows, defects = split_delimited_lines(block, CLUSTER_HEADER, 2)
        rows: list[ClusterRow] = []
        for line_number, (title, cluster_text) in split_rows:
            try:
                cluster = int(cluster_text)
            except ValueError:
                defects.append(
                    RowDefect(
                        line_number,
                        DELIMITER.join([title, cluster_text]),
                        f"cluster is not an integer: '{cluster_text}'",
                    )
                )
                continue
            rows.append(ClusterRow(talk_title=title, cluster=cluster))

        if defects:
            logger.warning(f"Skipped {len(defects)} malformed clustering lines")
        return ParsedClusterBlock(rows=rows, defects=defects, found_block=True)
