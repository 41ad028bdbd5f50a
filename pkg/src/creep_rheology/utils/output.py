"""
Table serialization for creep-rheology.

CSV output is locale-independent: comma separated, LF line endings, a header
row and 17 significant digits per value, so identical runs give identical bytes.
"""

import csv
import io
import json
import logging
from typing import List, Optional, Sequence

import numpy as np
from pydantic import BaseModel, Field

from creep_rheology.utils.config import OutputFormat

logger = logging.getLogger(__name__)


class Table(BaseModel):
    """Column-oriented numeric table."""

    columns: List[str] = Field(..., min_length=1)
    rows: List[List[float]] = Field(default_factory=list)

    @classmethod
    def from_columns(cls, names: Sequence[str], values: Sequence[Sequence[float]]) -> "Table":
        """Build a table from equally long column arrays."""
        matrix = np.column_stack([np.asarray(v, dtype=float) for v in values])
        return cls(columns=list(names), rows=matrix.tolist())

    def column(self, name: str) -> List[float]:
        index = self.columns.index(name)
        return [row[index] for row in self.rows]


def format_value(value: float) -> str:
    """Shortest stable rendering with 17 significant digits; -0 prints as 0."""
    return format(float(value) + 0.0, ".17g")


def render_csv(table: Table) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([format_value(value) for value in row])
    return buffer.getvalue()


def render_json(table: Table) -> str:
    payload = {
        "columns": table.columns,
        "rows": [[float(value) + 0.0 for value in row] for row in table.rows],
    }
    return json.dumps(payload, indent=2) + "\n"


def render_table(table: Table, fmt: OutputFormat) -> str:
    """Serialize a table in the requested format."""
    if fmt == OutputFormat.JSON:
        return render_json(table)
    return render_csv(table)


def write_table(table: Table, fmt: OutputFormat, path: Optional[str]) -> str:
    """
    Serialize a table and write it to ``path`` when given.

    Args:
        table: Table to write.
        fmt: Output format.
        path: Destination file, or None to only return the text.

    Returns:
        str: The serialized table.

    Raises:
        OSError: If the file cannot be written.
    """
    text = render_table(table, fmt)
    if path:
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(text)
        logger.info(f"Wrote {len(table.rows)} rows to {path}")
    return text
