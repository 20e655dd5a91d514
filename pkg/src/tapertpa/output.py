"""Rectangular numeric result tables and their CSV serialization.

CSV format: one comma-joined header line, then one line per row with every
value in scientific notation at 17 significant digits (so files re-parse to
bit-identical floats), LF line endings, no trailing commas.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path


@dataclass
class ResultTable:
    columns: list[str]
    rows: list[list[float]] = field(default_factory=list)

    def __post_init__(self):
        if not self.columns:
            raise ValueError("table needs at least one column")
        for row in self.rows:
            self._check_row(row)

    def _check_row(self, row) -> None:
        if len(row) != len(self.columns):
            raise ValueError(
                f"row has {len(row)} values for {len(self.columns)} columns"
            )

    def append(self, row) -> None:
        row = [float(v) for v in row]
        self._check_row(row)
        self.rows.append(row)

    def column(self, name: str) -> list[float]:
        idx = self.columns.index(name)
        return [row[idx] for row in self.rows]


def format_value(v: float) -> str:
    return format(float(v), ".16e")


def write_csv(table: ResultTable, sink) -> None:
    """Write the table to a path or text file object."""
    if isinstance(sink, (str, Path)):
        with open(sink, "w", newline="") as fh:
            write_csv(table, fh)
        return
    sink.write(",".join(table.columns) + "\n")
    for row in table.rows:
        sink.write(",".join(format_value(v) for v in row) + "\n")


def read_csv(source) -> ResultTable:
    """Parse a CSV produced by write_csv (used for round-trip checks)."""
    if isinstance(source, (str, Path)):
        with open(source, "r", newline="") as fh:
            return read_csv(fh)
    lines = source.read().split("\n")
    if not lines or not lines[0]:
        raise ValueError("empty CSV input")
    table = ResultTable(lines[0].split(","))
    for line in lines[1:]:
        if line:
            table.append([float(tok) for tok in line.split(",")])
    return table
