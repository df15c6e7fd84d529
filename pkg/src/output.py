"""
Row serialization for the command line.

csv, tsv and jsonl stream one row per call; the table format collects rows
and renders them with rich when closed. Rationals are written as "num/den".
"""

import csv
import json
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, TextIO

from rich.console import Console
from rich.table import Table

FORMATS = ("csv", "tsv", "jsonl", "table")


def render_value(value: Any) -> Any:
    """JSON-compatible value: rationals become "num/den" strings"""
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, (list, tuple)):
        return [render_value(item) for item in value]
    return value


def render_cell(value: Any) -> str:
    """Text cell for csv, tsv and table output"""
    value = render_value(value)
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return " ".join(render_cell(item) for item in value)
    return str(value)


class RowWriter:
    """Writes rows with a fixed column order to a text stream"""

    def __init__(self, fmt: str, columns: Sequence[str], stream: TextIO, title: Optional[str] = None) -> None:
        if fmt not in FORMATS:
            raise ValueError(f"unknown output format {fmt!r}")
        self.fmt = fmt
        self.columns = list(columns)
        self.stream = stream
        self.title = title
        self._pending: List[Dict[str, Any]] = []
        self._csv: Optional[Any] = None

        if fmt in ("csv", "tsv"):
            delimiter = "," if fmt == "csv" else "\t"
            self._csv = csv.writer(stream, delimiter=delimiter, lineterminator="\n")
            self._csv.writerow(self.columns)

    def write(self, row: Dict[str, Any]) -> None:
        unknown = set(row) - set(self.columns)
        if unknown:
            raise KeyError(f"columns {sorted(unknown)} are not part of this output")

        if self.fmt == "jsonl":
            ordered = {column: render_value(row.get(column)) for column in self.columns}
            self.stream.write(json.dumps(ordered, ensure_ascii=False) + "\n")
            self.stream.flush()
        elif self._csv is not None:
            self._csv.writerow([render_cell(row.get(column)) for column in self.columns])
            self.stream.flush()
        else:
            self._pending.append(row)

    def close(self) -> None:
        if self.fmt != "table":
            return
        table = Table(title=self.title)
        for column in self.columns:
            table.add_column(column, style="cyan" if column == self.columns[0] else None)
        for row in self._pending:
            table.add_row(*(render_cell(row.get(column)) for column in self.columns))
        Console(file=self.stream, width=200).print(table)
        self._pending.clear()

    def __enter__(self) -> "RowWriter":
        return self

    def __exit__(self, *exc_info: object) -> None:
        self.close()
