"""
CSV Exporter
~~~~~~~~~~~~

Writes experiment rows as CSV. The header is taken from the first row.
"""

from __future__ import annotations

import csv
import sys
from typing import TextIO

from zsigil.observability.report import ReportRow

__all__ = ["CsvExporter"]


class CsvExporter:
    """
    Streams rows as CSV to a text stream (stdout by default).

    Rows with columns not in the header raise ValueError.
    """

    def __init__(self, stream: TextIO | None = None) -> None:
        self._stream = stream or sys.stdout
        self._writer: csv.DictWriter[str] | None = None

    def export(self, row: ReportRow) -> None:
        if self._writer is None:
            self._writer = csv.DictWriter(
                self._stream, fieldnames=list(row.columns), lineterminator="\n"
            )
            self._writer.writeheader()
        self._writer.writerow(row.columns)
        self._stream.flush()
