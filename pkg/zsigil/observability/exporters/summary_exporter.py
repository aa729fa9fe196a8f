"""
Summary Exporter
~~~~~~~~~~~~~~~~

Writes a plain-text ``key: value`` block per experiment row.
"""

from __future__ import annotations

import sys
from typing import TextIO

from zsigil.observability.report import ReportRow

__all__ = ["SummaryExporter"]


def _format(value: object) -> str:
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


class SummaryExporter:
    """Human-readable experiment summary, stderr by default."""

    def __init__(self, stream: TextIO | None = None) -> None:
        self._stream = stream or sys.stderr

    def export(self, row: ReportRow) -> None:
        lines = [f"[{row.experiment}]"]
        lines.extend(f"  {k}: {_format(v)}" for k, v in row.columns.items())
        self._stream.write("\n".join(lines) + "\n")
        self._stream.flush()
