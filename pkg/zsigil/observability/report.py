"""
Experiment Report Log
~~~~~~~~~~~~~~~~~~~~~

In-memory log of experiment result rows, forwarded to exporters.
"""

from __future__ import annotations

import logging
import threading
from dataclasses import dataclass, field
from typing import Any, Protocol

__all__ = ["ReportRow", "ReportLog", "RowExporter"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReportRow:
    """
    One result row of an attack experiment.

    Attributes:
        experiment: Experiment name (``grover``, ``exhaustive``, ...).
        columns: Ordered column name to value mapping.
    """

    experiment: str
    columns: dict[str, Any] = field(default_factory=dict)

    def __getitem__(self, key: str) -> Any:
        return self.columns[key]

    def to_dict(self) -> dict[str, Any]:
        return {"experiment": self.experiment, **self.columns}


class RowExporter(Protocol):
    def export(self, row: ReportRow) -> None: ...


class ReportLog:
    """
    Collects experiment rows and forwards each to the registered exporters.

    An exporter that raises is logged and skipped; the row is still kept.
    """

    def __init__(self) -> None:
        self._rows: list[ReportRow] = []
        self._lock = threading.RLock()
        self._exporters: list[RowExporter] = []

    def add_exporter(self, exporter: RowExporter) -> None:
        """Add an exporter to receive rows."""
        self._exporters.append(exporter)

    def write(self, row: ReportRow) -> None:
        """Record a row and forward it to exporters."""
        with self._lock:
            self._rows.append(row)

        for exporter in self._exporters:
            try:
                exporter.export(row)
            except Exception as exc:
                logger.warning(
                    "Exporter %s failed: %s",
                    type(exporter).__name__,
                    exc,
                )

    def rows(self, experiment: str | None = None) -> list[ReportRow]:
        """All rows, optionally restricted to one experiment."""
        with self._lock:
            return [
                r
                for r in self._rows
                if experiment is None or r.experiment == experiment
            ]

    def __len__(self) -> int:
        with self._lock:
            return len(self._rows)
