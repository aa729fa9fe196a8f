"""Z-Sigil observability: counters, experiment reports and exporters."""

from zsigil.observability.exporters import CsvExporter, SummaryExporter
from zsigil.observability.metrics import MetricsCollector, SigilMetrics
from zsigil.observability.report import ReportLog, ReportRow

__all__ = [
    "MetricsCollector",
    "SigilMetrics",
    "ReportLog",
    "ReportRow",
    "CsvExporter",
    "SummaryExporter",
]
