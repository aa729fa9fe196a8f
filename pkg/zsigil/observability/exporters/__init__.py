"""Experiment report exporters."""

from zsigil.observability.exporters.csv_exporter import CsvExporter
from zsigil.observability.exporters.summary_exporter import SummaryExporter

__all__ = ["CsvExporter", "SummaryExporter"]
