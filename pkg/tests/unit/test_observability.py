"""Tests for metrics, the report log and exporters."""

import io
import logging

from zsigil.observability.exporters import CsvExporter, SummaryExporter
from zsigil.observability.metrics import MetricsCollector, SigilMetrics
from zsigil.observability.report import ReportLog, ReportRow


class _FailingExporter:
    def export(self, row):
        raise RuntimeError("exporter down")


class _ListExporter:
    def __init__(self):
        self.rows = []

    def export(self, row):
        self.rows.append(row)


class TestMetricsCollector:
    """Tests for counters."""

    def test_increment_and_snapshot(self):
        metrics = MetricsCollector()
        metrics.increment("keys_generated")
        metrics.increment("blocks_encrypted", 18)
        snapshot = metrics.snapshot()
        assert snapshot.keys_generated == 1
        assert snapshot.blocks_encrypted == 18
        assert snapshot.blocks_decrypted == 0

    def test_unknown_counter_ignored(self):
        metrics = MetricsCollector()
        metrics.increment("not_a_counter", 3)
        assert metrics.snapshot() == SigilMetrics()

    def test_reset(self):
        metrics = MetricsCollector()
        metrics.increment("oracle_queries", 100)
        metrics.reset()
        assert metrics.snapshot().oracle_queries == 0

    def test_text_rendering(self):
        text = SigilMetrics(keys_generated=2).to_text()
        assert "zsigil_keys_generated 2\n" in text
        assert "zsigil_search_trials 0\n" in text


class TestReportLog:
    """Tests for the experiment row log."""

    def test_rows_forwarded(self):
        log = ReportLog()
        sink = _ListExporter()
        log.add_exporter(sink)
        log.write(ReportRow("grover", {"n": 1024}))
        log.write(ReportRow("depth", {"blocks": 64}))
        assert len(log) == 2
        assert [r.experiment for r in sink.rows] == ["grover", "depth"]
        assert log.rows("depth")[0]["blocks"] == 64

    def test_failing_exporter_is_skipped(self, caplog):
        log = ReportLog()
        sink = _ListExporter()
        log.add_exporter(_FailingExporter())
        log.add_exporter(sink)
        with caplog.at_level(logging.WARNING):
            log.write(ReportRow("grover", {"n": 8}))
        assert len(sink.rows) == 1
        assert len(log) == 1
        assert "exporter down" in caplog.text

    def test_row_to_dict(self):
        row = ReportRow("ratio", {"blocks": 4, "trials": 2})
        assert row.to_dict() == {"experiment": "ratio", "blocks": 4, "trials": 2}


class TestExporters:
    """Tests for CSV and summary output."""

    def test_csv_header_once(self):
        stream = io.StringIO()
        exporter = CsvExporter(stream)
        exporter.export(ReportRow("exhaustive", {"S": 16, "trials": 5}))
        exporter.export(ReportRow("exhaustive", {"S": 256, "trials": 5}))
        assert stream.getvalue() == "S,trials\n16,5\n256,5\n"

    def test_summary(self):
        stream = io.StringIO()
        SummaryExporter(stream).export(
            ReportRow("grover", {"n": 1024, "log10_bound": 154.12707604})
        )
        assert stream.getvalue() == "[grover]\n  n: 1024\n  log10_bound: 154.127\n"
