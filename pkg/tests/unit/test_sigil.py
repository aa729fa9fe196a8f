"""Tests for the Sigil facade."""

import math

import numpy as np
import pytest

from zsigil import Sigil
from zsigil.core import random_text
from zsigil.exceptions import ConfigValidationError, IntegrityError


class TestSigil:
    """Tests for construction and scheme calls."""

    def test_default(self, sigil):
        assert sigil.model.r == 6
        assert sigil.version == "0.1.0"
        assert "r=6" in repr(sigil)

    def test_default_overrides(self):
        sigil = Sigil.default(manifold={"dimension": 4}, attack={"workers": 1})
        assert sigil.model.r == 4
        assert sigil.config.attack.workers == 1

    def test_invalid_override(self):
        with pytest.raises(ConfigValidationError):
            Sigil.default(manifold={"dimension": 3})

    def test_from_config(self, tmp_path):
        path = tmp_path / "sigil_config.yaml"
        path.write_text("manifold:\n  dimension: 2\n")
        assert Sigil.from_config(str(path)).model.r == 2

    def test_metrics_track_calls(self, sigil, secret_seed, message_seed):
        pair = sigil.keygen(8, seed=secret_seed)
        ct = sigil.encrypt(sigil.public_key(pair), "Hello", message_seed)
        sigil.decrypt(pair, ct)
        with pytest.raises(IntegrityError):
            sigil.decrypt(pair, ct.with_blocks(np.zeros((5, 6))))
        metrics = sigil.get_metrics()
        assert metrics.keys_generated == 1
        assert metrics.blocks_encrypted == 5
        assert metrics.blocks_decrypted == 5
        assert metrics.integrity_failures == 1


class TestExperiments:
    """Tests for report rows produced by the experiments."""

    def test_grover_report(self, sigil):
        row = sigil.grover_report(1024)
        assert row["log10_bound"] == pytest.approx(154.127, abs=1e-3)
        assert row["decades_above_1e120"] == pytest.approx(34.127, abs=1e-3)
        assert row["log2_gate_cost"] > row["log2_queries"]
        log10_queries = row["log2_queries"] * math.log10(2.0)
        assert row["log10_queries"] == pytest.approx(log10_queries)
        assert sigil.report.rows("grover") == [row]

    def test_exhaustive_report(self, sigil):
        row = sigil.exhaustive_report(2, 4, 10, seed=1)
        assert row["S"] == 16
        assert row["trials"] == 10
        assert sigil.get_metrics().search_trials == 10

    def test_ratio_report(self, sigil):
        row = sigil.ratio_report(8, 3, seed=7)
        assert row["public_chain_recovery"] == 1.0
        assert row["withheld_chain_recovery"] == 0.0

    def test_depth_report(self, sigil):
        row = sigil.depth_report(16, trials=3, seed=7)
        assert row["depth"] == 16
        assert row["trials"] == 3
        assert row["min_rejected"] >= 15

    def test_depth_report_single_block(self, sigil):
        row = sigil.depth_report(1, seed=7)
        assert row["depth"] == 1
        assert row["trials"] == 0


class TestRandomText:
    """Tests for the experiment text generator."""

    def test_one_unit_per_character(self, rng):
        text = random_text(100, rng)
        assert len(text) == 100
        assert len(text.encode("utf-16-le")) == 200
