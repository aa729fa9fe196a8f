"""
Sigil: Main Facade
~~~~~~~~~~~~~~~~~~

The primary entry point for Z-Sigil. Bundles a configuration, the torus
model and the observability subsystems, and exposes key generation,
encryption, decryption and the attack experiments.
"""

from __future__ import annotations

import logging
from typing import Any

import numpy as np

from zsigil.analytic.chain import derive_chain
from zsigil.attack.cost_model import (
    SearchSpaceModel,
    cosmological_margin,
    grover_queries,
)
from zsigil.attack.exhaustive import run_trials
from zsigil.attack.ratio import ratio_attack
from zsigil.attack.serial import verify_serial_dependency
from zsigil.config.loader import load_config, load_config_from_dict
from zsigil.config.schema import SigilConfig
from zsigil.exceptions import IntegrityError
from zsigil.geometry.fiber import SEED_BYTES
from zsigil.geometry.manifold import TorusModel
from zsigil.observability.metrics import MetricsCollector, SigilMetrics
from zsigil.observability.report import ReportLog, ReportRow, RowExporter
from zsigil.scheme.cipher import CiphertextMessage, decrypt, encrypt, message_chain
from zsigil.scheme.keys import KeyPair, PublicKey, keygen

__all__ = ["Sigil", "random_text"]

logger = logging.getLogger(__name__)

# Printable BMP code points below the surrogate range.
_TEXT_RANGE = (0x20, 0xD800)


def random_text(length: int, rng: np.random.Generator) -> str:
    """A random string of ``length`` BMP characters, one UTF-16 unit each."""
    return "".join(map(chr, rng.integers(*_TEXT_RANGE, size=length).tolist()))


class Sigil:
    """
    Main Z-Sigil class: entry point for keys, messages and experiments.

    Every scheme call updates the shared metrics; every experiment writes
    one row to the report log, which forwards it to registered exporters.
    """

    def __init__(self, config: SigilConfig | None = None) -> None:
        self._config = config or SigilConfig()
        self._model = TorusModel.from_config(self._config.manifold)
        self._metrics = MetricsCollector()
        self._report = ReportLog()

    # ── Properties ─────────────────────────────────────────────────

    @property
    def version(self) -> str:
        """Return the Z-Sigil version string."""
        from zsigil import __version__

        return __version__

    @property
    def config(self) -> SigilConfig:
        return self._config

    @property
    def model(self) -> TorusModel:
        return self._model

    @property
    def metrics(self) -> MetricsCollector:
        return self._metrics

    @property
    def report(self) -> ReportLog:
        return self._report

    # ── Class Methods (constructors) ──────────────────────────────

    @classmethod
    def from_config(cls, path: str) -> Sigil:
        """
        Create a Sigil from a YAML config file.

        Args:
            path: Path to sigil_config.yaml.
        """
        return cls(config=load_config(path))

    @classmethod
    def default(cls, **overrides: Any) -> Sigil:
        """
        Create a Sigil with default settings.

        Keyword overrides are merged section by section, e.g.
        ``Sigil.default(manifold={"dimension": 2})``.
        """
        return cls(config=load_config_from_dict(overrides))

    # ── Scheme ─────────────────────────────────────────────────────

    def keygen(
        self, max_blocks: int | None = None, seed: bytes | None = None
    ) -> KeyPair:
        """Generate a key pair; ``max_blocks`` defaults to the configured capacity."""
        pair = keygen(
            self._model,
            max_blocks or self._config.scheme.max_blocks,
            secret_seed=seed,
            config=self._config,
        )
        self._metrics.increment("keys_generated")
        return pair

    def public_key(self, pair: KeyPair) -> PublicKey:
        return pair.public

    def encrypt(
        self, pub: PublicKey, text: str, message_seed: bytes | None = None
    ) -> CiphertextMessage:
        ct = encrypt(pub, text, message_seed=message_seed, config=self._config.analytic)
        self._metrics.increment("blocks_encrypted", ct.count)
        return ct

    def decrypt(self, priv: KeyPair, ct: CiphertextMessage) -> str:
        try:
            text = decrypt(priv, ct)
        except IntegrityError:
            self._metrics.increment("integrity_failures")
            raise
        self._metrics.increment("blocks_decrypted", ct.count)
        return text

    def get_metrics(self) -> SigilMetrics:
        return self._metrics.snapshot()

    def add_exporter(self, exporter: RowExporter) -> None:
        """Add a report exporter (anything with ``export(ReportRow)``)."""
        self._report.add_exporter(exporter)

    # ── Attack Experiments ────────────────────────────────────────

    def _emit(self, experiment: str, columns: dict[str, Any]) -> ReportRow:
        row = ReportRow(experiment, columns)
        self._report.write(row)
        return row

    def grover_report(self, bits: int, alpha: float = 1.0) -> ReportRow:
        """Grover query and gate cost for S = 2^(alpha bits)."""
        estimate = grover_queries(
            SearchSpaceModel(n=bits, alpha=alpha), self._config.attack.gate_degree
        )
        margin = cosmological_margin(estimate.lower_bound_log2)
        return self._emit(
            "grover",
            {
                "n": bits,
                "alpha": alpha,
                "log2_S": estimate.model.log2_size,
                "lower_bound_log2": estimate.lower_bound_log2,
                "log10_bound": margin.log10_bound,
                "log2_queries": estimate.log2_queries,
                "log10_queries": estimate.log10_queries,
                "gate_degree": estimate.gate_degree,
                "log2_gate_cost": estimate.log2_gate_cost,
                "decades_above_1e120": margin.above_low,
                "decades_above_1e122": margin.above_high,
            },
        )

    def exhaustive_report(
        self, levels: int, dim: int, trials: int, seed: int | None = None
    ) -> ReportRow:
        """Planted-key exhaustive search statistics on a q^r grid."""
        stats = run_trials(
            levels, dim, trials, seed=seed, config=self._config, metrics=self._metrics
        )
        return self._emit("exhaustive", stats.as_row())

    def ratio_report(
        self, blocks: int, trials: int, seed: int | None = None
    ) -> ReportRow:
        """
        Ratio attack against honest ciphertexts, once with the public chain
        and once with a chain from a wrong seed.
        """
        rng = np.random.default_rng(seed)
        pair = self.keygen(blocks, seed=rng.bytes(SEED_BYTES))
        public_hits = withheld_hits = 0
        withheld_blocks = 0
        for _ in range(trials):
            text = random_text(blocks, rng)
            ct = self.encrypt(pair.public, text, rng.bytes(SEED_BYTES))
            public_chain = message_chain(ct, self._config.analytic)
            honest = ratio_attack(pair.public, ct, public_chain)
            guessed = derive_chain(rng.bytes(SEED_BYTES), blocks, self._config.analytic)
            withheld = ratio_attack(pair.public, ct, guessed)
            public_hits += honest.text is not None
            withheld_hits += withheld.text is not None
            withheld_blocks += withheld.recovered
        return self._emit(
            "ratio",
            {
                "blocks": blocks,
                "trials": trials,
                "public_chain_recovery": public_hits / trials,
                "withheld_chain_recovery": withheld_hits / trials,
                "withheld_block_rate": withheld_blocks / (blocks * trials),
            },
        )

    def depth_report(
        self, blocks: int, trials: int = 10, seed: int | None = None
    ) -> ReportRow:
        """Serialization depth of a ``blocks``-block message, plus shuffled chains."""
        rng = np.random.default_rng(seed)
        pair = self.keygen(blocks, seed=rng.bytes(SEED_BYTES))
        text = random_text(blocks, rng)
        ct = self.encrypt(pair.public, text, rng.bytes(SEED_BYTES))
        report = verify_serial_dependency(
            pair, ct, trials=trials if blocks > 1 else 0, seed=seed
        )
        return self._emit(
            "depth",
            {
                "blocks": blocks,
                "depth": report.depth,
                "trials": report.trials,
                "min_rejected": report.min_rejected,
                "rejection_rate": report.rejection_rate,
            },
        )

    def __repr__(self) -> str:
        return f"<Sigil r={self._model.r} version={self.version}>"
