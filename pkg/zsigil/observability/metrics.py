"""
Metrics
~~~~~~~

Counters for key generation, encryption, decryption and attack experiments.
"""

from __future__ import annotations

import threading
from dataclasses import asdict, dataclass

__all__ = ["MetricsCollector", "SigilMetrics"]


@dataclass(frozen=True)
class SigilMetrics:
    """Point-in-time snapshot of the scheme and attack counters."""

    keys_generated: int = 0
    blocks_encrypted: int = 0
    blocks_decrypted: int = 0
    integrity_failures: int = 0
    oracle_queries: int = 0
    search_trials: int = 0

    def to_dict(self) -> dict[str, int]:
        return asdict(self)

    def to_text(self) -> str:
        """Render as ``zsigil_<name> <value>`` lines."""
        return "\n".join(f"zsigil_{k} {v}" for k, v in self.to_dict().items()) + "\n"


class MetricsCollector:
    """
    Collects scheme and attack counters.

    Thread-safe; exhaustive-search workers share one collector.
    """

    def __init__(self) -> None:
        self._counters: dict[str, int] = dict.fromkeys(SigilMetrics().to_dict(), 0)
        self._lock = threading.RLock()

    def increment(self, name: str, amount: int = 1) -> None:
        """Increment a counter; unknown names are ignored."""
        with self._lock:
            if name in self._counters:
                self._counters[name] += amount

    def snapshot(self) -> SigilMetrics:
        """Export as a SigilMetrics dataclass."""
        with self._lock:
            return SigilMetrics(**self._counters)

    def reset(self) -> None:
        """Reset all counters."""
        with self._lock:
            for key in self._counters:
                self._counters[key] = 0
