"""
Serialization Depth
~~~~~~~~~~~~~~~~~~~

Measures the forced-sequential depth of blockwise decryption.

Under the scheme's contract block i consumes chain position i-1 and is
evaluated after block i-1, so the block-evaluation DAG is a path through
every block. ``verify_serial_dependency`` backs the structural claim with
an experiment: decrypting each block with some other chain position (a
derangement of the chain) must fail verification.
"""

from __future__ import annotations

import graphlib
import logging
from dataclasses import dataclass

import numpy as np

from zsigil.exceptions import AttackError, IntegrityError
from zsigil.scheme.cipher import CiphertextMessage, decrypt_block, message_chain
from zsigil.scheme.keys import KeyPair

__all__ = [
    "dependency_graph",
    "serial_depth",
    "derangement",
    "SerialReport",
    "verify_serial_dependency",
]

logger = logging.getLogger(__name__)

Node = tuple[str, int]


def dependency_graph(count: int) -> dict[Node, set[Node]]:
    """
    Predecessor map of the evaluation DAG for ``count`` blocks.

    Node ("chain", k) is chain position k; node ("block", i) is block i
    (1-based). Block i depends on chain position i-1 and on block i-1.
    """
    graph: dict[Node, set[Node]] = {}
    for i in range(1, count + 1):
        preds: set[Node] = {("chain", i - 1)}
        if i > 1:
            preds.add(("block", i - 1))
        graph[("block", i)] = preds
        graph[("chain", i - 1)] = set()
    return graph


def serial_depth(ct: CiphertextMessage) -> int:
    """Block evaluations on the longest dependency path of ``ct``."""
    graph = dependency_graph(ct.count)
    depth: dict[Node, int] = {}
    for node in graphlib.TopologicalSorter(graph).static_order():
        own = 1 if node[0] == "block" else 0
        depth[node] = own + max((depth[p] for p in graph[node]), default=0)
    return max(depth.values(), default=0)


def derangement(count: int, rng: np.random.Generator) -> np.ndarray:
    """A uniformly random permutation of range(count) without fixed points."""
    if count < 2:
        raise AttackError(f"No derangement of {count} element(s)")
    while True:
        perm = rng.permutation(count)
        if not np.any(perm == np.arange(count)):
            return perm


@dataclass(frozen=True)
class SerialReport:
    """
    Result of the shuffled-chain experiment.

    Attributes:
        depth: serial_depth of the ciphertext.
        blocks: D.
        rejected: Blocks rejected by verification, per trial.
    """

    depth: int
    blocks: int
    rejected: tuple[int, ...]

    @property
    def trials(self) -> int:
        return len(self.rejected)

    @property
    def min_rejected(self) -> int:
        return min(self.rejected, default=0)

    @property
    def rejection_rate(self) -> float:
        total = self.blocks * self.trials
        return sum(self.rejected) / total if total else 0.0


def verify_serial_dependency(
    priv: KeyPair,
    ct: CiphertextMessage,
    trials: int = 10,
    seed: int | None = None,
) -> SerialReport:
    """
    Decrypt every block with a deranged chain and count rejected blocks.

    Raises:
        AttackError: If ``trials`` > 0 and the ciphertext has fewer than two
            blocks.
    """
    chain = message_chain(ct, priv.config.analytic)
    tolerance = priv.config.scheme.rounding_tolerance
    rng = np.random.default_rng(seed)

    rejected: list[int] = []
    for _ in range(trials):
        perm = derangement(ct.count, rng)
        failures = 0
        for i in range(ct.count):
            try:
                decrypt_block(
                    priv.block(i), ct.blocks[i], chain[perm[i]].value, tolerance
                )
            except IntegrityError:
                failures += 1
        rejected.append(failures)

    report = SerialReport(
        depth=serial_depth(ct), blocks=ct.count, rejected=tuple(rejected)
    )
    logger.info(
        "Shuffled chain: depth %d, %d/%d blocks rejected at minimum over %d trials",
        report.depth,
        report.min_rejected,
        report.blocks,
        report.trials,
    )
    return report
