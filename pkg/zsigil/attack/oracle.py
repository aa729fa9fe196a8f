"""
Marking Oracle
~~~~~~~~~~~~~~

Yes/no predicate identifying the private key d_i of one block: a
candidate is marked iff it satisfies the identity law with the public
key and decrypts the block to a value within the rounding margin of an
integer. The oracle exposes nothing beyond that bit.
"""

from __future__ import annotations

import logging
import threading
from dataclasses import dataclass

import numpy as np

from zsigil.exceptions import DimensionMismatchError
from zsigil.geometry.fiber import FiberOperation, normalized_trace, star
from zsigil.geometry.manifold import TangentVector
from zsigil.observability.metrics import MetricsCollector

__all__ = ["PublicBlock", "marking_oracle", "BatchOracle"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class PublicBlock:
    """The public view of one block: e_i, N_{i-1} and c_i."""

    public_key: np.ndarray
    chain_value: float
    ciphertext: np.ndarray

    def __post_init__(self) -> None:
        for name in ("public_key", "ciphertext"):
            arr = np.array(getattr(self, name), dtype=np.float64)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
        if self.public_key.shape != self.ciphertext.shape:
            raise DimensionMismatchError(
                "Public key and ciphertext block differ in shape"
            )

    @property
    def r(self) -> int:
        return self.public_key.shape[0]


def marking_oracle(
    block: PublicBlock,
    candidate: TangentVector,
    secret_op: FiberOperation,
    tolerance: float = 1e-6,
    rounding_tolerance: float = 1e-3,
) -> bool:
    """
    True iff ||e (*) candidate - I||_inf < ``tolerance`` and the implied
    plaintext T((1/N)(c (*) candidate)) is within ``rounding_tolerance``
    of an integer.
    """
    if candidate.r != block.r:
        raise DimensionMismatchError(
            f"Candidate has {candidate.r} components, block has {block.r}"
        )
    base = secret_op.base
    candidate = TangentVector(base, candidate.components)
    identity_gap = star(secret_op, TangentVector(base, block.public_key), candidate)
    if not identity_gap.distance_to_identity() < tolerance:
        return False
    product = star(secret_op, TangentVector(base, block.ciphertext), candidate)
    value = normalized_trace(product.scaled(1.0 / block.chain_value))
    return bool(abs(value - round(value)) < rounding_tolerance)


class BatchOracle:
    """
    Vectorized marking oracle over many candidates at once.

    Evaluates the same predicate as ``marking_oracle`` for a (B, r) array
    of candidate components and counts every candidate as one query.
    """

    def __init__(
        self,
        block: PublicBlock,
        secret_op: FiberOperation,
        tolerance: float = 1e-6,
        rounding_tolerance: float = 1e-3,
        metrics: MetricsCollector | None = None,
    ) -> None:
        if block.r != secret_op.r:
            raise DimensionMismatchError(
                f"Block has {block.r} components, operation acts on {secret_op.r}"
            )
        self._block = block
        self._op = secret_op
        self._tolerance = tolerance
        self._rounding = rounding_tolerance
        self._metrics = metrics
        self._queries = 0
        self._lock = threading.Lock()

    @property
    def queries(self) -> int:
        return self._queries

    def __call__(self, candidates: np.ndarray) -> np.ndarray:
        cands = np.atleast_2d(np.asarray(candidates, dtype=np.float64))
        if cands.shape[1] != self._block.r:
            raise DimensionMismatchError(
                f"Candidates have {cands.shape[1]} components, "
                f"block has {self._block.r}"
            )
        op = self._op
        images = op.eta(cands)

        # e (*) x - I = C diag(e * eta(x) - 1) C^-1
        weights = self._block.public_key * images - 1.0
        gaps = (op.frame * weights[:, None, :]) @ op.frame_inverse
        identity_ok = np.max(np.abs(gaps), axis=(1, 2)) < self._tolerance

        # T of C diag(w) C^-1 is mean(w)
        traces = (self._block.ciphertext * images).mean(axis=1)
        values = traces / self._block.chain_value
        rounding_ok = np.abs(values - np.round(values)) < self._rounding

        with self._lock:
            self._queries += cands.shape[0]
        if self._metrics is not None:
            self._metrics.increment("oracle_queries", cands.shape[0])
        return identity_ok & rounding_ok
