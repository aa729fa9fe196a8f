"""
Ratio Attack
~~~~~~~~~~~~

With e_i public and the chain recomputable from the header seed,
c_i = m_i N_{i-1} e_i gives m_i = c_ij / (N_{i-1} e_ij) for every
component j, without any private key. This module recovers plaintexts
that way and reports how many blocks pass the rounding check.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from zsigil.analytic.chain import ChainFactor
from zsigil.codec import MAX_BLOCK, decode_blocks
from zsigil.exceptions import DimensionMismatchError, MalformedPlaintextError
from zsigil.scheme.cipher import CiphertextMessage
from zsigil.scheme.keys import PublicKey

__all__ = ["RatioAttackReport", "ratio_attack"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RatioAttackReport:
    """
    Outcome of a ratio attack.

    Attributes:
        blocks: Recovered block per position, None where the check failed.
        estimates: Median ratio per block before rounding.
        text: The recovered plaintext when every block recovers and decodes.
    """

    blocks: tuple[int | None, ...]
    estimates: tuple[float, ...]
    text: str | None

    @property
    def total(self) -> int:
        return len(self.blocks)

    @property
    def recovered(self) -> int:
        return sum(b is not None for b in self.blocks)

    @property
    def recovery_rate(self) -> float:
        return self.recovered / self.total if self.total else 1.0


def ratio_attack(
    pub: PublicKey,
    ct: CiphertextMessage,
    chain: Sequence[ChainFactor],
    tolerance: float = 1e-3,
) -> RatioAttackReport:
    """
    Recover m_i as the median over j of c_ij / (N_{i-1} e_ij), rounded.

    A block counts as recovered when the median is within ``tolerance`` of
    an integer in the block range.
    """
    if ct.r != pub.r:
        raise DimensionMismatchError(
            f"Ciphertext dimension {ct.r} does not match key dimension {pub.r}"
        )
    count = ct.count
    if count > pub.max_blocks or len(chain) < count:
        raise DimensionMismatchError(
            f"Need {count} public keys and chain factors, have "
            f"{pub.max_blocks} and {len(chain)}"
        )

    values = np.array([f.value for f in chain[:count]], dtype=np.float64)
    ratios = ct.blocks / (values[:, None] * pub.keys[:count])
    estimates = np.median(ratios, axis=1) if count else np.empty(0)
    rounded = np.round(estimates)
    ok = (
        (np.abs(estimates - rounded) < tolerance)
        & (rounded >= 1)
        & (rounded <= MAX_BLOCK)
    )
    blocks = tuple(
        int(m) if good else None for m, good in zip(rounded, ok, strict=True)
    )

    text: str | None = None
    if all(b is not None for b in blocks):
        try:
            text = decode_blocks([b for b in blocks if b is not None])
        except MalformedPlaintextError:
            text = None

    report = RatioAttackReport(
        blocks=blocks,
        estimates=tuple(float(x) for x in estimates),
        text=text,
    )
    logger.info(
        "Ratio attack recovered %d/%d blocks", report.recovered, report.total
    )
    return report
