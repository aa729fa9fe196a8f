"""
Serial Block Cipher
~~~~~~~~~~~~~~~~~~~

Blockwise encryption c_i = m_i * N_{i-1} * e_i and decryption

    m_i = T( (1 / N_{i-1}) (c_i (*)_{p_i} d_i) )

with the chain N_0 ... N_{D-1} derived from a public per-message seed.
Block i always consumes chain position i-1, and blocks are processed
strictly in index order.
"""

from __future__ import annotations

import logging
import math
import secrets
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from zsigil.analytic.chain import ChainFactor, derive_chain
from zsigil.codec import MAX_BLOCK, decode_blocks, encode_text
from zsigil.config.schema import AnalyticConfig
from zsigil.exceptions import (
    CapacityError,
    DimensionMismatchError,
    IntegrityError,
    MalformedPlaintextError,
    SchemeError,
)
from zsigil.geometry.fiber import SEED_BYTES, normalized_trace, star
from zsigil.geometry.manifold import TangentVector
from zsigil.scheme.keys import BlockSecret, KeyPair, PublicKey

__all__ = [
    "CIPHERTEXT_VERSION",
    "CiphertextHeader",
    "CiphertextMessage",
    "encrypt",
    "encrypt_block",
    "decrypt",
    "decrypt_block",
    "recover_value",
    "message_chain",
]

logger = logging.getLogger(__name__)

CIPHERTEXT_VERSION = 1


@dataclass(frozen=True)
class CiphertextHeader:
    """Format version, dimension r, block count D and the public message seed."""

    version: int
    r: int
    count: int
    message_seed: bytes

    def __post_init__(self) -> None:
        if self.version != CIPHERTEXT_VERSION:
            raise SchemeError(f"Unsupported ciphertext version {self.version}")
        if self.r < 2 or self.r % 2:
            raise SchemeError(
                f"Ciphertext dimension must be even and >= 2, got {self.r}"
            )
        if self.count < 0:
            raise SchemeError(f"Block count must be >= 0, got {self.count}")
        if len(self.message_seed) != SEED_BYTES:
            raise SchemeError(
                f"Message seeds are {SEED_BYTES} bytes, got {len(self.message_seed)}"
            )


@dataclass(frozen=True, eq=False)
class CiphertextMessage:
    """A header and the (D, r) table of ciphertext blocks c_i."""

    header: CiphertextHeader
    blocks: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.blocks, dtype=np.float64).reshape(-1, self.header.r)
        if arr.shape[0] != self.header.count:
            raise DimensionMismatchError(
                f"Header announces {self.header.count} blocks, got {arr.shape[0]}"
            )
        if not np.all(np.isfinite(arr)):
            raise SchemeError("Ciphertext blocks must be finite")
        arr.setflags(write=False)
        object.__setattr__(self, "blocks", arr)

    @property
    def count(self) -> int:
        return self.header.count

    @property
    def r(self) -> int:
        return self.header.r

    @property
    def message_seed(self) -> bytes:
        return self.header.message_seed

    def with_blocks(self, blocks: np.ndarray) -> CiphertextMessage:
        """A copy with a replaced block table, for corruption experiments."""
        return CiphertextMessage(self.header, blocks)


def message_chain(
    ct: CiphertextMessage, config: AnalyticConfig | None = None
) -> list[ChainFactor]:
    """Recompute N_0 ... N_{D-1} from the header seed."""
    if ct.count == 0:
        return []
    return derive_chain(ct.message_seed, ct.count, config)


# ── Encryption ───────────────────────────────────────────────────────────────


def encrypt_block(m: int, chain_value: float, e: np.ndarray) -> np.ndarray:
    """c_i = m_i * N_{i-1} * e_i, scalar times vector."""
    return (float(m) * chain_value) * np.asarray(e, dtype=np.float64)


def encrypt(
    pub: PublicKey,
    text: str,
    message_seed: bytes | None = None,
    chain: Sequence[ChainFactor] | None = None,
    config: AnalyticConfig | None = None,
) -> CiphertextMessage:
    """
    Encrypt ``text`` under a public key.

    Args:
        pub: Target public key.
        text: Plaintext.
        message_seed: 32-byte public seed of the chain; fresh when omitted.
        chain: Precomputed chain for ``message_seed``.
        config: Chain derivation settings.

    Raises:
        CapacityError: If the text needs more blocks than the key publishes.
    """
    blocks = encode_text(text)
    count = blocks.count
    if count > pub.max_blocks:
        raise CapacityError(
            f"{count} blocks exceed the key capacity of {pub.max_blocks}",
            blocks=count,
            max_blocks=pub.max_blocks,
        )
    if message_seed is None:
        message_seed = secrets.token_bytes(SEED_BYTES)
    header = CiphertextHeader(CIPHERTEXT_VERSION, pub.r, count, message_seed)

    if chain is None:
        chain = derive_chain(message_seed, count, config) if count else []
    if len(chain) < count:
        raise SchemeError(f"Chain holds {len(chain)} factors, {count} needed")

    out = np.empty((count, pub.r), dtype=np.float64)
    for i, m in enumerate(blocks):
        out[i] = encrypt_block(m, chain[i].value, pub.keys[i])

    logger.info("Encrypted %d blocks (r=%d)", count, pub.r)
    return CiphertextMessage(header, out)


# ── Decryption ───────────────────────────────────────────────────────────────


def recover_value(secret: BlockSecret, c: np.ndarray, chain_value: float) -> float:
    """The unrounded plaintext m~_i = T((1 / N_{i-1}) (c_i (*) d_i))."""
    op = secret.operation
    product = star(op, TangentVector(op.base, c), secret.private_key)
    return normalized_trace(product.scaled(1.0 / chain_value))


def decrypt_block(
    secret: BlockSecret,
    c: np.ndarray,
    chain_value: float,
    tolerance: float = 1e-3,
) -> int:
    """
    Decrypt one block and verify it.

    Raises:
        IntegrityError: If m~ is not within ``tolerance`` of an integer or
            the integer is not an admissible block.
    """
    value = recover_value(secret, c, chain_value)
    if not math.isfinite(value):
        raise IntegrityError(
            "Decrypted block is not finite",
            block_index=secret.index,
            recovered=value,
            check_failed="finite",
        )
    m = round(value)
    if abs(value - m) >= tolerance:
        raise IntegrityError(
            f"Block {secret.index} misses the rounding margin",
            block_index=secret.index,
            recovered=value,
            details={"distance": abs(value - m), "tolerance": tolerance},
        )
    if not 1 <= m <= MAX_BLOCK:
        raise IntegrityError(
            f"Block {secret.index} decrypted outside 1..{MAX_BLOCK}",
            block_index=secret.index,
            recovered=value,
            check_failed="block_range",
        )
    return m


def decrypt(
    priv: KeyPair,
    ct: CiphertextMessage,
    chain: Sequence[ChainFactor] | None = None,
) -> str:
    """
    Decrypt a ciphertext with the private key.

    The chain is re-derived from the header seed unless given.

    Raises:
        CapacityError: If the ciphertext has more blocks than the key.
        IntegrityError: If any block or the decoded stream fails verification.
    """
    if ct.r != priv.model.r:
        raise DimensionMismatchError(
            f"Ciphertext dimension {ct.r} does not match key dimension {priv.model.r}"
        )
    if ct.count > priv.max_blocks:
        raise CapacityError(
            f"Ciphertext has {ct.count} blocks, key capacity is {priv.max_blocks}",
            blocks=ct.count,
            max_blocks=priv.max_blocks,
        )
    if chain is None:
        chain = message_chain(ct, priv.config.analytic)
    if len(chain) < ct.count:
        raise SchemeError(f"Chain holds {len(chain)} factors, {ct.count} needed")

    tolerance = priv.config.scheme.rounding_tolerance
    blocks = [
        decrypt_block(priv.block(i), ct.blocks[i], chain[i].value, tolerance)
        for i in range(ct.count)
    ]
    try:
        text = decode_blocks(blocks)
    except MalformedPlaintextError as exc:
        raise IntegrityError(
            "Decrypted blocks are not valid UTF-16",
            check_failed="utf16",
            details=exc.details,
        ) from exc

    logger.info("Decrypted %d blocks (r=%d)", ct.count, ct.r)
    return text
