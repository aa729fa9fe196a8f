"""
Key Generation
~~~~~~~~~~~~~~

Per-block geometric keys. Every block index i owns a hidden triple
(p_i, sigma_i, (*)_{p_i}) derived from the 32-byte secret seed; the
public key of block i is e_i = forward_key(op_i, sigma_i(p_i)).

The private side keeps the seed only and re-derives block secrets on
demand, holding a bounded LRU cache of the most recent ones.
"""

from __future__ import annotations

import hashlib
import logging
import secrets
import threading
from collections import OrderedDict
from dataclasses import dataclass, field

import numpy as np

from zsigil.config.schema import SigilConfig
from zsigil.exceptions import (
    DimensionMismatchError,
    GenerationError,
    KeyDerivationError,
    SchemeError,
)
from zsigil.geometry.fiber import (
    SEED_BYTES,
    FiberOperation,
    derive_operation,
    forward_key,
    seed_generator,
    star,
)
from zsigil.geometry.manifold import (
    FourierSection,
    ManifoldPoint,
    TangentVector,
    TorusModel,
    evaluate_section,
    sample_point,
    sample_section,
)

__all__ = [
    "BlockSecret",
    "PublicKey",
    "KeyPair",
    "block_subseed",
    "derive_block",
    "keygen",
]

logger = logging.getLogger(__name__)

_BLOCK_DOMAIN = b"zsigil/block/v1"


@dataclass(frozen=True, eq=False)
class BlockSecret:
    """
    The hidden data of one block.

    Attributes:
        index: Block index i (0-based position in the key table).
        point: Base point p_i.
        section: Section sigma_i.
        operation: Fiber operation (*)_{p_i}.
        private_key: d_i = sigma_i(p_i).
        public_key: e_i, the unique vector with e_i (*) d_i = identity.
        attempt: Resample attempt that produced the block.
    """

    index: int
    point: ManifoldPoint
    section: FourierSection
    operation: FiberOperation
    private_key: TangentVector
    public_key: TangentVector
    attempt: int = 0


def block_subseed(secret_seed: bytes, index: int, attempt: int = 0) -> bytes:
    """SHA-256 of the domain tag, the secret seed, the block index and the attempt."""
    h = hashlib.sha256(_BLOCK_DOMAIN)
    h.update(secret_seed)
    h.update(index.to_bytes(8, "little"))
    h.update(attempt.to_bytes(4, "little"))
    return h.digest()


def derive_block(
    secret_seed: bytes,
    index: int,
    model: TorusModel,
    config: SigilConfig | None = None,
) -> BlockSecret:
    """
    Derive the hidden triple and the key pair of one block.

    Attempt k uses subseed_i = hash(secret_seed || i || k). An attempt is
    discarded when a sampler exhausts its budget, when e_i (*) d_i misses
    the identity by the configured tolerance, or when some |e_ij| falls
    outside the configured public key range.

    Raises:
        KeyDerivationError: If no attempt succeeds within the resample budget.
    """
    if len(secret_seed) != SEED_BYTES:
        raise SchemeError(
            f"Secret seeds are {SEED_BYTES} bytes, got {len(secret_seed)}"
        )
    config = config or SigilConfig()
    mcfg = config.manifold
    budget = config.scheme.resample_budget
    lo, hi = config.scheme.public_key_range
    tolerance = config.fiber.identity_tolerance

    for attempt in range(budget):
        subseed = block_subseed(secret_seed, index, attempt)
        rng = seed_generator(subseed)
        try:
            p = sample_point(model, rng)
            section = sample_section(
                model,
                mcfg.section_cutoff,
                rng,
                base=p,
                max_terms=mcfg.section_max_terms,
                value_range=(mcfg.section_value_range[0], mcfg.section_value_range[1]),
                budget=budget,
            )
            op = derive_operation(model, p, subseed, config.fiber, budget)
            d = evaluate_section(section, p)
            e = forward_key(op, d)
        except GenerationError as exc:
            logger.debug("Block %d attempt %d discarded: %s", index, attempt, exc)
            continue
        gap = star(op, e, d).distance_to_identity()
        if not gap < tolerance:
            logger.debug(
                "Block %d attempt %d: identity gap %.3g >= %.3g",
                index,
                attempt,
                gap,
                tolerance,
            )
            continue
        magnitudes = np.abs(e.components)
        if np.all((magnitudes >= lo) & (magnitudes <= hi)):
            return BlockSecret(
                index=index,
                point=p,
                section=section,
                operation=op,
                private_key=d,
                public_key=e,
                attempt=attempt,
            )
        logger.debug("Block %d attempt %d: public key outside range", index, attempt)

    raise KeyDerivationError(
        f"Block {index}: no key pair within {lo:g}..{hi:g} in {budget} attempts",
        details={"index": index, "budget": budget},
    )


@dataclass(frozen=True, eq=False)
class PublicKey:
    """
    The public part of a key pair.

    Attributes:
        model: The torus the keys live on.
        keys: Read-only (max_blocks, r) table of per-block public vectors e_i.
        section_cutoff: Frequency cutoff F the key was generated with.
    """

    model: TorusModel
    keys: np.ndarray
    section_cutoff: int = 2

    def __post_init__(self) -> None:
        arr = np.array(self.keys, dtype=np.float64)
        if arr.ndim != 2 or arr.shape[1] != self.model.r or arr.shape[0] < 1:
            raise DimensionMismatchError(
                f"Public key table must have shape (D_max >= 1, {self.model.r}), "
                f"got {arr.shape}"
            )
        if not np.all(np.isfinite(arr)) or np.any(arr == 0.0):
            raise SchemeError("Public key components must be finite and nonzero")
        arr.setflags(write=False)
        object.__setattr__(self, "keys", arr)

    @property
    def r(self) -> int:
        return self.model.r

    @property
    def max_blocks(self) -> int:
        return self.keys.shape[0]

    def key(self, index: int) -> np.ndarray:
        """The public vector e_i of block index i."""
        if not 0 <= index < self.max_blocks:
            raise SchemeError(f"Block index {index} outside 0..{self.max_blocks - 1}")
        return self.keys[index]


@dataclass(eq=False)
class KeyPair:
    """
    A secret seed together with the public key it generates.

    Block secrets are re-derived from the seed on demand and kept in a
    bounded LRU cache; the cache is guarded so distinct threads may share
    a key pair.
    """

    secret_seed: bytes
    public: PublicKey
    config: SigilConfig = field(default_factory=SigilConfig)
    _cache: OrderedDict[int, BlockSecret] = field(
        default_factory=OrderedDict, init=False, repr=False
    )
    _lock: threading.RLock = field(
        default_factory=threading.RLock, init=False, repr=False
    )

    def __post_init__(self) -> None:
        if len(self.secret_seed) != SEED_BYTES:
            raise SchemeError(
                f"Secret seeds are {SEED_BYTES} bytes, got {len(self.secret_seed)}"
            )

    def __repr__(self) -> str:
        return (
            f"<KeyPair r={self.model.r} max_blocks={self.max_blocks} "
            f"seed={self.secret_seed[:4].hex()}...>"
        )

    @property
    def model(self) -> TorusModel:
        return self.public.model

    @property
    def max_blocks(self) -> int:
        return self.public.max_blocks

    @property
    def public_keys(self) -> np.ndarray:
        return self.public.keys

    def block(self, index: int) -> BlockSecret:
        """Block secret i, from the cache or freshly derived."""
        with self._lock:
            cached = self._cache.get(index)
            if cached is not None:
                self._cache.move_to_end(index)
                return cached

        secret = derive_block(self.secret_seed, index, self.model, self.config)
        self._remember(secret)
        return secret

    def _remember(self, secret: BlockSecret) -> None:
        limit = self.config.scheme.block_cache_size
        if not limit:
            return
        with self._lock:
            self._cache[secret.index] = secret
            # Evict least recently used
            while len(self._cache) > limit:
                self._cache.popitem(last=False)

    def clear_cache(self) -> None:
        with self._lock:
            self._cache.clear()


def keygen(
    model: TorusModel,
    max_blocks: int,
    secret_seed: bytes | None = None,
    config: SigilConfig | None = None,
) -> KeyPair:
    """
    Generate a key pair with ``max_blocks`` per-block public keys.

    Args:
        model: The torus the keys live on.
        max_blocks: D_max, the largest message (in blocks) the key accepts.
        secret_seed: 32 bytes of randomness; system entropy when omitted.
        config: Sampling settings; defaults when omitted.

    Raises:
        KeyDerivationError: If some block fails after resampling.
    """
    if max_blocks < 1:
        raise SchemeError(f"max_blocks must be >= 1, got {max_blocks}")
    config = config or SigilConfig()
    if secret_seed is None:
        secret_seed = secrets.token_bytes(SEED_BYTES)

    keys = np.empty((max_blocks, model.r), dtype=np.float64)
    pair_cache: list[BlockSecret] = []
    cache_limit = config.scheme.block_cache_size
    for i in range(max_blocks):
        secret = derive_block(secret_seed, i, model, config)
        keys[i] = secret.public_key.components
        if i < cache_limit:
            pair_cache.append(secret)

    pair = KeyPair(
        secret_seed=secret_seed,
        public=PublicKey(model, keys, config.manifold.section_cutoff),
        config=config,
    )
    for secret in pair_cache:
        pair._remember(secret)
    logger.info("Generated key pair: r=%d, max_blocks=%d", model.r, max_blocks)
    return pair
