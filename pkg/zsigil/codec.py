"""
Block Codec
~~~~~~~~~~~

Text <-> positive-integer block sequences. Text is encoded to UTF-16
code units and each unit u becomes one block m = u + 1, so every block is
a positive integer in [1, 2^16] even for NUL.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

import numpy as np

from zsigil.exceptions import CodecError, MalformedPlaintextError

__all__ = [
    "BLOCK_OFFSET",
    "MAX_BLOCK",
    "MessageBlocks",
    "encode_text",
    "decode_blocks",
]

BLOCK_OFFSET = 1
MAX_BLOCK = 0xFFFF + BLOCK_OFFSET

# Precision budget a block must respect, whatever its origin.
_BLOCK_CEILING = 2**17


@dataclass(frozen=True)
class MessageBlocks:
    """A plaintext as positive-integer blocks m_1 ... m_D."""

    blocks: tuple[int, ...]

    def __post_init__(self) -> None:
        for m in self.blocks:
            if not 1 <= m <= _BLOCK_CEILING:
                raise CodecError(f"Block {m} outside [1, {_BLOCK_CEILING}]")

    @property
    def count(self) -> int:
        """D, the number of blocks."""
        return len(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[int]:
        return iter(self.blocks)

    @classmethod
    def of(cls, blocks: Iterable[int]) -> MessageBlocks:
        return cls(tuple(int(m) for m in blocks))


def encode_text(text: str) -> MessageBlocks:
    """Encode text to UTF-16 code units, one block per unit, offset by one."""
    units = np.frombuffer(text.encode("utf-16-le", "surrogatepass"), dtype="<u2")
    return MessageBlocks(tuple((units.astype(np.int64) + BLOCK_OFFSET).tolist()))


def decode_blocks(blocks: MessageBlocks | Iterable[int]) -> str:
    """
    Invert encode_text.

    Raises:
        MalformedPlaintextError: If a block is not a code unit after removing
            the offset, or the units hold an unpaired surrogate.
    """
    values = list(blocks.blocks if isinstance(blocks, MessageBlocks) else blocks)
    if any(not BLOCK_OFFSET <= m <= MAX_BLOCK for m in values):
        raise MalformedPlaintextError("Block outside the UTF-16 code unit range")
    units = np.asarray(values, dtype=np.int64) - BLOCK_OFFSET
    try:
        return units.astype("<u2").tobytes().decode("utf-16-le")
    except UnicodeDecodeError as exc:
        raise MalformedPlaintextError(
            f"Unpaired surrogate at code unit {exc.start // 2}",
            details={"position": exc.start // 2},
        ) from exc
