"""
Ciphertext Files
~~~~~~~~~~~~~~~~

Binary layout, all little-endian::

    magic "ZSGL" | u16 version | u16 r | u32 D | 32-byte message seed
    D * r float64 block components, row-major

The header is 44 bytes, so a file is exactly 44 + 8 * D * r bytes long.
"""

from __future__ import annotations

import logging
import os
import struct

import numpy as np

from zsigil.exceptions import CiphertextFormatError, SigilError
from zsigil.scheme.cipher import CiphertextHeader, CiphertextMessage

__all__ = [
    "MAGIC",
    "HEADER_SIZE",
    "pack_ciphertext",
    "unpack_ciphertext",
    "write_ciphertext",
    "read_ciphertext",
]

logger = logging.getLogger(__name__)

MAGIC = b"ZSGL"
_HEADER = struct.Struct("<4sHHI32s")
HEADER_SIZE = _HEADER.size
_FLOAT_DTYPE = "<f8"


def pack_ciphertext(ct: CiphertextMessage) -> bytes:
    """Serialize a ciphertext to bytes."""
    h = ct.header
    header = _HEADER.pack(MAGIC, h.version, h.r, h.count, h.message_seed)
    return header + ct.blocks.astype(_FLOAT_DTYPE).tobytes()


def unpack_ciphertext(data: bytes) -> CiphertextMessage:
    """
    Parse a ciphertext.

    Raises:
        CiphertextFormatError: On a short header, bad magic, unsupported
            version or a body whose length disagrees with the header.
    """
    if len(data) < HEADER_SIZE:
        raise CiphertextFormatError(
            f"Ciphertext is {len(data)} bytes, "
            f"shorter than the {HEADER_SIZE}-byte header"
        )
    magic, version, r, count, seed = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise CiphertextFormatError(f"Bad magic {magic!r}, expected {MAGIC!r}")

    expected = HEADER_SIZE + count * r * np.dtype(_FLOAT_DTYPE).itemsize
    if len(data) != expected:
        raise CiphertextFormatError(
            f"Ciphertext is {len(data)} bytes, header implies {expected}",
            details={"r": r, "blocks": count},
        )
    body = np.frombuffer(data, dtype=_FLOAT_DTYPE, offset=HEADER_SIZE)
    try:
        header = CiphertextHeader(version=version, r=r, count=count, message_seed=seed)
        return CiphertextMessage(header, body.reshape(count, r))
    except SigilError as exc:
        raise CiphertextFormatError(f"Invalid ciphertext: {exc}") from exc


def write_ciphertext(path: str, ct: CiphertextMessage) -> None:
    with open(path, "wb") as f:
        f.write(pack_ciphertext(ct))
    logger.info("Wrote %d-block ciphertext to %s", ct.count, path)


def read_ciphertext(path: str) -> CiphertextMessage:
    if not os.path.exists(path):
        raise CiphertextFormatError(f"Ciphertext file not found: {path}")
    with open(path, "rb") as f:
        return unpack_ciphertext(f.read())
