"""
Key Files
~~~~~~~~~

Human-readable YAML key files. Public keys carry the model and the
per-block public vector table as base64 of little-endian float64 values,
row-major D_max x r. Private keys add the 64-hex-character secret seed.

Example (public)::

    format_version: 1
    role: public
    r: 6
    max_blocks: 256
    moduli: ['1.0', '1.0', '1.0', '1.0', '1.0', '1.0']
    section_cutoff: 2
    public_keys: AAAA...
"""

from __future__ import annotations

import base64
import binascii
import logging
import os
from typing import Any

import numpy as np
import yaml

from zsigil.config.schema import SigilConfig
from zsigil.exceptions import KeyFileError, SigilError
from zsigil.geometry.fiber import SEED_BYTES
from zsigil.geometry.manifold import TorusModel
from zsigil.scheme.keys import KeyPair, PublicKey, derive_block

__all__ = [
    "KEY_FORMAT_VERSION",
    "PUBLIC_SUFFIX",
    "PRIVATE_SUFFIX",
    "dump_public_key",
    "dump_private_key",
    "load_public_key",
    "load_private_key",
    "write_key_files",
    "read_public_key",
    "read_private_key",
]

logger = logging.getLogger(__name__)

KEY_FORMAT_VERSION = 1
PUBLIC_SUFFIX = ".pub"
PRIVATE_SUFFIX = ".key"

_FLOAT_DTYPE = "<f8"
# Keep the base64 table on one line.
_LINE_WIDTH = 2**31 - 1


# ── Serialization ────────────────────────────────────────────────────────────


def _public_fields(pub: PublicKey, role: str) -> dict[str, Any]:
    return {
        "format_version": KEY_FORMAT_VERSION,
        "role": role,
        "r": pub.r,
        "max_blocks": pub.max_blocks,
        "moduli": [repr(float(m)) for m in pub.model.moduli],
        "section_cutoff": pub.section_cutoff,
        "public_keys": base64.b64encode(
            pub.keys.astype(_FLOAT_DTYPE).tobytes()
        ).decode("ascii"),
    }


def _dump(fields: dict[str, Any]) -> str:
    return yaml.safe_dump(fields, sort_keys=False, width=_LINE_WIDTH)


def dump_public_key(pub: PublicKey) -> str:
    """Serialize a public key to its text form."""
    return _dump(_public_fields(pub, "public"))


def dump_private_key(pair: KeyPair) -> str:
    """Serialize a key pair (secret seed plus every public field)."""
    fields = _public_fields(pair.public, "private")
    fields["secret_seed"] = pair.secret_seed.hex()
    return _dump(fields)


# ── Parsing ──────────────────────────────────────────────────────────────────


def _parse(text: str, role: str) -> dict[str, Any]:
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise KeyFileError(f"Key file is not valid YAML: {exc}") from exc
    if not isinstance(data, dict):
        raise KeyFileError("Key file root must be a mapping")
    if data.get("format_version") != KEY_FORMAT_VERSION:
        raise KeyFileError(
            f"Unsupported key format version {data.get('format_version')!r}"
        )
    if data.get("role") != role:
        raise KeyFileError(f"Expected a {role} key, got role {data.get('role')!r}")
    return data


def _public_from_fields(data: dict[str, Any]) -> PublicKey:
    try:
        r = int(data["r"])
        max_blocks = int(data["max_blocks"])
        moduli = tuple(float(m) for m in data["moduli"])
        cutoff = int(data["section_cutoff"])
        raw = base64.b64decode(data["public_keys"], validate=True)
    except KeyError as exc:
        raise KeyFileError(f"Key file is missing field {exc.args[0]!r}") from exc
    except (TypeError, ValueError, binascii.Error) as exc:
        raise KeyFileError(f"Malformed key file field: {exc}") from exc

    expected = max_blocks * r * np.dtype(_FLOAT_DTYPE).itemsize
    if len(raw) != expected:
        raise KeyFileError(
            f"Public key table holds {len(raw)} bytes, expected {expected}",
            details={"r": r, "max_blocks": max_blocks},
        )
    keys = np.frombuffer(raw, dtype=_FLOAT_DTYPE).reshape(max_blocks, r)
    try:
        return PublicKey(TorusModel(r=r, moduli=moduli), keys, cutoff)
    except SigilError as exc:
        raise KeyFileError(f"Public key fails its invariants: {exc}") from exc


def load_public_key(text: str) -> PublicKey:
    """
    Parse a public key file.

    Raises:
        KeyFileError: On bad YAML, a wrong version or role, or broken invariants.
    """
    return _public_from_fields(_parse(text, "public"))


def load_private_key(
    text: str,
    config: SigilConfig | None = None,
    verify_blocks: int = 1,
) -> KeyPair:
    """
    Parse a private key file.

    The first ``verify_blocks`` public vectors are re-derived from the
    secret seed and compared bitwise with the stored table.

    Raises:
        KeyFileError: On a malformed file or a seed that does not
            reproduce the stored public keys.
    """
    data = _parse(text, "private")
    pub = _public_from_fields(data)
    try:
        seed = bytes.fromhex(data["secret_seed"])
    except KeyError as exc:
        raise KeyFileError("Private key file is missing 'secret_seed'") from exc
    except (TypeError, ValueError) as exc:
        raise KeyFileError(f"secret_seed is not hex: {exc}") from exc
    if len(seed) != SEED_BYTES:
        raise KeyFileError(f"secret_seed must be {SEED_BYTES} bytes, got {len(seed)}")

    config = (config or SigilConfig()).model_copy(deep=True)
    config.manifold.dimension = pub.r
    config.manifold.moduli = list(pub.model.moduli)
    config.manifold.section_cutoff = pub.section_cutoff
    pair = KeyPair(secret_seed=seed, public=pub, config=config)

    for i in range(min(verify_blocks, pub.max_blocks)):
        secret = derive_block(seed, i, pub.model, config)
        if not np.array_equal(secret.public_key.components, pub.keys[i]):
            raise KeyFileError(
                f"secret_seed does not reproduce public key {i}",
                details={"index": i},
            )
    return pair


# ── Files ────────────────────────────────────────────────────────────────────


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)


def _read_text(path: str) -> str:
    if not os.path.exists(path):
        raise KeyFileError(f"Key file not found: {path}")
    with open(path, encoding="utf-8") as f:
        return f.read()


def write_key_files(pair: KeyPair, basename: str) -> tuple[str, str]:
    """Write ``basename.pub`` and ``basename.key``; return both paths."""
    pub_path = basename + PUBLIC_SUFFIX
    key_path = basename + PRIVATE_SUFFIX
    _write_text(pub_path, dump_public_key(pair.public))
    _write_text(key_path, dump_private_key(pair))
    logger.info("Wrote %s and %s", pub_path, key_path)
    return pub_path, key_path


def read_public_key(path: str) -> PublicKey:
    return load_public_key(_read_text(path))


def read_private_key(path: str, config: SigilConfig | None = None) -> KeyPair:
    return load_private_key(_read_text(path), config)
