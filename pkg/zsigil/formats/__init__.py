"""Z-Sigil file formats: YAML key files and binary ciphertexts."""

from zsigil.formats.ciphertext import (
    HEADER_SIZE,
    MAGIC,
    pack_ciphertext,
    read_ciphertext,
    unpack_ciphertext,
    write_ciphertext,
)
from zsigil.formats.keyfile import (
    KEY_FORMAT_VERSION,
    dump_private_key,
    dump_public_key,
    load_private_key,
    load_public_key,
    read_private_key,
    read_public_key,
    write_key_files,
)

__all__ = [
    "MAGIC",
    "HEADER_SIZE",
    "pack_ciphertext",
    "unpack_ciphertext",
    "write_ciphertext",
    "read_ciphertext",
    "KEY_FORMAT_VERSION",
    "dump_public_key",
    "dump_private_key",
    "load_public_key",
    "load_private_key",
    "write_key_files",
    "read_public_key",
    "read_private_key",
]
