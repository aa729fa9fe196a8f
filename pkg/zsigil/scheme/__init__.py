"""Z-Sigil scheme: key generation and the serial block cipher."""

from zsigil.scheme.cipher import (
    CIPHERTEXT_VERSION,
    CiphertextHeader,
    CiphertextMessage,
    decrypt,
    decrypt_block,
    encrypt,
    encrypt_block,
    message_chain,
    recover_value,
)
from zsigil.scheme.keys import (
    BlockSecret,
    KeyPair,
    PublicKey,
    block_subseed,
    derive_block,
    keygen,
)

__all__ = [
    "BlockSecret",
    "PublicKey",
    "KeyPair",
    "block_subseed",
    "derive_block",
    "keygen",
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
