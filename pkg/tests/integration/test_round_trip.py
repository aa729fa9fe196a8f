"""
Integration tests for whole-message round trips.

Keys, chains and ciphertexts pass through their file formats between
encryption and decryption, as they would between two parties.
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zsigil import Sigil
from zsigil.codec import encode_text
from zsigil.formats.ciphertext import pack_ciphertext, unpack_ciphertext
from zsigil.formats.keyfile import (
    dump_private_key,
    dump_public_key,
    load_private_key,
    load_public_key,
)
from zsigil.scheme.cipher import message_chain, recover_value


@pytest.fixture(scope="module")
def parties():
    """Sender with the public key file, receiver with the private key file."""
    sigil = Sigil.default()
    pair = sigil.keygen(64, seed=bytes(range(32)))
    public = load_public_key(dump_public_key(pair.public))
    private = load_private_key(dump_private_key(pair))
    return sigil, public, private


def _mixed_text(units: int, rng: np.random.Generator) -> str:
    """Random text of about ``units`` UTF-16 code units, one in five astral."""
    chars: list[str] = []
    count = 0
    while count < units:
        if rng.random() < 0.2:
            chars.append(chr(int(rng.integers(0x10000, 0x110000))))
            count += 2
        else:
            point = int(rng.integers(0, 0xF800))
            chars.append(chr(point if point < 0xD800 else point + 0x800))
            count += 1
    return "".join(chars)


class TestRoundTrip:
    """Round trips through the serialized formats."""

    @settings(max_examples=25, deadline=None)
    @given(text=st.text(max_size=30))
    def test_any_text(self, parties, text):
        sigil, public, private = parties
        wire = pack_ciphertext(sigil.encrypt(public, text))
        assert sigil.decrypt(private, unpack_ciphertext(wire)) == text

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "\x00",
            "Hello, Z-Sigil!",
            "\U0001d11e\U0001f600",
            "\ud7ff\uffff",
        ],
    )
    def test_edge_texts(self, parties, text):
        sigil, public, private = parties
        ct = sigil.encrypt(public, text)
        assert sigil.decrypt(private, ct) == text

    def test_receiver_key_rederives_blocks(self, parties):
        _, public, private = parties
        private.clear_cache()
        for i in (0, 31, 63):
            assert (private.block(i).public_key.components == public.key(i)).all()


@pytest.mark.slow
class TestRoundTripSweep:
    """Long mixed-plane messages across torus dimensions."""

    @pytest.mark.parametrize("r", [2, 6, 10])
    def test_exact_recovery_and_error_budget(self, r):
        sigil = Sigil.default(manifold={"dimension": r})
        pair = sigil.keygen(2050, seed=bytes(range(r, r + 32)))
        rng = np.random.default_rng(r)
        worst = 0.0
        for units in (1, 64, 300, 1000, 2048):
            text = _mixed_text(units, rng)
            ct = sigil.encrypt(pair.public, text, rng.bytes(32))
            assert sigil.decrypt(pair, ct) == text
            expected = encode_text(text).blocks
            chain = message_chain(ct)
            for i, m in enumerate(expected):
                value = recover_value(pair.block(i), ct.blocks[i], chain[i].value)
                worst = max(worst, abs(value - m))
        assert worst < 1e-6
