"""Shared fixtures for Z-Sigil tests."""

from __future__ import annotations

import numpy as np
import pytest

from zsigil import Sigil
from zsigil.geometry.fiber import FiberOperation
from zsigil.geometry.manifold import FourierSection, TangentVector, TorusModel
from zsigil.scheme.keys import BlockSecret, KeyPair

SECRET_SEED = bytes(range(32))
MESSAGE_SEED = bytes(range(32, 64))


@pytest.fixture
def rng() -> np.random.Generator:
    """A seeded generator, fresh per test."""
    return np.random.default_rng(1234)


@pytest.fixture
def model() -> TorusModel:
    """The default six-dimensional unit torus."""
    return TorusModel.unit(6)


@pytest.fixture
def model2() -> TorusModel:
    """The two-dimensional unit torus used by the worked examples."""
    return TorusModel.unit(2)


@pytest.fixture
def secret_seed() -> bytes:
    return SECRET_SEED


@pytest.fixture
def message_seed() -> bytes:
    return MESSAGE_SEED


@pytest.fixture
def sigil() -> Sigil:
    """A default Sigil instance."""
    return Sigil.default()


@pytest.fixture(scope="module")
def keypair() -> KeyPair:
    """A 64-block key pair on the default torus, shared within a module."""
    return Sigil.default().keygen(64, seed=SECRET_SEED)


@pytest.fixture
def degenerate_block(model2: TorusModel) -> BlockSecret:
    """
    The hand-checkable block: identity frame, eta = id,
    d = (0.5, 2) and e = (2, 0.5).
    """
    p = model2.point([0.0, 0.0])
    section = FourierSection(
        moduli=model2.moduli,
        frequencies=np.zeros((2, 1, 2), dtype=np.int64),
        amplitudes=[[[0.5, 0.0]], [[2.0, 0.0]]],
        cutoff=0,
    )
    return BlockSecret(
        index=0,
        point=p,
        section=section,
        operation=FiberOperation.degenerate(p),
        private_key=TangentVector(p, [0.5, 2.0]),
        public_key=TangentVector(p, [2.0, 0.5]),
    )
