"""
zsigil: the Z-Sigil experimental public-key scheme and its attack lab.

Keys live in the tangent fibers of a flat complex torus; messages are
split into UTF-16 blocks and encrypted serially, each block scaled by an
analytic chain factor built from a GUE determinant, a zeta-regularized
determinant and tabulated Riemann zeros.

The construction is experimental and offers no security guarantees; see
the ratio attack in ``zsigil.attack``.

Quick Start::

    from zsigil import Sigil

    sigil = Sigil.default()
    pair = sigil.keygen(max_blocks=256)
    ct = sigil.encrypt(pair.public, "Hello, Z-Sigil!")
    assert sigil.decrypt(pair, ct) == "Hello, Z-Sigil!"

:license: Apache-2.0
"""

from zsigil.analytic.chain import ChainFactor
from zsigil.config.schema import SigilConfig
from zsigil.core.sigil import Sigil
from zsigil.exceptions import (
    CapacityError,
    IntegrityError,
    SigilError,
)
from zsigil.geometry.manifold import ManifoldPoint, TangentVector, TorusModel
from zsigil.observability.metrics import SigilMetrics
from zsigil.scheme.cipher import CiphertextMessage
from zsigil.scheme.keys import KeyPair, PublicKey

__version__ = "0.1.0"
__license__ = "Apache-2.0"

__all__ = [
    "Sigil",
    "SigilConfig",
    "SigilMetrics",
    "TorusModel",
    "ManifoldPoint",
    "TangentVector",
    "ChainFactor",
    "KeyPair",
    "PublicKey",
    "CiphertextMessage",
    "SigilError",
    "CapacityError",
    "IntegrityError",
    "__version__",
]
