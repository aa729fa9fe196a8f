"""
Chain Factors
~~~~~~~~~~~~~

The per-block analytic scalar

    N_i = det(G_i) * det_zeta(A_i) * prod_k gamma_k

and its deterministic derivation from a public per-message seed, so that
sender and receiver recompute the identical chain N_0, ..., N_{D-1}.

Each N_i is a function of (seed, i) alone; the serial dependency of the
scheme lives in which chain position a block consumes, not here.
"""

from __future__ import annotations

import hashlib
import logging
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from zsigil.analytic.gue import sample_gue
from zsigil.analytic.zeros import ZetaZeroTable, default_table, gamma_product
from zsigil.analytic.zeta import PowerLawSpectrum, spectral_zeta_det
from zsigil.config.schema import AnalyticConfig
from zsigil.exceptions import AnalyticError, ChainDerivationError, GenerationError

__all__ = ["ChainFactor", "chain_factor", "derive_chain", "chain_subseed"]

logger = logging.getLogger(__name__)

_CHAIN_DOMAIN = b"zsigil/chain/v1"


@dataclass(frozen=True)
class ChainFactor:
    """
    One chain factor N_i together with its components.

    Attributes:
        index: Chain position i.
        value: N_i.
        det_g: det(G_i) of the GUE matrix.
        det_zeta: det_zeta(A_i) of the power-law operator.
        gamma_product: prod_k gamma_k over ``zero_indices``.
        zero_indices: 1-based indices of the selected Riemann zeros.
        scale: Spectrum scale c of A_i.
    """

    index: int
    value: float
    det_g: float
    det_zeta: float
    gamma_product: float
    zero_indices: tuple[int, ...]
    scale: float


def chain_factor(
    index: int,
    det_g: float,
    spectrum: PowerLawSpectrum,
    zero_indices: Sequence[int],
    table: ZetaZeroTable | None = None,
) -> ChainFactor:
    """Assemble N_i from its three analytic components."""
    table = table or default_table()
    det_zeta = spectral_zeta_det(spectrum)
    product = gamma_product(table, zero_indices)
    value = det_g * det_zeta * product
    if value == 0.0:
        raise AnalyticError(f"Chain factor {index} vanishes")
    return ChainFactor(
        index=index,
        value=value,
        det_g=det_g,
        det_zeta=det_zeta,
        gamma_product=product,
        zero_indices=tuple(int(k) for k in zero_indices),
        scale=spectrum.c,
    )


def chain_subseed(message_seed: bytes, index: int, attempt: int = 0) -> bytes:
    """SHA-256 of the domain tag, the message seed, the index and the attempt."""
    h = hashlib.sha256(_CHAIN_DOMAIN)
    h.update(message_seed)
    h.update(index.to_bytes(8, "little"))
    h.update(attempt.to_bytes(4, "little"))
    return h.digest()


def _derive_factor(
    message_seed: bytes,
    index: int,
    config: AnalyticConfig,
    table: ZetaZeroTable,
    budget: int,
) -> ChainFactor:
    lo, hi = config.magnitude_guard
    c_lo, c_hi = config.spectrum_scale_range
    for attempt in range(budget):
        subseed = chain_subseed(message_seed, index, attempt)
        rng = np.random.default_rng(np.frombuffer(subseed, dtype="<u4"))
        try:
            gue = sample_gue(config.gue_size, rng, config.gue_min_det, budget)
        except GenerationError:
            continue
        spectrum = PowerLawSpectrum(
            c=float(rng.uniform(c_lo, c_hi)), beta=config.spectrum_beta
        )
        zeros = rng.choice(len(table), size=config.zeros_per_block, replace=False) + 1
        factor = chain_factor(index, gue.det, spectrum, sorted(zeros.tolist()), table)
        if lo <= abs(factor.value) <= hi:
            return factor
        logger.debug("Chain factor %d outside guard, resampling", index)
    raise ChainDerivationError(
        f"Chain factor {index} left the magnitude guard {lo:g}..{hi:g} "
        f"in {budget} attempts",
        details={"index": index},
    )


def derive_chain(
    message_seed: bytes,
    count: int,
    config: AnalyticConfig | None = None,
    table: ZetaZeroTable | None = None,
    budget: int = 64,
) -> list[ChainFactor]:
    """
    Derive N_0 ... N_{count-1} from a 32-byte message seed.

    Each position i uses subseed SHA-256(tag || seed || i || attempt) to
    drive a GUE matrix, a spectrum scale c in the configured range and a
    selection of K zero indices.

    Raises:
        ChainDerivationError: If a factor cannot be brought inside the
            magnitude guard within ``budget`` attempts.
    """
    if count < 1:
        raise AnalyticError(f"Chain length must be >= 1, got {count}")
    if len(message_seed) != 32:
        raise AnalyticError(f"Message seeds are 32 bytes, got {len(message_seed)}")
    config = config or AnalyticConfig()
    table = table or default_table()
    return [
        _derive_factor(message_seed, i, config, table, budget) for i in range(count)
    ]
