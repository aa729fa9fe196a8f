"""Z-Sigil analytic layer: GUE matrices, zeta determinants and chain factors."""

from zsigil.analytic.chain import ChainFactor, chain_factor, derive_chain
from zsigil.analytic.gue import GueMatrix, sample_gue, semicircle_cdf
from zsigil.analytic.zeros import (
    RIEMANN_ZERO_GAMMAS,
    ZetaZeroTable,
    default_table,
    gamma_product,
)
from zsigil.analytic.zeta import (
    PowerLawSpectrum,
    euler_maclaurin_zeta,
    spectral_zeta_det,
    spectral_zeta_det_numeric,
)

__all__ = [
    "GueMatrix",
    "sample_gue",
    "semicircle_cdf",
    "PowerLawSpectrum",
    "spectral_zeta_det",
    "spectral_zeta_det_numeric",
    "euler_maclaurin_zeta",
    "RIEMANN_ZERO_GAMMAS",
    "ZetaZeroTable",
    "default_table",
    "gamma_product",
    "ChainFactor",
    "chain_factor",
    "derive_chain",
]
