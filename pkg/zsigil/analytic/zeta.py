"""
Spectral Zeta Determinants
~~~~~~~~~~~~~~~~~~~~~~~~~~

Zeta-regularized determinants det_zeta(A) = exp(-zeta_A'(0)) for
power-law spectra, in closed form and by independent numerical
continuation.

For a power-law spectrum with scale c and exponent beta the regularized
product runs over mu_j = c j^beta, the reciprocal spectrum of the
trace-class operator A with eigenvalues lambda_j = j^(-beta) / c. Then

    zeta_A(s) = sum_j mu_j^(-s) = c^(-s) zeta(beta s)

converges for Re s > 1/beta and continues analytically to s = 0, where
zeta(0) = -1/2 and zeta'(0) = -ln(2 pi)/2 give

    zeta_A'(0) = ln(c)/2 - (beta/2) ln(2 pi),
    det_zeta(A) = (2 pi)^(beta/2) / sqrt(c).
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import mpmath
import numpy as np

from zsigil.exceptions import AnalyticError, NotTraceClassError, NumericFailureError

__all__ = [
    "PowerLawSpectrum",
    "spectral_zeta_det",
    "spectral_zeta_det_numeric",
    "euler_maclaurin_zeta",
]

logger = logging.getLogger(__name__)

_WORKING_DPS = 30
_BERNOULLI_TERMS = 6


@dataclass(frozen=True)
class PowerLawSpectrum:
    """
    A compact, self-adjoint, trace-class operator with a power-law spectrum.

    Attributes:
        c: Positive scale.
        beta: Decay exponent; beta > 1 makes the operator trace class.
        truncation: Number of explicit terms J used by the numerical oracle.
    """

    c: float
    beta: float
    truncation: int = 1000

    def __post_init__(self) -> None:
        if not self.c > 0.0:
            raise AnalyticError(f"Spectrum scale must be positive, got {self.c}")
        if not self.beta > 1.0:
            raise NotTraceClassError(
                f"beta = {self.beta} <= 1: the spectrum is not trace class"
            )
        if self.truncation < 1:
            raise AnalyticError(f"Truncation must be positive, got {self.truncation}")

    def eigenvalues(self, count: int | None = None) -> np.ndarray:
        """lambda_j = j^(-beta) / c for j = 1..count (default: truncation)."""
        j = np.arange(1, (count or self.truncation) + 1, dtype=np.float64)
        return j ** (-self.beta) / self.c

    def trace(self) -> float:
        """Tr A = zeta(beta) / c."""
        return float(mpmath.zeta(self.beta)) / self.c


def spectral_zeta_det(spectrum: PowerLawSpectrum) -> float:
    """Closed form det_zeta(A) = (2 pi)^(beta/2) / sqrt(c)."""
    return (2.0 * math.pi) ** (spectrum.beta / 2.0) / math.sqrt(spectrum.c)


def euler_maclaurin_zeta(
    z: mpmath.mpf, truncation: int, bernoulli_terms: int = _BERNOULLI_TERMS
) -> tuple[mpmath.mpf, mpmath.mpf]:
    """
    Riemann zeta(z), z != 1, by Euler-Maclaurin summation:

        sum_{n<J} n^-z + J^(1-z)/(z-1) + J^-z/2
            + sum_k B_2k/(2k)! z(z+1)...(z+2k-2) J^(-z-2k+1)

    Valid on the whole plane minus z = 1.

    Returns:
        The value and the magnitude of the first omitted correction term,
        which bounds the remainder.
    """
    if z == 1:
        raise NumericFailureError("zeta has a pole at z = 1")
    big_j = mpmath.mpf(truncation)
    head = mpmath.fsum(mpmath.power(n, -z) for n in range(1, truncation))
    value = head + mpmath.power(big_j, 1 - z) / (z - 1) + mpmath.power(big_j, -z) / 2

    def correction(k: int) -> mpmath.mpf:
        return (
            mpmath.bernoulli(2 * k)
            / mpmath.factorial(2 * k)
            * mpmath.rf(z, 2 * k - 1)
            * mpmath.power(big_j, -z - 2 * k + 1)
        )

    for k in range(1, bernoulli_terms + 1):
        value += correction(k)
    return value, abs(correction(bernoulli_terms + 1))


def spectral_zeta_det_numeric(
    spectrum: PowerLawSpectrum,
    step: float = 1e-5,
    tolerance: float = 1e-15,
) -> float:
    """
    Independent estimate of det_zeta(A).

    Continues zeta(beta s) to a neighbourhood of s = 0 by Euler-Maclaurin
    summation with ``spectrum.truncation`` explicit terms, then takes a
    central difference of zeta_A(s) = c^(-s) zeta(beta s) with the given step.

    Raises:
        AnalyticError: If the truncation is below 1000.
        NumericFailureError: If the remainder bound exceeds ``tolerance`` or
            the result is not finite.
    """
    if spectrum.truncation < 1000:
        raise AnalyticError(
            "Numerical continuation needs truncation >= 1000, "
            f"got {spectrum.truncation}"
        )
    with mpmath.workdps(_WORKING_DPS):
        h = mpmath.mpf(step)
        c = mpmath.mpf(spectrum.c)
        beta = mpmath.mpf(spectrum.beta)
        values = []
        for s in (h, -h):
            zeta_value, remainder = euler_maclaurin_zeta(beta * s, spectrum.truncation)
            if remainder > tolerance:
                raise NumericFailureError(
                    f"Euler-Maclaurin remainder {float(remainder):.3e} exceeds "
                    f"{tolerance:.1e}",
                    details={"c": spectrum.c, "beta": spectrum.beta, "s": float(s)},
                )
            values.append(mpmath.power(c, -s) * zeta_value)
        derivative = (values[0] - values[1]) / (2 * h)
        result = float(mpmath.exp(-derivative))
    if not math.isfinite(result):
        raise NumericFailureError("Numerical zeta determinant is not finite")
    logger.debug(
        "det_zeta numeric c=%s beta=%s -> %.12g", spectrum.c, spectrum.beta, result
    )
    return result
