"""
Gaussian Unitary Ensemble
~~~~~~~~~~~~~~~~~~~~~~~~~

Hermitian random matrices H = (X + X^*) / 2 with X an array of
independent standard complex Gaussians (real and imaginary parts N(0, 1)).

Variance convention: diagonal entries are N(0, 1); off-diagonal entries
have real and imaginary parts each N(0, 1/2), so E|H_jk|^2 = 1 and
E[Tr H^2] = n^2. The spectrum of H / sqrt(n) follows the semicircle law
on [-2, 2].
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from zsigil.exceptions import AnalyticError, GenerationError

__all__ = ["GueMatrix", "sample_gue", "semicircle_cdf"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class GueMatrix:
    """An n x n complex Hermitian matrix with a nonvanishing determinant."""

    entries: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.entries, dtype=np.complex128)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise AnalyticError(f"GUE matrices are square, got shape {arr.shape}")
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    @property
    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.entries)

    @property
    def det(self) -> float:
        """Real determinant, the product of the (real) eigenvalues."""
        return float(np.prod(self.eigenvalues))

    def is_hermitian(self) -> bool:
        return bool(np.array_equal(self.entries, self.entries.conj().T))


def sample_gue(
    n: int,
    rng: np.random.Generator,
    min_det: float = 1e-6,
    budget: int = 64,
) -> GueMatrix:
    """
    Draw a GUE matrix, resampling while |det| < min_det.

    Raises:
        GenerationError: If the resample budget is exhausted.
    """
    if n < 1:
        raise AnalyticError(f"GUE size must be >= 1, got {n}")
    for attempt in range(budget):
        x = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        matrix = GueMatrix((x + x.conj().T) / 2.0)
        if abs(matrix.det) >= min_det:
            if attempt:
                logger.debug("GUE matrix accepted after %d resamples", attempt)
            return matrix
    raise GenerationError(f"No GUE matrix with |det| >= {min_det} in {budget} draws")


def semicircle_cdf(x: np.ndarray) -> np.ndarray:
    """CDF of the semicircle law with density sqrt(4 - x^2) / (2 pi) on [-2, 2]."""
    t = np.clip(np.asarray(x, dtype=np.float64), -2.0, 2.0)
    return 0.5 + t * np.sqrt(4.0 - t * t) / (4.0 * np.pi) + np.arcsin(t / 2.0) / np.pi
