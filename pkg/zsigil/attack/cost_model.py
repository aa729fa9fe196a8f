"""
Quantum Search Cost Model
~~~~~~~~~~~~~~~~~~~~~~~~~

Analytic Grover cost estimates for an unstructured key search over
S(n) = 2^(alpha n) candidates:

    Q(n) = ceil((pi / 4) sqrt(S))        oracle queries (point estimate)
    Q(n) = Omega(2^(alpha n / 2))        lower bound
    G(n) = Omega(Q(n) g(n)),  g(n) = n^k gate cost

Sizes are handled in log2 form so n = 1024 and beyond stay exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath

from zsigil.exceptions import AttackError

__all__ = [
    "SearchSpaceModel",
    "GroverEstimate",
    "CosmologicalMargin",
    "grover_queries",
    "log10_pow2",
    "cosmological_margin",
    "classical_mean_queries",
    "classical_quantum_ratio",
]

# Orders of magnitude quoted for the entropy of the observable universe.
COSMOLOGICAL_RANGE = (120.0, 122.0)


@dataclass(frozen=True)
class SearchSpaceModel:
    """
    Key search space of size S = 2^(alpha n).

    Attributes:
        n: Key bit length.
        alpha: Density exponent, alpha > 0.
    """

    n: int
    alpha: float = 1.0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise AttackError(f"Key bit length must be >= 0, got {self.n}")
        if not self.alpha > 0.0:
            raise AttackError(f"Density exponent must be positive, got {self.alpha}")

    @property
    def log2_size(self) -> float:
        return self.alpha * self.n

    @property
    def size(self) -> mpmath.mpf:
        return mpmath.power(2, mpmath.mpf(self.log2_size))

    @classmethod
    def from_size(cls, size: int) -> SearchSpaceModel:
        """Model an explicit finite space; S = 1 gives n = 0."""
        if size < 1:
            raise AttackError(f"Search space size must be >= 1, got {size}")
        if size == 1:
            return cls(n=0)
        n = math.ceil(math.log2(size))
        return cls(n=n, alpha=math.log2(size) / n)

    @classmethod
    def from_grid(cls, levels: int, dim: int) -> SearchSpaceModel:
        """
        A q-level grid in each of r components: S = q^r,
        n = r ceil(log2 q) and alpha = log2(S) / n.
        """
        if levels < 2 or dim < 1:
            raise AttackError(f"Grid needs q >= 2 and r >= 1, got q={levels}, r={dim}")
        n = dim * math.ceil(math.log2(levels))
        return cls(n=n, alpha=dim * math.log2(levels) / n)


@dataclass(frozen=True)
class GroverEstimate:
    """
    Query and gate cost of a Grover search.

    Attributes:
        model: The search space.
        queries: Point estimate ceil((pi / 4) sqrt(S)) as an exact integer.
        log2_queries: log2 of the point estimate.
        lower_bound_log2: Exponent alpha n / 2 of the Omega lower bound.
        gate_degree: k in g(n) = n^k.
        log2_gate_cost: log2 Q + k log2 n, the gate bound for the point estimate.
        lower_bound_gate_log2: alpha n / 2 + k log2 n, the gate lower bound.
    """

    model: SearchSpaceModel
    queries: int
    log2_queries: float
    lower_bound_log2: float
    gate_degree: int
    log2_gate_cost: float
    lower_bound_gate_log2: float

    @property
    def log10_queries(self) -> float:
        return self.log2_queries * math.log10(2.0)

    @property
    def log10_lower_bound(self) -> float:
        return log10_pow2(self.lower_bound_log2)


def grover_queries(model: SearchSpaceModel, gate_degree: int = 2) -> GroverEstimate:
    """
    Estimate the Grover cost of a search space.

    g(0) is taken as 1, so a singleton space costs one query and one gate.
    """
    if gate_degree < 0:
        raise AttackError(f"Gate degree must be >= 0, got {gate_degree}")
    half = model.log2_size / 2.0
    # Enough digits to take an exact ceiling of the point estimate.
    dps = max(30, int(half * math.log10(2.0)) + 20)
    with mpmath.workdps(dps):
        point = mpmath.pi / 4 * mpmath.power(2, mpmath.mpf(half))
        queries = int(mpmath.ceil(point))
        log2_q = float(mpmath.log(queries, 2))
    log2_g = gate_degree * math.log2(max(model.n, 1))
    return GroverEstimate(
        model=model,
        queries=queries,
        log2_queries=log2_q,
        lower_bound_log2=half,
        gate_degree=gate_degree,
        log2_gate_cost=log2_q + log2_g,
        lower_bound_gate_log2=half + log2_g,
    )


def log10_pow2(bits: float) -> float:
    """log10(2^bits) = bits * log10(2)."""
    if bits < 0:
        raise AttackError(f"Bit count must be >= 0, got {bits}")
    return bits * math.log10(2.0)


@dataclass(frozen=True)
class CosmologicalMargin:
    """How far 2^bits sits above the cosmological entropy range, in decades."""

    bits: float
    log10_bound: float
    above_low: float
    above_high: float


def cosmological_margin(
    bits: float, reference: tuple[float, float] = COSMOLOGICAL_RANGE
) -> CosmologicalMargin:
    """Compare 2^bits with 10^low .. 10^high."""
    log10_bound = log10_pow2(bits)
    return CosmologicalMargin(
        bits=bits,
        log10_bound=log10_bound,
        above_low=log10_bound - reference[0],
        above_high=log10_bound - reference[1],
    )


def classical_mean_queries(size: int) -> float:
    """Expected queries (S + 1) / 2 of a random-order scan with one marked key."""
    return (size + 1) / 2.0


def classical_quantum_ratio(size: float) -> float:
    """(S / 2) / ((pi / 4) sqrt(S)) = 2 sqrt(S) / pi."""
    if size < 1:
        raise AttackError(f"Search space size must be >= 1, got {size}")
    return (size / 2.0) / (math.pi / 4.0 * math.sqrt(size))
