"""
Torus Manifold Model
~~~~~~~~~~~~~~~~~~~~

Computable model of the compact Calabi-Yau key space: a flat complex
torus of real dimension r, its points, tangent vectors and smooth
tangent-bundle sections realized as truncated Fourier vector fields.

The flat torus has trivial canonical bundle and a Ricci-flat metric, so
it is a genuine compact Calabi-Yau manifold with exact coordinates. The
Kähler data (g, J, omega) play no computational role and are not modeled.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Any

import numpy as np

from zsigil.config.schema import ManifoldConfig
from zsigil.exceptions import DimensionMismatchError, GenerationError, GeometryError

__all__ = [
    "TorusModel",
    "ManifoldPoint",
    "TangentVector",
    "FourierSection",
    "sample_point",
    "evaluate_section",
    "sample_section",
]

logger = logging.getLogger(__name__)

_TWO_PI = 2.0 * np.pi

# Above this many frequency slots, distinct-slot sampling is replaced by
# independent draws.
_MAX_ENUMERABLE_SLOTS = 2**62


@dataclass(frozen=True)
class TorusModel:
    """
    Flat torus R^r / (L_1 Z x ... x L_r Z).

    Attributes:
        r: Real dimension; even, so the complex dimension r/2 is an integer.
        moduli: Side lengths L_j of the fundamental domain, each in (0, 1].
    """

    r: int
    moduli: tuple[float, ...]

    def __post_init__(self) -> None:
        if self.r < 2 or self.r % 2:
            raise GeometryError(f"Torus dimension must be even and >= 2, got {self.r}")
        if len(self.moduli) != self.r:
            raise DimensionMismatchError(
                f"Expected {self.r} moduli, got {len(self.moduli)}"
            )
        if any(not 0.0 < m <= 1.0 for m in self.moduli):
            raise GeometryError(f"Moduli must lie in (0, 1], got {self.moduli!r}")

    @classmethod
    def unit(cls, r: int) -> TorusModel:
        """The torus with every side length equal to 1."""
        return cls(r=r, moduli=(1.0,) * r)

    @classmethod
    def from_config(cls, config: ManifoldConfig) -> TorusModel:
        moduli = config.moduli or [1.0] * config.dimension
        return cls(r=config.dimension, moduli=tuple(float(m) for m in moduli))

    @property
    def complex_dimension(self) -> int:
        return self.r // 2

    @property
    def moduli_array(self) -> np.ndarray:
        return np.asarray(self.moduli, dtype=np.float64)

    def point(self, coords: Any) -> ManifoldPoint:
        """Build a point from arbitrary real coordinates, reducing each modulo L_j."""
        arr = np.asarray(coords, dtype=np.float64)
        if arr.shape != (self.r,):
            raise DimensionMismatchError(
                f"Expected {self.r} coordinates, got shape {arr.shape}"
            )
        if not np.all(np.isfinite(arr)):
            raise GeometryError("Point coordinates must be finite")
        moduli = self.moduli_array
        reduced = np.mod(arr, moduli)
        # np.mod can round a tiny negative up to exactly L_j
        reduced = np.where(reduced >= moduli, 0.0, reduced)
        return ManifoldPoint(coords=tuple(float(x) for x in reduced))


@dataclass(frozen=True)
class ManifoldPoint:
    """A point p of the torus, coordinates already reduced into [0, L_j)."""

    coords: tuple[float, ...]

    @property
    def r(self) -> int:
        return len(self.coords)

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.coords, dtype=np.float64)


@dataclass(frozen=True, eq=False)
class TangentVector:
    """
    An element of the fiber T_pM, identified with R^r.

    Attributes:
        base: The point p the vector is attached to.
        components: r finite real components (read-only array).
    """

    base: ManifoldPoint
    components: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.components, dtype=np.float64)
        if arr.shape != (self.base.r,):
            raise DimensionMismatchError(
                f"Tangent vector at a {self.base.r}-dimensional point "
                f"needs {self.base.r} components, got shape {arr.shape}"
            )
        if not np.all(np.isfinite(arr)):
            raise GeometryError("Tangent vector components must be finite")
        arr.setflags(write=False)
        object.__setattr__(self, "components", arr)

    @property
    def r(self) -> int:
        return self.components.shape[0]

    def scaled(self, factor: float) -> TangentVector:
        """Return factor * self in the same fiber."""
        return TangentVector(self.base, factor * self.components)

    def same_fiber(self, other: TangentVector) -> bool:
        return self.base == other.base


@dataclass(frozen=True, eq=False)
class FourierSection:
    """
    A smooth section sigma of the tangent bundle, one truncated Fourier
    series per output component:

        sigma(x)_c = sum_t a_ct cos(2 pi <k_ct, x/L>) + b_ct sin(2 pi <k_ct, x/L>)

    Attributes:
        moduli: Side lengths of the torus the section lives on.
        frequencies: Integer array (r, T, r); row k_ct has max-norm <= cutoff.
        amplitudes: Real array (r, T, 2) holding (a_ct, b_ct).
        cutoff: Frequency cutoff F.
    """

    moduli: tuple[float, ...]
    frequencies: np.ndarray
    amplitudes: np.ndarray
    cutoff: int

    def __post_init__(self) -> None:
        r = len(self.moduli)
        freqs = np.array(self.frequencies, dtype=np.int64)
        amps = np.array(self.amplitudes, dtype=np.float64)
        if freqs.ndim != 3 or freqs.shape[0] != r or freqs.shape[2] != r:
            raise DimensionMismatchError(
                f"Frequency table must have shape (r, T, r) with r={r}, "
                f"got {freqs.shape}"
            )
        if amps.shape != freqs.shape[:2] + (2,):
            raise DimensionMismatchError(
                f"Amplitude table must have shape {freqs.shape[:2] + (2,)}, "
                f"got {amps.shape}"
            )
        if freqs.size and int(np.abs(freqs).max()) > self.cutoff:
            raise GeometryError(f"Frequency exceeds cutoff {self.cutoff}")
        freqs.setflags(write=False)
        amps.setflags(write=False)
        object.__setattr__(self, "frequencies", freqs)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def r(self) -> int:
        return len(self.moduli)

    @property
    def terms_per_component(self) -> int:
        return self.frequencies.shape[1]

    def __call__(self, p: ManifoldPoint) -> TangentVector:
        return evaluate_section(self, p)


# ── Operations ───────────────────────────────────────────────────────────────


def sample_point(model: TorusModel, rng: np.random.Generator) -> ManifoldPoint:
    """
    Draw a base point uniformly from the fundamental domain.

    Deterministic given the generator state.
    """
    coords = rng.random(model.r) * model.moduli_array
    return model.point(coords)


def evaluate_section(sec: FourierSection, p: ManifoldPoint) -> TangentVector:
    """
    Evaluate sigma(p); the result is attached to p, so pi(sigma(p)) = p.

    Raises:
        DimensionMismatchError: If the section and point dimensions differ.
    """
    if sec.r != p.r:
        raise DimensionMismatchError(
            f"Section of dimension {sec.r} evaluated at a {p.r}-dimensional point"
        )
    scaled = p.array / np.asarray(sec.moduli, dtype=np.float64)
    phase = _TWO_PI * (sec.frequencies @ scaled)
    values = (
        sec.amplitudes[..., 0] * np.cos(phase) + sec.amplitudes[..., 1] * np.sin(phase)
    ).sum(axis=1)
    return TangentVector(base=p, components=values)


def _frequency_table(
    r: int, cutoff: int, max_terms: int, rng: np.random.Generator
) -> np.ndarray:
    """Pick the frequency vectors of each component, shape (r, T, r)."""
    base = 2 * cutoff + 1
    slots = base**r
    if slots <= max_terms:
        grid = np.array(
            list(itertools.product(range(-cutoff, cutoff + 1), repeat=r)),
            dtype=np.int64,
        )
        return np.broadcast_to(grid, (r,) + grid.shape).copy()

    if slots > _MAX_ENUMERABLE_SLOTS:
        return rng.integers(-cutoff, cutoff + 1, size=(r, max_terms, r))

    place = base ** np.arange(r, dtype=np.int64)
    table = np.empty((r, max_terms, r), dtype=np.int64)
    for c in range(r):
        idx = rng.choice(slots, size=max_terms, replace=False)
        table[c] = (idx[:, None] // place) % base - cutoff
    return table


def sample_section(
    model: TorusModel,
    cutoff: int,
    rng: np.random.Generator,
    base: ManifoldPoint,
    max_terms: int = 32,
    value_range: tuple[float, float] = (0.1, 10.0),
    budget: int = 64,
) -> FourierSection:
    """
    Draw a sparse truncated Fourier section with standard normal amplitudes.

    The section is resampled until every component of sigma(base) has
    absolute value inside ``value_range``, which keeps the private key
    derived from it well conditioned.

    Args:
        model: The torus the section lives on.
        cutoff: Frequency cutoff F >= 0.
        rng: Seeded generator; the result is deterministic given its state.
        base: The paired base point the conditioning guard is checked at.
        max_terms: Sparsity cap per component.
        value_range: Admissible [low, high] for |sigma(base)_j|.
        budget: Maximum number of draws.

    Raises:
        GenerationError: If no draw satisfies the guard within ``budget``.
    """
    if cutoff < 0:
        raise GeometryError(f"Frequency cutoff must be >= 0, got {cutoff}")
    lo, hi = value_range
    for attempt in range(budget):
        freqs = _frequency_table(model.r, cutoff, max_terms, rng)
        amps = rng.standard_normal(freqs.shape[:2] + (2,))
        section = FourierSection(
            moduli=model.moduli, frequencies=freqs, amplitudes=amps, cutoff=cutoff
        )
        magnitudes = np.abs(evaluate_section(section, base).components)
        if np.all((magnitudes >= lo) & (magnitudes <= hi)):
            if attempt:
                logger.debug("Section accepted after %d resamples", attempt)
            return section
    raise GenerationError(
        f"No section met the conditioning guard {value_range} in {budget} draws",
        details={"cutoff": cutoff, "budget": budget},
    )
